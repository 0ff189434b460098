#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "phom/metric_space.hpp"
#include "test_support.hpp"

using namespace phom;

TEST(LoadPointCloud, ParsesRowsInOrder) {
  std::istringstream in("0,0\n1,0\n");
  const auto cloud = load_point_cloud(in);
  ASSERT_EQ(cloud.size(), 2u);
  EXPECT_EQ(cloud.dimension(), 2u);
  EXPECT_EQ(cloud[1][0], 1.0);
  EXPECT_EQ(cloud[1][1], 0.0);
}

TEST(LoadPointCloud, ArityMismatchNamesLine) {
  std::istringstream in("0,0\n1\n");
  try {
    load_point_cloud(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadPointCloud, EmptyInputIsEmptyCloud) {
  std::istringstream in("");
  EXPECT_EQ(load_point_cloud(in).size(), 0u);
}

TEST(LoadPointCloud, HeaderCommentAndWhitespace) {
  std::istringstream in("# x,y\n 0.5 , -2e-1\r\n\n3,4\n");
  const auto cloud = load_point_cloud(in);
  ASSERT_EQ(cloud.size(), 2u);
  EXPECT_DOUBLE_EQ(cloud[0][1], -0.2);
}

TEST(LoadPointCloud, RejectsGarbageAndNonFinite) {
  for (const char* bad : {"0,a\n", "0,,1\n", "nan,0\n", "inf,1\n", "1,2,\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(load_point_cloud(in), ParseError) << bad;
  }
}

TEST(ReadLowerDistance, SquareMatrix) {
  std::istringstream in("1\n1.5, 1\n1 2 1\n");
  const auto dm = read_lower_distance(in);
  ASSERT_EQ(dm.size(), 4u);
  EXPECT_EQ(dm(2, 0), 1.5);
  EXPECT_EQ(dm(0, 2), 1.5);
  EXPECT_EQ(dm(3, 1), 2.0);
  EXPECT_EQ(dm(3, 3), 0.0);
}

TEST(ReadLowerDistance, OptionalLeadingBlankRow) {
  std::istringstream with("\n1\n2 3\n");
  std::istringstream without("1\n2 3\n");
  EXPECT_EQ(read_lower_distance(with).size(), 3u);
  EXPECT_EQ(read_lower_distance(without).size(), 3u);
}

TEST(ReadLowerDistance, WrongRowLengthNamesLine) {
  std::istringstream in("1\n2\n");
  try {
    read_lower_distance(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ReadLowerDistance, RejectsNegative) {
  std::istringstream in("-1\n");
  EXPECT_THROW(read_lower_distance(in), ParseError);
}

TEST(PairwiseDistances, ThreeFourFive) {
  const auto dm = pairwise_distances(PointCloud::from_rows({{0, 0}, {3, 4}}));
  EXPECT_EQ(dm(0, 1), 5.0);
  EXPECT_EQ(pairwise_distances(PointCloud::from_rows({{0, 0}, {3, 4}}), Metric::manhattan)(0, 1), 7.0);
  EXPECT_EQ(pairwise_distances(PointCloud::from_rows({{0, 0}, {3, 4}}), Metric::chebyshev)(0, 1), 4.0);
}

TEST(PairwiseDistances, SinglePoint) {
  const auto dm = pairwise_distances(PointCloud::from_rows({{2, 7}}));
  ASSERT_EQ(dm.size(), 1u);
  EXPECT_EQ(dm(0, 0), 0.0);
}

TEST(PairwiseDistances, UnitSquareAgainstScalarOracle) {
  const auto cloud = fixtures::unit_square();
  const auto dm = pairwise_distances(cloud);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double dx = cloud[i][0] - cloud[j][0];
      const double dy = cloud[i][1] - cloud[j][1];
      EXPECT_DOUBLE_EQ(dm(i, j), std::hypot(dx, dy)) << i << ',' << j;
    }
  EXPECT_EQ(dm(0, 1), 1.0);
  EXPECT_EQ(dm(0, 2), std::sqrt(2.0));
}

TEST(PairwiseDistances, TranslationInvariance) {
  std::mt19937_64 rng(7);
  for (Metric metric : {Metric::euclidean, Metric::manhattan, Metric::chebyshev}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto cloud = fixtures::random_cloud(rng, 9, 3);
      const auto dm = pairwise_distances(cloud, metric);
      std::vector<double> shifted_int, shifted_frac;
      for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t k = 0; k < 3; ++k) {
          shifted_int.push_back(cloud[i][k] + static_cast<double>(k + 3));
          shifted_frac.push_back(cloud[i][k] + 0.3125 * static_cast<double>(k) + 0.1);
        }
      const auto di = pairwise_distances(PointCloud(3, shifted_int), metric);
      const auto df = pairwise_distances(PointCloud(3, shifted_frac), metric);
      for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = 0; j < cloud.size(); ++j) {
          EXPECT_NEAR(di(i, j), dm(i, j), 1e-12);
          EXPECT_NEAR(df(i, j), dm(i, j), 1e-12);
        }
    }
  }
}

TEST(PairwiseDistances, IntegerTranslationOfIntegerCloudIsBitExact) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a, b;
    for (int i = 0; i < 8 * 2; ++i) {
      const double v = coord(rng);
      a.push_back(v);
      b.push_back(v + (i % 2 ? 17.0 : -9.0));
    }
    for (Metric metric : {Metric::euclidean, Metric::manhattan, Metric::chebyshev}) {
      const auto da = pairwise_distances(PointCloud(2, a), metric);
      const auto db = pairwise_distances(PointCloud(2, b), metric);
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          EXPECT_EQ(da(i, j), db(i, j));
    }
  }
}

TEST(PairwiseDistances, PermutationConsistency) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cloud = fixtures::random_cloud(rng, 10, 2);
    std::vector<std::size_t> perm(cloud.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto dm = pairwise_distances(cloud);
    const auto dp = pairwise_distances(fixtures::permute_cloud(cloud, perm));
    for (std::size_t i = 0; i < cloud.size(); ++i)
      for (std::size_t j = 0; j < cloud.size(); ++j)
        EXPECT_EQ(dp(perm[i], perm[j]), dm(i, j));
  }
}

TEST(PairwiseDistances, NonnegativeWithZeroDiagonal) {
  std::mt19937_64 rng(5);
  const auto dm = pairwise_distances(fixtures::random_cloud(rng, 12, 4), Metric::manhattan);
  for (std::size_t i = 0; i < dm.size(); ++i) {
    EXPECT_EQ(dm(i, i), 0.0);
    for (std::size_t j = 0; j < dm.size(); ++j)
      EXPECT_GE(dm(i, j), 0.0);
  }
}

TEST(DistanceMatrix, RejectsBadShapes) {
  EXPECT_THROW(DistanceMatrix(3, {1.0, 2.0}), InvalidArgument);
  EXPECT_THROW(DistanceMatrix(2, {-1.0}), InvalidArgument);
  EXPECT_THROW(PointCloud::from_rows({{0, 0}, {1}}), InvalidArgument);
}
