#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "phom/pipeline.hpp"

using namespace phom;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir{PHOM_TEST_DATA};

class PipelineTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("phom_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name), std::ios::binary) << content;
    return path(name);
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(RunConfig c) {
    out_.str("");
    err_.str("");
    return run_compute(c, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

} // namespace

TEST_F(PipelineTest, SquareGolden) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("pairs.json");
  ASSERT_EQ(run(c), exit_ok) << err_.str();
  EXPECT_EQ(slurp(c.output), "[\n"
                             "  {\"dim\": 0, \"birth\": 0, \"death\": 1},\n"
                             "  {\"dim\": 0, \"birth\": 0, \"death\": 1},\n"
                             "  {\"dim\": 0, \"birth\": 0, \"death\": 1},\n"
                             "  {\"dim\": 0, \"birth\": 0, \"death\": null},\n"
                             "  {\"dim\": 1, \"birth\": 1, \"death\": 1.41421356237}\n"
                             "]\n");
  EXPECT_NE(out_.str().find("b0=1 b1=0"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("top 5 features:"), std::string::npos);
}

TEST_F(PipelineTest, KeepZeroExportsEveryPair) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("pairs.json");
  c.drop_zero = false;
  ASSERT_EQ(run(c), exit_ok);
  std::ifstream in(c.output);
  EXPECT_EQ(read_pairs(in).size(), 7u);
}

TEST_F(PipelineTest, LowerDistanceMatchesPoints) {
  RunConfig a;
  a.input = data_dir / "square.csv";
  a.output = path("a.json");
  RunConfig b = a;
  b.input = data_dir / "square_lower.txt";
  b.format = InputFormat::lower_distance;
  b.output = path("b.json");
  ASSERT_EQ(run(a), exit_ok);
  ASSERT_EQ(run(b), exit_ok) << err_.str();
  EXPECT_EQ(slurp(a.output), slurp(b.output));
}

TEST_F(PipelineTest, Deterministic) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("1.json");
  ASSERT_EQ(run(c), exit_ok);
  const auto first_stdout = out_.str();
  c.output = path("2.json");
  c.strategy = ReductionStrategy::twist;
  ASSERT_EQ(run(c), exit_ok);
  EXPECT_EQ(slurp(path("1.json")), slurp(path("2.json")));
  EXPECT_EQ(first_stdout, out_.str());
}

TEST_F(PipelineTest, EmptyInput) {
  RunConfig c;
  c.input = write("empty.csv", "");
  c.output = path("pairs.json");
  ASSERT_EQ(run(c), exit_ok) << err_.str();
  EXPECT_EQ(slurp(c.output), "[]\n");
}

TEST_F(PipelineTest, MissingInputIsExit2) {
  RunConfig c;
  c.input = path("nope.csv");
  c.output = path("pairs.json");
  EXPECT_EQ(run(c), exit_io_error);
  EXPECT_NE(err_.str().find("nope.csv"), std::string::npos);
}

TEST_F(PipelineTest, ParseErrorIsExit3WithLine) {
  RunConfig c;
  c.input = data_dir / "ragged.csv";
  c.output = path("pairs.json");
  EXPECT_EQ(run(c), exit_parse_error);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();
}

TEST_F(PipelineTest, InvalidConfigIsExit4) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("pairs.json");
  for (auto mutate : {+[](RunConfig& r) { r.max_dim = -1; }, +[](RunConfig& r) { r.max_eps = 0.0; },
                      +[](RunConfig& r) { r.field = 9; }}) {
    RunConfig bad = c;
    mutate(bad);
    EXPECT_EQ(run(bad), exit_invalid_config);
  }
}

TEST_F(PipelineTest, MaxEpsAndIndexLevel) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("pairs.json");
  c.max_eps = 1.2;
  ASSERT_EQ(run(c), exit_ok);
  EXPECT_NE(out_.str().find("b0=1 b1=1"), std::string::npos) << out_.str();
  c.max_eps = unbounded;
  c.index_level = true;
  ASSERT_EQ(run(c), exit_ok);
  std::ifstream in(c.output);
  const auto pairs = read_pairs(in);
  EXPECT_EQ(pairs.back(), (PersistencePair{1, 2.0, 3.0}));
}

TEST_F(PipelineTest, MaxDimZeroReportsNoHomology) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("pairs.json");
  c.max_dim = 0;
  ASSERT_EQ(run(c), exit_ok);
  EXPECT_EQ(slurp(c.output), "[]\n");
  EXPECT_NE(out_.str().find("none"), std::string::npos);
}

TEST_F(PipelineTest, ComputeWithPlotThenReplot) {
  RunConfig c;
  c.input = data_dir / "square.csv";
  c.output = path("pairs.json");
  c.plot = PlotKind::barcode;
  ASSERT_EQ(run(c), exit_ok);
  EXPECT_TRUE(fs::exists(path("pairs.json.svg")));

  PlotConfig p;
  p.pairs = c.output;
  p.kind = PlotKind::diagram;
  p.out = path("diagram.svg");
  EXPECT_EQ(run_plot(p, err_), exit_ok);
  EXPECT_NE(slurp(p.out).find("class=\"diagonal\""), std::string::npos);

  p.infinity_cap = 1.0;
  EXPECT_EQ(run_plot(p, err_), exit_invalid_config);
  p.infinity_cap = 3.0;
  EXPECT_EQ(run_plot(p, err_), exit_ok);

  p.pairs = data_dir / "bad_pairs.json";
  EXPECT_EQ(run_plot(p, err_), exit_parse_error);
  p.pairs = path("missing.json");
  EXPECT_EQ(run_plot(p, err_), exit_io_error);
}

TEST(ParseScale, AcceptsInfinity) {
  EXPECT_TRUE(std::isinf(parse_scale("inf")));
  EXPECT_TRUE(std::isinf(parse_scale("Infinity")));
  EXPECT_EQ(parse_scale("0.25"), 0.25);
  EXPECT_THROW(parse_scale("abc"), InvalidArgument);
  EXPECT_THROW(parse_scale(""), InvalidArgument);
}
