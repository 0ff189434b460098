#pragma once

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "phom/errors.hpp"
#include "phom/persistence.hpp"

namespace phom {

/// Shortest decimal at 12 significant digits, independent of locale.
inline std::string format_decimal(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, r.ptr);
}

/// JSON array of {"dim", "birth", "death"} records sorted by (dim, birth,
/// death); essential deaths are null. One record per line.
inline void write_pairs(std::ostream& os, std::vector<PersistencePair> pairs) {
  std::sort(pairs.begin(), pairs.end(), bar_less);
  if (pairs.empty()) {
    os << "[]\n";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    os << "  {\"dim\": " << p.dim << ", \"birth\": " << format_decimal(p.birth) << ", \"death\": "
       << (p.essential() ? std::string("null") : format_decimal(p.death)) << '}'
       << (i + 1 < pairs.size() ? ",\n" : "\n");
  }
  os << "]\n";
}

inline std::vector<PersistencePair> read_pairs(std::istream& is) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("pairs file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw ParseError(0, "pairs file must hold a JSON array");

  std::vector<PersistencePair> pairs;
  pairs.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& rec = doc[i];
    const auto where = "record " + std::to_string(i) + ": ";
    if (!rec.is_object() || !rec.contains("dim") || !rec.contains("birth") || !rec.contains("death"))
      throw ParseError(0, where + "expected an object with dim, birth and death");
    const auto& dim = rec["dim"];
    const auto& birth = rec["birth"];
    const auto& death = rec["death"];
    if (!dim.is_number_integer() || dim.get<long long>() < 0)
      throw ParseError(0, where + "dim must be a nonnegative integer");
    if (!birth.is_number())
      throw ParseError(0, where + "birth must be a number");
    if (!death.is_number() && !death.is_null())
      throw ParseError(0, where + "death must be a number or null");
    PersistencePair p{dim.get<int>(), birth.get<double>(),
                      death.is_null() ? infinite_death : death.get<double>()};
    if (!(p.birth <= p.death))
      throw ParseError(0, where + "birth exceeds death");
    pairs.push_back(p);
  }
  return pairs;
}

} // namespace phom
