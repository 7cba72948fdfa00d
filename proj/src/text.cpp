#include "spcoh/text.hpp"

#include <cctype>
#include <sstream>

#include "spcoh/errors.hpp"

namespace spcoh {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Bipartition& b) { return Json::array({to_json(b.first), to_json(b.second)}); }

Json to_json(const Symbol& s) { return Json{{"top", s.top()}, {"bottom", s.bottom()}}; }

Json to_json(const RepMultiset& reps) {
  Json arr = Json::array();
  for (const auto& [s, m] : reps)
    for (int k = 0; k < m; ++k) arr.push_back(to_json(s));
  return arr;
}

Json to_json(const FrobEigenvalue& e) { return Json{{"sign", e.sign}, {"exp", e.exp}}; }

Json to_json(const OracleCounts& c) {
  Json per = Json::object();
  for (const auto& [tp, count] : c.per_stratum) per[std::to_string(tp)] = count;
  return Json{{"total", c.total}, {"per_stratum", per}, {"lagrangians", c.lagrangians}};
}

Symbol symbol_from_json(const Json& j) {
  try {
    return Symbol::normalize(j.at("top").get<std::vector<int>>(), j.at("bottom").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed symbol JSON: ") + e.what());
  }
}

Partition parse_partition(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("partition must look like (3,1)");
  t = t.substr(1, t.size() - 2);
  std::vector<int> parts;
  std::istringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad part '" + item + "' in partition");
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw ParseError("partition parts must be non-increasing");
  for (int v : parts)
    if (v <= 0) throw ParseError("partition parts must be positive");
  return Partition(parts);
}

std::string join_symbols(const RepMultiset& reps) {
  std::string out;
  for (const auto& [s, m] : reps)
    for (int k = 0; k < m; ++k) {
      if (!out.empty()) out += ' ';
      out += to_string(s);
    }
  return out;
}

}  // namespace spcoh
