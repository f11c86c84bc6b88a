#include "dmz/io.hpp"

#include <sstream>

#include <json.hpp>

namespace dmz::io {

using ojson = nlohmann::ordered_json;

std::string distribution_json(const WeightDistribution& mu, const WeylWord& word) {
  ojson doc;
  doc["highest_weight"] = {{"m", mu.highest_weight().m()}, {"n", mu.highest_weight().n()}};
  doc["word"] = {{"length", word.length()}, {"first", word.first()}};
  ojson entries = ojson::array();
  for (const auto& [p, c] : mu.sorted_by_coordinates())
    entries.push_back({{"a", p.a}, {"b", p.b}, {"mult", to_string(c)}});
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

std::string distribution_csv(const WeightDistribution& mu) {
  std::ostringstream os;
  os << "a,b,mult\n";
  for (const auto& [p, c] : mu.sorted_by_coordinates()) os << p.a << ',' << p.b << ',' << to_string(c) << '\n';
  return os.str();
}

std::pair<WeightDistribution, WeylWord> parse_distribution_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const HighestWeight hw(doc.at("highest_weight").at("m").get<int>(), doc.at("highest_weight").at("n").get<int>());
  const WeylWord word(doc.at("word").at("length").get<int>(), doc.at("word").at("first").get<int>());
  std::vector<WeightDistribution::Entry> entries;
  for (const auto& e : doc.at("entries"))
    entries.emplace_back(LatticePoint{e.at("a").get<std::int64_t>(), e.at("b").get<std::int64_t>()},
                         Integer(e.at("mult").get<std::string>()));
  return {WeightDistribution(hw, std::move(entries)), word};
}

std::string summaries_csv(const std::vector<RescaledSummary>& summaries) {
  std::ostringstream os;
  os << "level,N,max_degree,mean_deg,var_deg,mean_fin,var_fin\n";
  for (const auto& s : summaries) {
    os << s.level << ',' << s.N << ',' << s.max_degree << ',' << to_string(s.mean_degree_scaled) << ','
       << to_string(s.var_degree_scaled) << ',' << to_string(s.mean_finweight_scaled) << ','
       << to_string(s.var_finweight_scaled) << '\n';
  }
  return os.str();
}

std::string fit_report_json(const ConjectureReport& report) {
  ojson doc;
  doc["level"] = report.level;
  ojson fit = ojson::array();
  for (const auto& c : report.fit.coeffs) fit.push_back(to_string(c));
  doc["fit"] = std::move(fit);
  doc["table_match"] = report.table_match();
  doc["max_degree_match"] = report.max_degree_match;
  return doc.dump() + "\n";
}

}  // namespace dmz::io
