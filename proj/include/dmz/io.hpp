#pragma once

#include <string>
#include <vector>

#include "dmz/asymptotics.hpp"
#include "dmz/demazure.hpp"

namespace dmz::io {

/// {"highest_weight":{"m","n"},"word":{"length","first"},"entries":[{"a","b","mult"}]}
/// with entries sorted by (a, b) and multiplicities as decimal strings.
std::string distribution_json(const WeightDistribution& mu, const WeylWord& word);

/// Header "a,b,mult", rows sorted by (a, b).
std::string distribution_csv(const WeightDistribution& mu);

/// Parses the JSON export back into a distribution and its word.
std::pair<WeightDistribution, WeylWord> parse_distribution_json(const std::string& text);

/// Header "level,N,max_degree,mean_deg,var_deg,mean_fin,var_fin".
std::string summaries_csv(const std::vector<RescaledSummary>& summaries);

/// {"level":m,"fit":["c0","c1","c2","c3"],"table_match":bool,"max_degree_match":bool}
std::string fit_report_json(const ConjectureReport& report);

}  // namespace dmz::io
