#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dmz/numeric.hpp"

namespace dmz::verify {

/// One exact comparison lhs == rhs.
struct Check {
  std::string identity;
  int N = 0;
  Rational lhs;
  Rational rhs;

  bool pass() const { return lhs == rhs; }
  /// "PASS|FAIL <identity> N=<n> lhs=<p/q> rhs=<p/q>"
  std::string line() const;
};

enum class Suite { all, sanderson, palindrome, stretch, recurrence, covariance, conjecture };

/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct Options {
  int min_N = 1;
  int max_N = 20;
  std::vector<int> conjecture_levels{2, 3, 4};
  std::vector<int> conjecture_lengths{2, 4, 6, 8, 10};
};

// Level-1 suites run over hw = Lambda_0, word (N, first = 0) unless noted.
std::vector<Check> sanderson_checks(const Options& opt);
std::vector<Check> palindrome_checks(const Options& opt);
std::vector<Check> stretch_checks(const Options& opt);
std::vector<Check> recurrence_checks(const Options& opt);
/// Covariance matrix of V_{w_{N,j}}(Lambda_j) for j = 0, 1.
std::vector<Check> covariance_checks(const Options& opt);
std::vector<Check> conjecture_checks(const Options& opt);

std::vector<Check> run_suite(Suite suite, const Options& opt);

bool all_pass(const std::vector<Check>& checks);

}  // namespace dmz::verify
