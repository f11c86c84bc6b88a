#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "dmz/lattice.hpp"
#include "dmz/numeric.hpp"

namespace dmz {

/// Alternating Weyl group element w_{N,first} = ... s_{1-first} s_{first}.
class WeylWord {
 public:
  WeylWord(int length, int first);

  /// Parses a word written left to right, e.g. "010" for s0 s1 s0 (the
  /// rightmost letter acts first). Non-alternating words are rejected.
  static WeylWord parse(std::string_view letters);

  int length() const { return length_; }
  int first() const { return first_; }

  /// Generator applied at position t = 1..length (t = 1 acts first).
  int letter(int t) const { return (first_ + t - 1) % 2; }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;

 private:
  int length_;
  int first_;
};

/// Finitely supported signed measure on the lattice of a highest weight.
///
/// Entries are kept sorted in StringOrder (strings of fixed a - b are
/// contiguous) and never hold a zero multiplicity.
class WeightDistribution {
 public:
  using Entry = std::pair<LatticePoint, Integer>;

  explicit WeightDistribution(HighestWeight hw) : hw_(hw) {}
  WeightDistribution(HighestWeight hw, std::vector<Entry> entries);

  static WeightDistribution unit(HighestWeight hw, LatticePoint p = {});

  const HighestWeight& highest_weight() const { return hw_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Multiplicity at p, 0 when p is outside the support.
  Integer at(const LatticePoint& p) const;

  /// Entries ordered lexicographically by (a, b), the export order.
  std::vector<Entry> sorted_by_coordinates() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  HighestWeight hw_;
  std::vector<Entry> entries_;
};

/// Demazure operator D_j, extended linearly to signed measures.
WeightDistribution apply_demazure(int j, const WeightDistribution& mu);

/// D_{j_N} ... D_{j_1} delta_Lambda for the alternating word.
WeightDistribution weight_distribution(const HighestWeight& hw, const WeylWord& word);

/// Walks the prefixes of w_{N,first} for N = 0, 1, 2, ..., one operator per step.
class DemazureSweep {
 public:
  DemazureSweep(HighestWeight hw, int first);

  int length() const { return length_; }
  const WeightDistribution& current() const { return current_; }
  const WeightDistribution& advance();
  const WeightDistribution& advance_to(int length);

 private:
  int first_;
  int length_ = 0;
  WeightDistribution current_;
};

Integer total_mass(const WeightDistribution& mu);

/// Push-forward of mu along f.
std::map<Rational, Integer> marginal(const WeightDistribution& mu, const Functional& f);

}  // namespace dmz
