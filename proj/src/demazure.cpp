#include "dmz/demazure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dmz {

WeylWord::WeylWord(int length, int first) : length_(length), first_(first) {
  if (length < 0) throw std::invalid_argument("word length must be nonnegative");
  if (first != 0 && first != 1) throw std::invalid_argument("generator index must be 0 or 1");
}

WeylWord WeylWord::parse(std::string_view letters) {
  std::string digits;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (c == 's' || c == ' ') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("word letters must be 0 or 1");
    digits.push_back(c);
  }
  if (digits.empty()) return WeylWord(0, 0);
  for (std::size_t i = 1; i < digits.size(); ++i)
    if (digits[i] == digits[i - 1]) throw std::invalid_argument("word is not alternating (not reduced)");
  return WeylWord(static_cast<int>(digits.size()), digits.back() - '0');
}

namespace {

void normalize(std::vector<WeightDistribution::Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return StringOrder{}(x.first, y.first); });
  std::vector<WeightDistribution::Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  entries = std::move(merged);
}

}  // namespace

WeightDistribution::WeightDistribution(HighestWeight hw, std::vector<Entry> entries)
    : hw_(hw), entries_(std::move(entries)) {
  normalize(entries_);
}

WeightDistribution WeightDistribution::unit(HighestWeight hw, LatticePoint p) {
  return WeightDistribution(hw, {{p, Integer(1)}});
}

Integer WeightDistribution::at(const LatticePoint& p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, const LatticePoint& q) { return StringOrder{}(e.first, q); });
  if (it != entries_.end() && it->first == p) return it->second;
  return 0;
}

std::vector<WeightDistribution::Entry> WeightDistribution::sorted_by_coordinates() const {
  auto out = entries_;
  std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return out;
}

WeightDistribution apply_demazure(int j, const WeightDistribution& mu) {
  if (j != 0 && j != 1) throw std::invalid_argument("generator index must be 0 or 1");

  // D_j adds the source mass on a contiguous run of the alpha_j-string through
  // the source point, so it is a sum of range updates on lines of fixed b
  // (j = 0) or fixed a (j = 1). Each range becomes two difference events.
  struct Event {
    std::int64_t line;
    std::int64_t pos;
    std::size_t source;
    int sign;
  };
  const auto& src = mu.entries();
  std::vector<Event> events;
  events.reserve(2 * src.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const LatticePoint& p = src[s].first;
    const std::int64_t k = coroot_pairing(j, mu.highest_weight(), p);
    const std::int64_t line = j == 0 ? p.b : p.a;
    const std::int64_t pos = j == 0 ? p.a : p.b;
    if (k >= 0) {
      events.push_back({line, pos, s, +1});
      events.push_back({line, pos + k + 1, s, -1});
    } else if (k <= -2) {
      events.push_back({line, pos + k + 1, s, -1});
      events.push_back({line, pos, s, +1});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
    return x.line != y.line ? x.line < y.line : x.pos < y.pos;
  });

  std::vector<WeightDistribution::Entry> out;
  Integer running = 0;
  for (std::size_t e = 0; e < events.size();) {
    const std::int64_t line = events[e].line;
    const std::int64_t pos = events[e].pos;
    for (; e < events.size() && events[e].line == line && events[e].pos == pos; ++e) {
      if (events[e].sign > 0)
        running += src[events[e].source].second;
      else
        running -= src[events[e].source].second;
    }
    // The running sum is 0 at the end of every line.
    if (e == events.size() || events[e].line != line || running == 0) continue;
    for (std::int64_t x = pos; x < events[e].pos; ++x)
      out.emplace_back(j == 0 ? LatticePoint{x, line} : LatticePoint{line, x}, running);
  }
  return WeightDistribution(mu.highest_weight(), std::move(out));
}

DemazureSweep::DemazureSweep(HighestWeight hw, int first)
    : first_(first), current_(WeightDistribution::unit(hw)) {
  if (first != 0 && first != 1) throw std::invalid_argument("generator index must be 0 or 1");
}

const WeightDistribution& DemazureSweep::advance() {
  ++length_;
  current_ = apply_demazure((first_ + length_ - 1) % 2, current_);
  return current_;
}

const WeightDistribution& DemazureSweep::advance_to(int length) {
  if (length < length_) throw std::invalid_argument("sweep cannot move backwards");
  while (length_ < length) advance();
  return current_;
}

WeightDistribution weight_distribution(const HighestWeight& hw, const WeylWord& word) {
  DemazureSweep sweep(hw, word.first());
  return sweep.advance_to(word.length());
}

Integer total_mass(const WeightDistribution& mu) {
  Integer sum = 0;
  for (const auto& [p, c] : mu) sum += c;
  return sum;
}

std::map<Rational, Integer> marginal(const WeightDistribution& mu, const Functional& f) {
  std::map<Rational, Integer> out;
  for (const auto& [p, c] : mu) out[f(p)] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace dmz
