#include "dmz/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace dmz {

HighestWeight::HighestWeight(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw std::invalid_argument("highest weight coefficients must be nonnegative");
  if (m + n < 1) throw std::invalid_argument("highest weight must have level >= 1");
}

HighestWeight HighestWeight::fundamental(int j) {
  if (j != 0 && j != 1) throw std::invalid_argument("generator index must be 0 or 1");
  return j == 0 ? HighestWeight(1, 0) : HighestWeight(0, 1);
}

std::int64_t coroot_pairing(int j, const HighestWeight& hw, const LatticePoint& p) {
  if (j == 0) return hw.m() - 2 * p.diff();
  if (j == 1) return hw.n() + 2 * p.diff();
  throw std::invalid_argument("generator index must be 0 or 1");
}

std::int64_t finite_weight(const HighestWeight& hw, const LatticePoint& p) {
  return coroot_pairing(1, hw, p);
}

LatticePoint step(const LatticePoint& p, int j, std::int64_t i) {
  if (j == 0) return {p.a + i, p.b};
  if (j == 1) return {p.a, p.b + i};
  throw std::invalid_argument("generator index must be 0 or 1");
}

Functional::Functional(const Rational& constant) { add_term({0, 0}, constant); }

Functional Functional::monomial(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  Functional f;
  f.add_term({i, j}, c);
  return f;
}

Functional Functional::coroot(int j, const HighestWeight& hw) {
  if (j == 0) return Rational(hw.m()) - Rational(2) * diff();
  if (j == 1) return Rational(hw.n()) + Rational(2) * diff();
  throw std::invalid_argument("generator index must be 0 or 1");
}

int Functional::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

void Functional::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Functional::operator()(const LatticePoint& p) const {
  return (*this)(Rational(p.a), Rational(p.b));
}

Rational Functional::operator()(const Rational& a, const Rational& b) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(a, e.first) * power(b, e.second);
  return sum;
}

std::pair<std::map<Functional::Exponents, Integer>, Integer> Functional::integral_form() const {
  Integer den = 1;
  for (const auto& [e, c] : terms_) den = mp::lcm(den, Integer(mp::denominator(c)));
  std::map<Exponents, Integer> out;
  for (const auto& [e, c] : terms_) out.emplace(e, Integer(mp::numerator(c)) * (den / Integer(mp::denominator(c))));
  return {std::move(out), den};
}

Functional Functional::pow(unsigned k) const {
  Functional result(Rational(1));
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

Functional& Functional::operator+=(const Functional& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Functional& Functional::operator-=(const Functional& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Functional& Functional::operator*=(const Functional& o) {
  Functional product;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      product.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  terms_ = std::move(product.terms_);
  return *this;
}

Functional& Functional::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

std::string Functional::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (e.first > 0) os << "*a^" << e.first;
    if (e.second > 0) os << "*b^" << e.second;
  }
  return os.str();
}

}  // namespace dmz
