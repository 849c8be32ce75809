#ifndef POLARIS_SPAN_HPP
#define POLARIS_SPAN_HPP

// Exact linear span of polynomials by fraction-free elimination. Rows are primitive
// integer vectors indexed by monomials; each row's pivot is its lowest monomial in
// graded lex order, and reduction walks pivots in ascending order.

#include "polaris/polynomial.hpp"

#include <map>
#include <vector>

namespace polaris {

class EchelonBasis {
 public:
  using Row = std::map<Monomial, BigInt, GrlexLess>;

  EchelonBasis() = default;

  std::size_t rank() const { return rows_.size(); }

  /// Adds p to the span; returns true when p was independent of what is already there.
  bool insert(const Polynomial& p) {
    remember_shape(p);
    Row r = reduce(to_row(p));
    if (r.empty()) return false;
    normalize(r);
    Monomial pivot = r.begin()->first;
    rows_.emplace(std::move(pivot), std::move(r));
    return true;
  }

  bool contains(const Polynomial& p) const { return reduce(to_row(p)).empty(); }

  /// The stored rows as polynomials (integer coefficients, pivot coefficient positive).
  std::vector<Polynomial> basis() const {
    std::vector<Polynomial> out;
    for (const auto& [pivot, row] : rows_) {
      Polynomial p(blocks_, coords_);
      for (const auto& [m, c] : row) p.add_term(m, Rational(c));
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  void remember_shape(const Polynomial& p) {
    if (blocks_ == 0) {
      blocks_ = p.blocks();
      coords_ = p.coords();
    } else if (blocks_ != p.blocks() || coords_ != p.coords()) {
      throw std::invalid_argument("span of polynomials on different spaces");
    }
  }

  static Row to_row(const Polynomial& p) {
    BigInt lcm = 1;
    for (const auto& [m, c] : p.terms()) {
      const BigInt& den = boost::multiprecision::denominator(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    Row r;
    for (const auto& [m, c] : p.terms())
      r.emplace_hint(r.end(), m, boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
    return r;
  }

  static void normalize(Row& r) {
    BigInt g = 0;
    for (const auto& [m, c] : r) g = boost::multiprecision::gcd(g, c);
    if (r.begin()->second < 0) g = -g;
    if (g != 1)
      for (auto& [m, c] : r) c /= g;
  }

  Row reduce(Row v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto found = rows_.find(it->first);
      if (found == rows_.end()) {
        ++it;
        continue;
      }
      const Monomial pivot = it->first;
      const Row& row = found->second;
      const BigInt a = row.begin()->second;
      const BigInt b = it->second;
      // v <- a v - b row; every monomial of row is >= pivot, so the part of v below stays zero.
      for (auto& [m, c] : v) c *= a;
      for (const auto& [m, c] : row) {
        auto [pos, inserted] = v.try_emplace(m, 0);
        pos->second -= b * c;
        if (pos->second == 0) v.erase(pos);
      }
      if (v.empty()) return v;
      normalize(v);
      it = v.upper_bound(pivot);
    }
    return v;
  }

  int blocks_ = 0;
  int coords_ = 0;
  std::map<Monomial, Row, GrlexLess> rows_;
};

/// Rank of a list of polynomials that all have multidegree beta (zero polynomials allowed).
inline std::size_t span_dimension(const std::vector<Polynomial>& polys, const MultiDegree& beta) {
  EchelonBasis basis;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    auto md = p.multidegree();
    if (!md || !(*md == beta))
      throw std::invalid_argument("span_dimension: polynomial is not of multidegree " + beta.str());
    basis.insert(p);
  }
  return basis.rank();
}

}  // namespace polaris

#endif  // POLARIS_SPAN_HPP
