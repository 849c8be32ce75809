#ifndef POLARIS_ORACLE_HPP
#define POLARIS_ORACLE_HPP

// Brute-force reference computations. Nothing here shares a code path with the
// production routines it is used to check: roots come from reflection closure rather
// than root strings, plethysms from explicit monomial enumeration, torus invariants from
// lattice-point counting.

#include "polaris/character.hpp"
#include "polaris/numeric.hpp"
#include "polaris/polynomial.hpp"
#include "polaris/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace polaris::oracle {

/// All roots of the root system as integer vectors in simple-root coordinates,
/// obtained by closing the simple roots under the simple reflections
/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
inline std::set<std::vector<int>> all_roots_by_reflection(const RootSystem& rs) {
  const int n = rs.rank();
  const auto& a = rs.cartan();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    roots.insert(c);
    queue.push_back(c);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> b = queue[head];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += b[j] * a[i][j];
      b[i] -= pairing;
      if (roots.insert(b).second) queue.push_back(b);
    }
  }
  return roots;
}

inline std::size_t positive_root_count_by_reflection(const RootSystem& rs) {
  std::size_t count = 0;
  for (const auto& r : all_roots_by_reflection(rs))
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) ++count;
  return count;
}

/// |W| = prod (m_i + 1), exponents m_i read off as the partition dual to the
/// number of positive roots of each height.
inline BigInt weyl_order_from_heights(const RootSystem& rs) {
  std::map<int, int> by_height;
  for (const auto& r : all_roots_by_reflection(rs)) {
    int h = 0;
    for (int c : r) h += c;
    if (h > 0) ++by_height[h];
  }
  std::vector<int> exponents;
  for (int h = 1;; ++h) {
    int cnt = by_height.count(h) ? by_height[h] : 0;
    int next = by_height.count(h + 1) ? by_height[h + 1] : 0;
    if (cnt == 0) break;
    for (int i = 0; i < cnt - next; ++i) exponents.push_back(h);
  }
  BigInt order = 1;
  for (int m : exponents) order *= (m + 1);
  return order;
}

/// Size of the Weyl orbit of rho (a regular weight), i.e. |W|, by explicit closure.
inline std::size_t weyl_order_by_orbit(const RootSystem& rs) { return rs.orbit(rs.rho()).size(); }

/// Expands a character into a list of basis weights (one entry per dimension).
inline std::vector<Weight> basis_weights(const FormalCharacter& chi) {
  std::vector<Weight> out;
  for (const auto& [w, m] : chi.sorted_terms())
    for (BigInt i = 0; i < m; ++i) out.push_back(w);
  return out;
}

/// S^d by enumerating all degree-d monomials in the basis vectors.
inline FormalCharacter sym_power_by_monomials(const FormalCharacter& chi, int d) {
  auto basis = basis_weights(chi);
  FormalCharacter out = chi.empty_like();
  const int n = static_cast<int>(basis.size());
  auto rec = [&](auto&& self, int start, int left, Weight acc) -> void {
    if (left == 0) {
      out.add(acc, 1);
      return;
    }
    for (int i = start; i < n; ++i) self(self, i, left - 1, acc + basis[i]);
  };
  rec(rec, 0, d, chi.zero_weight());
  return out;
}

/// Lambda^d by enumerating all d-subsets of the basis vectors.
inline FormalCharacter ext_power_by_subsets(const FormalCharacter& chi, int d) {
  auto basis = basis_weights(chi);
  FormalCharacter out = chi.empty_like();
  const int n = static_cast<int>(basis.size());
  auto rec = [&](auto&& self, int start, int left, Weight acc) -> void {
    if (left == 0) {
      out.add(acc, 1);
      return;
    }
    for (int i = start; i < n; ++i) self(self, i + 1, left - 1, acc + basis[i]);
  };
  rec(rec, 0, d, chi.zero_weight());
  return out;
}

/// Full tensor product of basis weight lists.
inline FormalCharacter tensor_by_table(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out = a.empty_like();
  for (const auto& x : basis_weights(a))
    for (const auto& y : basis_weights(b)) out.add(x + y, 1);
  return out;
}

/// Torus invariants of kV in multidegree beta: counts exponent vectors e on the
/// coordinates of each copy with |e| = beta_a and sum_i e_i * (-w_i) = 0.
inline BigInt torus_lattice_points(const std::vector<Weight>& weights, const std::vector<int>& beta) {
  const int n = static_cast<int>(weights.size());
  const std::size_t r = weights.empty() ? 0 : weights.front().size();
  BigInt count = 0;
  std::vector<int> acc(r, 0);
  auto rec = [&](auto&& self, std::size_t copy, int var, int left) -> void {
    if (copy == beta.size()) {
      if (std::all_of(acc.begin(), acc.end(), [](int v) { return v == 0; })) ++count;
      return;
    }
    if (var == n - 1 || left == 0) {
      // The remaining degree all goes to this variable.
      if (left > 0)
        for (std::size_t j = 0; j < r; ++j) acc[j] -= left * weights[var][j];
      int next_left = copy + 1 < beta.size() ? beta[copy + 1] : 0;
      self(self, copy + 1, 0, next_left);
      if (left > 0)
        for (std::size_t j = 0; j < r; ++j) acc[j] += left * weights[var][j];
      return;
    }
    for (int e = 0; e <= left; ++e) {
      for (std::size_t j = 0; j < r; ++j) acc[j] -= e * weights[var][j];
      self(self, copy, var + 1, left - e);
      for (std::size_t j = 0; j < r; ++j) acc[j] += e * weights[var][j];
    }
  };
  if (n == 0) return std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; }) ? 1 : 0;
  rec(rec, 0, 0, beta.empty() ? 0 : beta[0]);
  return count;
}

/// Rank of polynomials by dense rational row reduction over the union of their monomials.
inline std::size_t rank_over_monomials(const std::vector<Polynomial>& polys) {
  std::vector<Monomial> cols;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) cols.push_back(m);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<Rational>> a;
  for (const auto& p : polys) {
    std::vector<Rational> row(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) row[j] = p.coefficient(cols[j]);
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols.size() && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols.size(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace polaris::oracle

#endif  // POLARIS_ORACLE_HPP
