#ifndef POLARIS_FINGRP_HPP
#define POLARIS_FINGRP_HPP

// Finite groups of rational matrices: closure, Molien dimensions from power traces,
// Reynolds averaging, invariant bases and minimal generators.

#include "polaris/character.hpp"
#include "polaris/matrix.hpp"
#include "polaris/polynomial.hpp"
#include "polaris/rootsys.hpp"
#include "polaris/span.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace polaris {

inline constexpr std::size_t kDefaultGroupCap = 1000000;

class FiniteGroup {
 public:
  FiniteGroup(std::vector<Matrix> generators, std::string name, std::vector<Matrix> elements)
      : name_(std::move(name)), generators_(std::move(generators)), elements_(std::move(elements)) {
    sym_traces_.resize(elements_.size());
  }

  FiniteGroup(const FiniteGroup& o) : name_(o.name_), generators_(o.generators_), elements_(o.elements_) {
    sym_traces_.resize(elements_.size());
  }

  const std::string& name() const { return name_; }
  int dimension() const { return static_cast<int>(elements_.front().size()); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& generators() const { return generators_; }
  /// Breadth-first order from the identity.
  const std::vector<Matrix>& elements() const { return elements_; }

  /// h_g(d) = trace of g on S^d(C^n), from the power sums tr(g^m) by Newton's identities.
  Rational sym_trace(std::size_t element, int d) const {
    std::lock_guard lock(mutex_);
    auto& h = sym_traces_.at(element);
    if (h.empty()) h.push_back(1);
    if (static_cast<int>(h.size()) <= d) {
      const Matrix& g = elements_[element];
      std::vector<Rational> p;  // p[m-1] = tr(g^m)
      Matrix power = g;
      for (int m = 1; m <= d; ++m) {
        p.push_back(power.trace());
        power = power * g;
      }
      for (int e = static_cast<int>(h.size()); e <= d; ++e) {
        Rational acc = 0;
        for (int m = 1; m <= e; ++m) acc += p[m - 1] * h[e - m];
        h.push_back(acc / e);
      }
    }
    return h[d];
  }

 private:
  std::string name_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<Rational>> sym_traces_;
};

/// Closes the generators under multiplication. Rejects singular or mismatched generators
/// and closures larger than `cap`.
inline FiniteGroup generate_group(std::vector<Matrix> gens, std::size_t cap = kDefaultGroupCap, std::string name = "") {
  if (gens.empty()) throw std::invalid_argument("a group needs at least one generator");
  const std::size_t n = gens.front().size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != n) throw std::invalid_argument("generators have different sizes");
    if (gens[i].determinant() == 0)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not invertible");
  }
  std::vector<Matrix> elements{Matrix::identity(n)};
  std::set<Matrix> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Matrix next = elements[head] * g;
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw std::invalid_argument("group closure exceeds the cap of " + std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return FiniteGroup(std::move(gens), std::move(name), std::move(elements));
}

// ---------------------------------------------------------------------------------
// Built-in groups

/// Permutation matrices of S_n acting on C^n.
inline FiniteGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("sym(n) needs n >= 1");
  const auto N = static_cast<std::size_t>(n);
  std::vector<Matrix> gens;
  if (n == 1) {
    gens.push_back(Matrix::identity(1));
  } else {
    Matrix swap(N), cycle(N);
    for (std::size_t i = 0; i < N; ++i) {
      swap(i, i < 2 ? 1 - i : i) = 1;
      cycle((i + 1) % N, i) = 1;
    }
    gens = {swap, cycle};
  }
  return generate_group(std::move(gens), kDefaultGroupCap, "sym(" + std::to_string(n) + ")");
}

/// Weyl group of a simple type. B, C and D act on C^n by signed permutations (all sign
/// changes for B/C, even ones for D); the other types act on the root space in the basis
/// of simple roots.
inline FiniteGroup weyl_group(char type, int n, std::size_t cap = kDefaultGroupCap) {
  RootSystem::validate(type, n);
  const auto N = static_cast<std::size_t>(n);
  std::vector<Matrix> gens;
  auto transposition = [&](std::size_t a, std::size_t b) {
    Matrix m = Matrix::identity(N);
    m(a, a) = 0;
    m(b, b) = 0;
    m(a, b) = 1;
    m(b, a) = 1;
    return m;
  };
  if (type == 'B' || type == 'C' || type == 'D') {
    for (std::size_t i = 0; i + 1 < N; ++i) gens.push_back(transposition(i, i + 1));
    Matrix last = Matrix::identity(N);
    if (type == 'D') {
      // v_{n-1} <-> -v_n
      last(N - 2, N - 2) = 0;
      last(N - 1, N - 1) = 0;
      last(N - 2, N - 1) = -1;
      last(N - 1, N - 2) = -1;
    } else {
      last(N - 1, N - 1) = -1;
    }
    gens.push_back(last);
  } else {
    RootSystem rs(type, n);
    for (std::size_t i = 0; i < N; ++i) {
      Matrix s = Matrix::identity(N);
      for (std::size_t j = 0; j < N; ++j) s(i, j) -= rs.cartan()[i][j];
      gens.push_back(s);
    }
  }
  return generate_group(std::move(gens), cap, std::string("weyl(") + type + "," + std::to_string(n) + ")");
}

namespace detail {

inline Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or \"a/b\" strings");
}

}  // namespace detail

/// Reads {"generators": [[[..],[..]], ...]} with integer or "a/b" string entries.
inline std::vector<Matrix> matrices_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
    throw std::invalid_argument("group file needs a \"generators\" array");
  std::vector<Matrix> out;
  for (const auto& g : doc["generators"]) {
    if (!g.is_array() || g.empty()) throw std::invalid_argument("each generator must be a nonempty square matrix");
    Matrix m(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_array() || g[i].size() != g.size()) throw std::invalid_argument("generator is not square");
      for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = detail::json_rational(g[i][j]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

inline FiniteGroup load_group_file(const std::string& path, std::size_t cap = kDefaultGroupCap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("group file " + path + ": " + e.what());
  }
  return generate_group(matrices_from_json(doc), cap, "file:" + path);
}

namespace detail {

inline int parse_group_int(const std::string& text, const std::string& name) {
  int v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw std::invalid_argument("bad integer '" + text + "' in finite group '" + name + "'");
  return v;
}

}  // namespace detail

/// `weyl(B,2)`, `sym(3)` or `file:path`.
inline FiniteGroup named_group(const std::string& name, std::size_t cap = kDefaultGroupCap) {
  if (name.rfind("file:", 0) == 0) return load_group_file(name.substr(5), cap);
  auto open = name.find('('), close = name.rfind(')');
  if (open == std::string::npos || close != name.size() - 1)
    throw std::invalid_argument("unknown finite group '" + name + "' (expected weyl(T,n), sym(n) or file:path)");
  const std::string head = name.substr(0, open), args = name.substr(open + 1, close - open - 1);
  if (head == "sym") return symmetric_group(detail::parse_group_int(args, name));
  if (head == "weyl") {
    if (args.size() < 3 || args[1] != ',') throw std::invalid_argument("weyl needs (TYPE,RANK) in '" + name + "'");
    return weyl_group(args[0], detail::parse_group_int(args.substr(2), name), cap);
  }
  throw std::invalid_argument("unknown finite group '" + name + "'");
}

// ---------------------------------------------------------------------------------
// Molien dimensions and invariants

/// dim C[kV]^G in multidegree beta (k = beta.size()).
inline BigInt molien_dim(const FiniteGroup& g, const MultiDegree& beta) {
  Rational sum = 0;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Rational term = 1;
    for (int part : beta.parts) term *= g.sym_trace(e, part);
    sum += term;
  }
  sum /= static_cast<unsigned long long>(g.order());
  if (boost::multiprecision::denominator(sum) != 1)
    throw ConsistencyFault("non-integral Molien average " + to_string(sum) + " at " + beta.str());
  return boost::multiprecision::numerator(sum);
}

/// dim C[kV]^G in total degree d, with kV graded only by total degree.
inline BigInt molien_dim_total(const FiniteGroup& g, int k, int d) {
  Rational sum = 0;
  for (const auto& x : g.elements()) {
    std::vector<Rational> p, h{1};
    Matrix power = x;
    for (int m = 1; m <= d; ++m) {
      p.push_back(power.trace() * k);
      power = power * x;
    }
    for (int e = 1; e <= d; ++e) {
      Rational acc = 0;
      for (int m = 1; m <= e; ++m) acc += p[m - 1] * h[e - m];
      h.push_back(acc / e);
    }
    sum += h[d];
  }
  sum /= static_cast<unsigned long long>(g.order());
  if (boost::multiprecision::denominator(sum) != 1) throw ConsistencyFault("non-integral Molien average");
  return boost::multiprecision::numerator(sum);
}

/// (1/|G|) sum_g p(g v, ..., g v).
inline Polynomial reynolds(const FiniteGroup& g, const Polynomial& p) {
  if (p.coords() != g.dimension()) throw std::invalid_argument("polynomial and group act on different spaces");
  Polynomial sum(p.blocks(), p.coords());
  for (const auto& x : g.elements()) sum += p.substitute(x);
  sum *= Rational(1, static_cast<long long>(g.order()));
  return sum;
}

/// All monomials of multidegree beta on beta.size() copies of C^n, ascending grlex.
inline std::vector<Monomial> monomials_of(int n, const MultiDegree& beta) {
  std::vector<std::vector<MultiDegree>> per_block;
  for (int part : beta.parts) per_block.push_back(multidegrees_of_total(n, part));
  std::vector<Monomial> out;
  Monomial m(static_cast<std::size_t>(n) * beta.size(), 0);
  auto rec = [&](auto&& self, std::size_t block) -> void {
    if (block == beta.size()) {
      out.push_back(m);
      return;
    }
    for (const auto& e : per_block[block]) {
      std::copy(e.parts.begin(), e.parts.end(), m.begin() + static_cast<std::ptrdiff_t>(block) * n);
      self(self, block + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

/// A basis of C[kV]^G in multidegree beta: Reynolds images of monomials, row reduced.
inline std::vector<Polynomial> invariant_basis(const FiniteGroup& g, const MultiDegree& beta) {
  const int k = static_cast<int>(beta.size()), n = g.dimension();
  const BigInt target = molien_dim(g, beta);
  EchelonBasis basis;
  for (const auto& m : monomials_of(n, beta)) {
    if (BigInt(basis.rank()) == target) break;
    Polynomial mono(k, n);
    mono.add_term(m, 1);
    Polynomial r = reynolds(g, mono);
    if (r.is_zero()) continue;
    basis.insert(r);
  }
  if (BigInt(basis.rank()) != target)
    throw ConsistencyFault("invariant basis in " + beta.str() + " has " + std::to_string(basis.rank()) +
                           " elements, Molien gives " + target.str());
  return basis.basis();
}

/// Minimal homogeneous generators of C[V]^G up to degree max_degree: in each degree, the
/// invariant basis elements not in the span of products of lower generators.
inline std::vector<Polynomial> minimal_generators(const FiniteGroup& g, int max_degree) {
  const int n = g.dimension();
  std::vector<Polynomial> gens;
  std::vector<int> degrees;
  for (int d = 1; d <= max_degree; ++d) {
    if (molien_dim(g, MultiDegree{d}) == 0) continue;
    EchelonBasis decomposables;
    // Products of at least two earlier generators with total degree d.
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start, int left, const Polynomial& acc) -> void {
      if (left == 0) {
        if (pick.size() >= 2) decomposables.insert(acc);
        return;
      }
      for (std::size_t i = start; i < gens.size(); ++i) {
        if (degrees[i] > left) continue;
        pick.push_back(i);
        self(self, i, left - degrees[i], acc * gens[i]);
        pick.pop_back();
      }
    };
    rec(rec, 0, d, Polynomial::constant(1, n, 1));
    for (const auto& b : invariant_basis(g, MultiDegree{d}))
      if (decomposables.insert(b)) {
        gens.push_back(b);
        degrees.push_back(d);
      }
  }
  return gens;
}

/// A (pseudo-)reflection fixes a hyperplane pointwise: g - I has rank one.
inline bool is_reflection(const Matrix& g) {
  const std::size_t n = g.size();
  const Matrix d = g - Matrix::identity(n);
  bool nonzero = false;
  for (std::size_t i = 0; i < n && !nonzero; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) != 0) { nonzero = true; break; }
  if (!nonzero) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          if (d(i, j) * d(k, l) != d(i, l) * d(k, j)) return false;
  return true;
}

/// Whether the reflections in g generate all of g.
inline bool generated_by_reflections(const FiniteGroup& g) {
  std::vector<Matrix> refl;
  for (const auto& e : g.elements())
    if (is_reflection(e)) refl.push_back(e);
  if (refl.empty()) return g.order() == 1;
  return generate_group(std::move(refl), g.order() + 1).order() == g.order();
}

}  // namespace polaris

#endif  // POLARIS_FINGRP_HPP
