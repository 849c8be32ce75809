#ifndef POLARIS_REPSPEC_HPP
#define POLARIS_REPSPEC_HPP

// Text descriptors of (group, module) pairs and their resolution into characters,
// finite matrix groups, and random-element samplers.
//
//   repspec := group ":" module
//   group   := TYPE RANK | "torus(" INT ")" | "finite(" NAME ")"
//   module  := term ("+" term)*
//   term    := ("phi" INT | "R" INT | "[" int-list "]") ("*" INT)?
//
// "* m" always means m copies. Highest weights that are not fundamental are written as
// weight vectors, e.g. [2,0,0] for the symmetric square of the defining module of A3.

#include "polaris/character.hpp"
#include "polaris/fingrp.hpp"
#include "polaris/matrix.hpp"
#include "polaris/rootsys.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace polaris {

struct RepTerm {
  enum class Kind { phi, R, weights };
  Kind kind = Kind::phi;
  int index = 0;            // phi i or R j
  std::vector<int> values;  // [..]
  int copies = 1;

  friend bool operator==(const RepTerm&, const RepTerm&) = default;
};

struct RepSpec {
  enum class Group { simple, torus, finite };
  Group group = Group::simple;
  char type = 'A';
  int rank = 1;
  std::string finite_name;
  std::vector<RepTerm> terms;

  friend bool operator==(const RepSpec&, const RepSpec&) = default;

  std::string group_str() const {
    switch (group) {
      case Group::simple: return std::string(1, type) + std::to_string(rank);
      case Group::torus: return "torus(" + std::to_string(rank) + ")";
      default: return "finite(" + finite_name + ")";
    }
  }

  static std::string term_str(const RepTerm& t) {
    std::string s;
    switch (t.kind) {
      case RepTerm::Kind::phi: s = "phi" + std::to_string(t.index); break;
      case RepTerm::Kind::R: s = "R" + std::to_string(t.index); break;
      default: {
        s = "[";
        for (std::size_t i = 0; i < t.values.size(); ++i) s += (i ? "," : "") + std::to_string(t.values[i]);
        s += "]";
      }
    }
    if (t.copies != 1) s += " * " + std::to_string(t.copies);
    return s;
  }

  /// Canonical text: terms in the order given, normalized spacing.
  std::string str() const {
    std::string s = group_str() + ": ";
    for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? " + " : "") + term_str(terms[i]);
    return s;
  }
};

namespace detail {

class RepParser {
 public:
  explicit RepParser(const std::string& text) : s_(text) {}

  RepSpec parse() {
    RepSpec r;
    skip();
    group(r);
    skip();
    if (peek() != ':') fail("expected ':' after the group");
    next();
    skip();
    if (at_end()) fail("empty module");
    for (;;) {
      r.terms.push_back(term(r));
      skip();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+' or end of input");
      next();
      skip();
    }
    return r;
  }

 private:
  void group(RepSpec& r) {
    if (s_.compare(pos_, 6, "torus(") == 0) {
      pos_ += 6;
      r.group = RepSpec::Group::torus;
      std::size_t at = pos_;
      r.rank = integer();
      if (r.rank < 1 || r.rank > static_cast<int>(Weight::kMaxRank)) fail("torus rank out of range", at);
      expect(')');
    } else if (s_.compare(pos_, 7, "finite(") == 0) {
      pos_ += 7;
      r.group = RepSpec::Group::finite;
      std::size_t start = pos_;
      int depth = 1;
      while (!at_end()) {
        if (peek() == '(') ++depth;
        if (peek() == ')' && --depth == 0) break;
        next();
      }
      if (at_end()) fail("unterminated finite(...)");
      r.finite_name = s_.substr(start, pos_ - start);
      std::erase_if(r.finite_name, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (r.finite_name.empty()) fail("empty finite group name", start);
      next();
    } else {
      std::size_t at = pos_;
      char t = peek();
      if (!std::isupper(static_cast<unsigned char>(t))) fail("expected a group: TYPE RANK, torus(r) or finite(NAME)");
      next();
      r.type = t;
      r.rank = integer();
      try {
        RootSystem::validate(r.type, r.rank);
      } catch (const std::invalid_argument& e) {
        fail(e.what(), at);
      }
    }
  }

  RepTerm term(const RepSpec& r) {
    RepTerm t;
    std::size_t at = pos_;
    if (s_.compare(pos_, 3, "phi") == 0) {
      pos_ += 3;
      skip();
      t.kind = RepTerm::Kind::phi;
      t.index = integer();
      if (r.group == RepSpec::Group::torus) fail("phi terms need a simple or finite group", at);
      int limit = r.group == RepSpec::Group::finite ? 1 : r.rank;
      if (t.index < 1 || t.index > limit) fail("phi index out of range 1.." + std::to_string(limit), at);
    } else if (peek() == 'R') {
      next();
      skip();
      t.kind = RepTerm::Kind::R;
      t.index = integer();
      if (r.group != RepSpec::Group::simple || r.type != 'A' || r.rank != 1) fail("R j terms are only for A1", at);
      if (t.index < 0) fail("R j needs j >= 0", at);
    } else if (peek() == '[') {
      next();
      t.kind = RepTerm::Kind::weights;
      skip();
      if (peek() != ']')
        for (;;) {
          skip();
          t.values.push_back(integer());
          skip();
          if (peek() == ']') break;
          if (peek() != ',') fail("expected ',' or ']'");
          next();
        }
      next();
      if (r.group == RepSpec::Group::finite) fail("finite groups take phi1 (the defining module)", at);
      if (r.group == RepSpec::Group::torus) {
        if (t.values.empty() || t.values.size() % static_cast<std::size_t>(r.rank) != 0)
          fail("torus weight list length must be a positive multiple of the rank", at);
      } else {
        if (static_cast<int>(t.values.size()) != r.rank) fail("weight needs " + std::to_string(r.rank) + " entries", at);
        for (int v : t.values)
          if (v < 0) fail("highest weight must be dominant", at);
      }
    } else {
      fail("expected phi<i>, R<j> or [..]");
    }
    skip();
    if (peek() == '*') {
      next();
      skip();
      std::size_t m_at = pos_;
      t.copies = integer();
      if (t.copies < 1) fail("copy count must be >= 1", m_at);
    }
    return t;
  }

  int integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') next();
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) next();
    if (digits == pos_) fail("expected an integer", start);
    if (pos_ - digits > 6) fail("integer too large", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    next();
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void next() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw std::invalid_argument("repspec parse error at position " + std::to_string(at + 1) + ": " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RepSpec parse_repspec(const std::string& text) { return detail::RepParser(text).parse(); }

// ---------------------------------------------------------------------------------
// Resolution

/// One irreducible summand (a single copy). For tori the summand is one weight line.
struct Summand {
  Weight highest;  // highest weight (simple), the weight itself (torus), unused (finite)
  FormalCharacter character;
};

class Representation {
 public:
  explicit Representation(RepSpec spec, std::size_t cap = kDefaultGroupCap) : spec_(std::move(spec)) {
    switch (spec_.group) {
      case RepSpec::Group::simple: resolve_simple(); break;
      case RepSpec::Group::torus: resolve_torus(); break;
      default: resolve_finite(cap); break;
    }
  }

  const RepSpec& spec() const { return spec_; }
  bool is_finite() const { return spec_.group == RepSpec::Group::finite; }
  bool is_torus() const { return spec_.group == RepSpec::Group::torus; }
  bool is_simple() const { return spec_.group == RepSpec::Group::simple; }
  bool is_connected() const { return !is_finite(); }

  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  const std::vector<Summand>& summands() const { return summands_; }
  const FormalCharacter& character() const {
    if (!character_) throw std::logic_error("finite groups have no formal character here");
    return *character_;
  }
  const FiniteGroup& group() const {
    if (!group_) throw std::logic_error("not a finite group");
    return *group_;
  }

  int dimension() const { return dimension_; }

  /// Isotypic components: distinct nontrivial highest weights (or torus weights) with their
  /// copy counts, in order of first appearance. Trivial summands are listed too.
  std::vector<std::pair<Weight, int>> isotypic() const {
    std::vector<std::pair<Weight, int>> out;
    for (const auto& s : summands_) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == s.highest; });
      if (it == out.end())
        out.emplace_back(s.highest, 1);
      else
        ++it->second;
    }
    return out;
  }

  /// Canonical key: copies merged and summands sorted, used for catalog lookup.
  std::string canonical_key() const {
    RepSpec key;
    key.group = spec_.group;
    key.type = spec_.type;
    key.rank = spec_.rank;
    key.finite_name = spec_.finite_name;
    if (is_finite()) {
      int copies = 0;
      for (const auto& t : spec_.terms) copies += t.copies;
      key.terms.push_back(RepTerm{RepTerm::Kind::phi, 1, {}, copies});
      return key.str();
    }
    auto iso = isotypic();
    std::sort(iso.begin(), iso.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (is_torus()) {
      RepTerm t{RepTerm::Kind::weights, 0, {}, 1};
      for (const auto& [w, m] : iso)
        for (int c = 0; c < m; ++c)
          for (int v : w.to_vector()) t.values.push_back(v);
      key.terms.push_back(t);
      return key.str();
    }
    for (const auto& [w, m] : iso) key.terms.push_back(term_for(w, m));
    return key.str();
  }

  /// Samples a random element of the group's image in GL(V), in the coordinates used for
  /// explicit polynomials. Available for finite groups, tori, and sums of realizable
  /// summands: A_n phi1 / phi_n, A1 R_j, B_n / D_n phi1, C_n phi1, and trivial summands.
  std::optional<std::function<Matrix(std::mt19937_64&)>> sampler() const;

 private:
  RepTerm term_for(const Weight& w, int copies) const {
    auto v = w.to_vector();
    if (spec_.type == 'A' && spec_.rank == 1) return RepTerm{RepTerm::Kind::R, v[0], {}, copies};
    int nonzero = 0, at = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        ++nonzero;
        at = static_cast<int>(i);
      }
    if (nonzero == 1 && v[static_cast<std::size_t>(at)] == 1) return RepTerm{RepTerm::Kind::phi, at + 1, {}, copies};
    return RepTerm{RepTerm::Kind::weights, 0, v, copies};
  }

  void resolve_simple() {
    rs_ = RootSystem::get(spec_.type, spec_.rank);
    FormalCharacter total(rs_);
    for (const auto& t : spec_.terms) {
      Weight hw = rs_->zero();
      if (t.kind == RepTerm::Kind::phi)
        hw.set(t.index - 1, 1);
      else if (t.kind == RepTerm::Kind::R)
        hw.set(0, t.index);
      else
        hw = Weight(std::span<const int>(t.values));
      auto chi = irrep_character(rs_, hw);
      for (int c = 0; c < t.copies; ++c) {
        summands_.push_back({hw, chi});
        total += chi;
      }
    }
    dimension_ = static_cast<int>(total.dimension());
    character_ = total;
  }

  void resolve_torus() {
    const int r = spec_.rank;
    FormalCharacter total = FormalCharacter::torus(r);
    for (const auto& t : spec_.terms)
      for (int c = 0; c < t.copies; ++c)
        for (std::size_t i = 0; i < t.values.size(); i += static_cast<std::size_t>(r)) {
          Weight w(std::span<const int>(t.values.data() + i, static_cast<std::size_t>(r)));
          FormalCharacter line = FormalCharacter::torus(r);
          line.add(w, 1);
          summands_.push_back({w, line});
          total.add(w, 1);
        }
    dimension_ = static_cast<int>(total.dimension());
    character_ = total;
  }

  void resolve_finite(std::size_t cap) {
    FiniteGroup base = named_group(spec_.finite_name, cap);
    int copies = 0;
    for (const auto& t : spec_.terms) copies += t.copies;
    if (copies == 1) {
      group_.emplace(base);
    } else {
      std::vector<Matrix> gens;
      for (const auto& g : base.generators()) gens.push_back(direct_sum(std::vector<Matrix>(copies, g)));
      group_.emplace(generate_group(std::move(gens), cap, base.name()));
    }
    for (int c = 0; c < copies; ++c) summands_.push_back({Weight(1), FormalCharacter::torus(1)});
    dimension_ = group_->dimension();
  }

  RepSpec spec_;
  std::shared_ptr<const RootSystem> rs_;
  std::vector<Summand> summands_;
  std::optional<FormalCharacter> character_;
  std::optional<FiniteGroup> group_;
  int dimension_ = 0;
};

inline Representation resolve(const std::string& text, std::size_t cap = kDefaultGroupCap) {
  return Representation(parse_repspec(text), cap);
}

// ---------------------------------------------------------------------------------
// Random elements in exact arithmetic

namespace sampling {

/// (I - A)^{-1} (I + A); orthogonal with determinant 1 for antisymmetric A, symplectic for
/// A = J S with S symmetric.
inline std::optional<Matrix> cayley(const Matrix& a) {
  const std::size_t n = a.size();
  auto inv = (Matrix::identity(n) - a).inverse();
  if (!inv) return std::nullopt;
  return *inv * (Matrix::identity(n) + a);
}

inline Matrix special_orthogonal(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = random_rational(rng, 3);
        a(j, i) = -a(i, j);
      }
    if (auto g = cayley(a)) return *g;
  }
}

/// Standard form J = [[0, I], [-I, 0]] on C^{2m}.
inline Matrix symplectic_form(std::size_t m) {
  Matrix j(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j(i, m + i) = 1;
    j(m + i, i) = -1;
  }
  return j;
}

inline Matrix symplectic(std::mt19937_64& rng, std::size_t m) {
  const Matrix j = symplectic_form(m);
  for (;;) {
    Matrix s(2 * m);
    for (std::size_t a = 0; a < 2 * m; ++a)
      for (std::size_t b = a; b < 2 * m; ++b) s(a, b) = s(b, a) = random_rational(rng, 3);
    if (auto g = cayley(j * s)) return *g;
  }
}

/// L D U with unit triangular L, U and diagonal D of determinant 1.
inline Matrix special_linear(std::mt19937_64& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n), d = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_rational(rng, 3);
      u(j, i) = random_rational(rng, 3);
    }
  Rational prod = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational x = 0;
    while (x == 0) x = random_rational(rng, 3);
    d(i, i) = x;
    prod *= x;
  }
  d(n - 1, n - 1) = 1 / prod;
  return l * d * u;
}

/// Action of g in SL2 on binary forms of degree j, basis x^j, x^{j-1} y, ..., y^j, via
/// x -> a x + c y, y -> b x + d y.
inline Matrix binary_forms(const Matrix& g, int j) {
  const auto n = static_cast<std::size_t>(j + 1);
  Polynomial x = Polynomial::variable(1, 2, 0, 0), y = Polynomial::variable(1, 2, 0, 1);
  Polynomial xs = x * g(0, 0) + y * g(1, 0), ys = x * g(0, 1) + y * g(1, 1);
  Matrix m(n);
  for (int i = 0; i <= j; ++i) {
    Polynomial image = xs.pow(j - i) * ys.pow(i);
    for (int r = 0; r <= j; ++r) m(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = image.coefficient({j - r, r});
  }
  return m;
}

}  // namespace sampling

inline std::optional<std::function<Matrix(std::mt19937_64&)>> Representation::sampler() const {
  if (is_finite()) {
    const FiniteGroup* g = &*group_;
    return [g](std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
      return g->elements()[pick(rng)];
    };
  }
  if (is_torus()) {
    std::vector<Weight> weights;
    for (const auto& s : summands_) weights.push_back(s.highest);
    const int r = spec_.rank;
    return [weights, r](std::mt19937_64& rng) {
      std::vector<Rational> t(static_cast<std::size_t>(r));
      for (auto& x : t)
        while (x == 0) x = random_rational(rng, 5);
      Matrix m(weights.size());
      for (std::size_t i = 0; i < weights.size(); ++i) {
        Rational v = 1;
        for (int a = 0; a < r; ++a) {
          int e = weights[i][static_cast<std::size_t>(a)];
          Rational base = e >= 0 ? t[static_cast<std::size_t>(a)] : 1 / t[static_cast<std::size_t>(a)];
          for (int c = 0; c < std::abs(e); ++c) v *= base;
        }
        m(i, i) = v;
      }
      return m;
    };
  }
  // Simple group: every summand must be realizable from one common group element.
  const char type = spec_.type;
  const int n = spec_.rank;
  enum class Kind { trivial, standard, dual_standard, binary };
  std::vector<std::pair<Kind, int>> parts;
  for (const auto& s : summands_) {
    auto v = s.highest.to_vector();
    if (s.highest.is_zero()) {
      parts.emplace_back(Kind::trivial, 0);
      continue;
    }
    if (type == 'A' && n == 1) {
      parts.emplace_back(Kind::binary, v[0]);
      continue;
    }
    Weight phi1 = rs_->zero();
    phi1.set(0, 1);
    Weight phin = rs_->zero();
    phin.set(n - 1, 1);
    if (s.highest == phi1)
      parts.emplace_back(Kind::standard, 0);
    else if (type == 'A' && s.highest == phin)
      parts.emplace_back(Kind::dual_standard, 0);
    else
      return std::nullopt;
  }
  std::size_t dim = 0;
  switch (type) {
    case 'A': dim = static_cast<std::size_t>(n + 1); break;
    case 'B': dim = static_cast<std::size_t>(2 * n + 1); break;
    case 'C':
    case 'D': dim = static_cast<std::size_t>(2 * n); break;
    default: return std::nullopt;
  }
  return [parts, type, dim](std::mt19937_64& rng) {
    Matrix g = type == 'A'   ? sampling::special_linear(rng, dim)
               : type == 'C' ? sampling::symplectic(rng, dim / 2)
                             : sampling::special_orthogonal(rng, dim);
    std::vector<Matrix> blocks;
    for (const auto& [kind, j] : parts) {
      switch (kind) {
        case Kind::trivial: blocks.push_back(Matrix::identity(1)); break;
        case Kind::standard: blocks.push_back(g); break;
        case Kind::dual_standard: blocks.push_back(g.inverse()->transpose()); break;
        case Kind::binary: blocks.push_back(sampling::binary_forms(g, j)); break;
      }
    }
    return direct_sum(blocks);
  };
}

}  // namespace polaris

#endif  // POLARIS_REPSPEC_HPP
