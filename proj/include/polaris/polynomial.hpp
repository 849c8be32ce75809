#ifndef POLARIS_POLYNOMIAL_HPP
#define POLARIS_POLYNOMIAL_HPP

// Sparse exact-rational polynomials on kV = V + ... + V (k copy-blocks of n coordinates).
// Variable x[i][j] is coordinate j of copy i (1-based in text, 0-based in the API).
// Terms are kept in graded lexicographic order.

#include "polaris/character.hpp"
#include "polaris/matrix.hpp"
#include "polaris/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace polaris {

using Monomial = std::vector<int>;

/// Total degree first, then lexicographic on the exponent vector (x[1][1] largest).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  Polynomial(int blocks, int coords) : blocks_(blocks), coords_(coords) {
    if (blocks < 1 || coords < 1) throw std::invalid_argument("polynomial needs at least one block and coordinate");
  }

  static Polynomial constant(int blocks, int coords, const Rational& c) {
    Polynomial p(blocks, coords);
    p.add_term(Monomial(static_cast<std::size_t>(blocks * coords), 0), c);
    return p;
  }

  /// The coordinate function x[block][coord] (0-based).
  static Polynomial variable(int blocks, int coords, int block, int coord) {
    Polynomial p(blocks, coords);
    Monomial m(static_cast<std::size_t>(blocks * coords), 0);
    m.at(static_cast<std::size_t>(p.index(block, coord))) = 1;
    p.add_term(std::move(m), 1);
    return p;
  }

  int blocks() const { return blocks_; }
  int coords() const { return coords_; }
  int variables() const { return blocks_ * coords_; }
  int index(int block, int coord) const {
    if (block < 0 || block >= blocks_ || coord < 0 || coord >= coords_)
      throw std::out_of_range("variable index out of range");
    return block * coords_ + coord;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Rational& c) {
    if (static_cast<int>(m.size()) != variables()) throw std::invalid_argument("monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Degree in each copy-block of a single monomial.
  std::vector<int> block_degrees(const Monomial& m) const {
    std::vector<int> out(static_cast<std::size_t>(blocks_), 0);
    for (int i = 0; i < blocks_; ++i)
      for (int j = 0; j < coords_; ++j) out[i] += m[static_cast<std::size_t>(i * coords_ + j)];
    return out;
  }

  /// Common multidegree of all terms, if the polynomial is nonzero and multihomogeneous.
  std::optional<MultiDegree> multidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto first = block_degrees(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (block_degrees(m) != first) return std::nullopt;
    return MultiDegree(first);
  }

  /// Total degree if homogeneous, otherwise nullopt (also for the zero polynomial).
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = total(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (total(m) != d) return std::nullopt;
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_shape(b);
    Polynomial out(a.blocks_, a.coords_);
    Monomial m(static_cast<std::size_t>(a.variables()));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
        out.add_term(m, ca * cb);
      }
    return out;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial out = constant(blocks_, coords_, 1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) out = out * base;
      if (e > 1) base = base * base;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.blocks_ == b.blocks_ && a.coords_ == b.coords_ && a.terms_ == b.terms_;
  }

  /// Evaluates at a point given as all coordinates, copy after copy.
  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != variables()) throw std::invalid_argument("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e) t *= point[v];
      sum += t;
    }
    return sum;
  }

  /// v -> p(g v, ..., g v): applies g to every copy-block.
  Polynomial substitute(const Matrix& g) const {
    if (static_cast<int>(g.size()) != coords_) throw std::invalid_argument("substitution matrix has wrong size");
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(variables()));
    for (int i = 0; i < blocks_; ++i)
      for (int j = 0; j < coords_; ++j) {
        Polynomial lin(blocks_, coords_);
        for (int l = 0; l < coords_; ++l)
          if (g(j, l) != 0) {
            Monomial m(static_cast<std::size_t>(variables()), 0);
            m[static_cast<std::size_t>(i * coords_ + l)] = 1;
            lin.add_term(std::move(m), g(j, l));
          }
        images.push_back(std::move(lin));
      }
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power = [&](int v, int e) -> const Polynomial& {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, images[static_cast<std::size_t>(v)].pow(e)).first;
      return it->second;
    };
    Polynomial out(blocks_, coords_);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(blocks_, coords_, c);
      for (int v = 0; v < variables(); ++v)
        if (m[static_cast<std::size_t>(v)] > 0) t = t * power(v, m[static_cast<std::size_t>(v)]);
      out += t;
    }
    return out;
  }

  /// Copies a polynomial on one block into block `target` of a k-block space.
  Polynomial embed(int k, int target) const {
    if (blocks_ != 1) throw std::invalid_argument("embed expects a polynomial on a single copy");
    if (target < 0 || target >= k) throw std::out_of_range("target block out of range");
    Polynomial out(k, coords_);
    for (const auto& [m, c] : terms_) {
      Monomial big(static_cast<std::size_t>(k * coords_), 0);
      std::copy(m.begin(), m.end(), big.begin() + target * coords_);
      out.add_term(std::move(big), c);
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = abs(c);
      if (first)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      first = false;
      std::string factors;
      for (int i = 0; i < blocks_; ++i)
        for (int j = 0; j < coords_; ++j) {
          int e = m[static_cast<std::size_t>(i * coords_ + j)];
          if (e == 0) continue;
          if (!factors.empty()) factors += " * ";
          factors += "x[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
          if (e > 1) factors += "^" + std::to_string(e);
        }
      if (factors.empty())
        s += to_string(a);
      else if (a == 1)
        s += factors;
      else
        s += to_string(a) + " * " + factors;
    }
    return s;
  }

 private:
  static int total(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }

  void require_same_shape(const Polynomial& o) const {
    if (blocks_ != o.blocks_ || coords_ != o.coords_)
      throw std::invalid_argument("polynomials live on different spaces");
  }

  int blocks_;
  int coords_;
  Terms terms_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  struct Factor {
    int block, coord, exp;
  };
  struct Term {
    Rational coeff;
    std::vector<Factor> factors;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  Term term() {
    Term t{1, {}};
    bool any = false;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= number();
      } else if (peek() == 'x') {
        t.factors.push_back(variable());
      } else {
        fail(any ? "expected a number or variable after '*'" : "expected a number or variable");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      next();
    }
    return t;
  }

  Rational number() {
    BigInt num = integer(), den = 1;
    if (peek() == '/') {
      next();
      std::size_t at = pos_;
      den = integer();
      if (den == 0) fail("zero denominator", at);
    }
    return Rational(num, den);
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) next();
    if (start == pos_) fail("expected digits");
    return BigInt(s_.substr(start, pos_ - start));
  }

  int small_int() {
    std::size_t at = pos_;
    BigInt v = integer();
    if (v > 10000) fail("index or exponent too large", at);
    return static_cast<int>(v);
  }

  Factor variable() {
    next();  // 'x'
    Factor f{};
    expect('[');
    std::size_t at = pos_;
    f.block = small_int();
    if (f.block < 1) fail("indices are 1-based", at);
    expect(']');
    expect('[');
    at = pos_;
    f.coord = small_int();
    if (f.coord < 1) fail("indices are 1-based", at);
    expect(']');
    f.exp = 1;
    skip();
    if (peek() == '^') {
      next();
      skip();
      f.exp = small_int();
    }
    return f;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    next();
    skip();
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char next() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(at + 1) + ": " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `3/2 * x[1][2]^2 * x[2][1] - x[1][1]`. With blocks/coords = 0 the shape is
/// taken from the largest indices present.
inline Polynomial parse_polynomial(const std::string& text, int blocks = 0, int coords = 0) {
  auto terms = detail::PolyParser(text).parse();
  int max_block = 1, max_coord = 1;
  for (const auto& t : terms)
    for (const auto& f : t.factors) {
      max_block = std::max(max_block, f.block);
      max_coord = std::max(max_coord, f.coord);
    }
  if (blocks == 0) blocks = max_block;
  if (coords == 0) coords = max_coord;
  if (max_block > blocks || max_coord > coords)
    throw std::invalid_argument("polynomial uses x[" + std::to_string(max_block) + "][" + std::to_string(max_coord) +
                                "] outside a space of " + std::to_string(blocks) + " copies of dimension " +
                                std::to_string(coords));
  Polynomial p(blocks, coords);
  for (const auto& t : terms) {
    Monomial m(static_cast<std::size_t>(blocks * coords), 0);
    for (const auto& f : t.factors) m[static_cast<std::size_t>((f.block - 1) * coords + f.coord - 1)] += f.exp;
    p.add_term(std::move(m), t.coeff);
  }
  return p;
}

// ---------------------------------------------------------------------------------
// Polarization

using Polarization = std::map<MultiDegree, Polynomial>;

/// Coefficients f_alpha of s^alpha in f(s_1 v_1 + ... + s_k v_k), for all |alpha| = deg f.
inline Polarization polarize(const Polynomial& f, int k) {
  if (k < 1) throw std::invalid_argument("number of copies must be >= 1");
  if (f.blocks() != 1) throw std::invalid_argument("polarize expects a polynomial on a single copy");
  auto d = f.homogeneous_degree();
  if (!d) throw std::invalid_argument("polarize needs a nonzero homogeneous polynomial");
  const int n = f.coords();

  Polarization out;
  for (const auto& alpha : multidegrees_of_total(k, *d)) out.emplace(alpha, Polynomial(k, n));

  std::map<int, std::vector<MultiDegree>> compositions;
  auto splits = [&](int e) -> const std::vector<MultiDegree>& {
    auto it = compositions.find(e);
    if (it == compositions.end()) it = compositions.emplace(e, multidegrees_of_total(k, e)).first;
    return it->second;
  };

  for (const auto& [m, c] : f.terms()) {
    std::vector<int> alpha(static_cast<std::size_t>(k), 0);
    Monomial big(static_cast<std::size_t>(k * n), 0);
    auto rec = [&](auto&& self, int j, const Rational& coeff) -> void {
      if (j == n) {
        out.at(MultiDegree(alpha)).add_term(big, coeff);
        return;
      }
      const int e = m[static_cast<std::size_t>(j)];
      for (const auto& gamma : splits(e)) {
        for (int i = 0; i < k; ++i) {
          alpha[i] += gamma[i];
          big[static_cast<std::size_t>(i * n + j)] = gamma[i];
        }
        self(self, j + 1, coeff * Rational(multinomial(gamma.parts)));
        for (int i = 0; i < k; ++i) alpha[i] -= gamma[i];
      }
      for (int i = 0; i < k; ++i) big[static_cast<std::size_t>(i * n + j)] = 0;
    };
    rec(rec, 0, c);
  }
  return out;
}

struct ConsistencyReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

/// Checks f_alpha(v, ..., v) = multinomial(d; alpha) f(v) at each point.
inline ConsistencyReport restitute(const Polarization& pieces, const Polynomial& f,
                                   const std::vector<std::vector<Rational>>& points) {
  ConsistencyReport report;
  for (const auto& v : points) {
    Rational fv = f.evaluate(v);
    for (const auto& [alpha, piece] : pieces) {
      std::vector<Rational> repeated;
      for (int i = 0; i < piece.blocks(); ++i) repeated.insert(repeated.end(), v.begin(), v.end());
      Rational lhs = piece.evaluate(repeated);
      Rational rhs = Rational(multinomial(alpha.parts)) * fv;
      if (lhs != rhs)
        report.fail("restitution fails at alpha=" + alpha.str() + ": " + to_string(lhs) + " != " + to_string(rhs));
    }
  }
  return report;
}

inline ConsistencyReport restitute(const Polarization& pieces, const Polynomial& f, int random_points = 3,
                                   std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> points(static_cast<std::size_t>(random_points));
  for (auto& p : points)
    for (int j = 0; j < f.coords(); ++j) p.push_back(random_rational(rng));
  return restitute(pieces, f, points);
}

/// Checks (fg)_alpha = sum over alpha' + alpha'' = alpha of f_alpha' g_alpha''.
inline ConsistencyReport coalgebra_check(const Polynomial& f, const Polynomial& g, int k) {
  ConsistencyReport report;
  auto pf = polarize(f, k), pg = polarize(g, k), pfg = polarize(f * g, k);
  for (const auto& [alpha, piece] : pfg) {
    Polynomial sum(k, f.coords());
    for (const auto& [a1, p1] : pf) {
      if (!a1.dominated_by(alpha)) continue;
      std::vector<int> rest(alpha.parts);
      for (int i = 0; i < k; ++i) rest[i] -= a1[i];
      auto it = pg.find(MultiDegree(rest));
      if (it != pg.end()) sum += p1 * it->second;
    }
    if (!(sum == piece)) report.fail("product law fails at alpha=" + alpha.str());
  }
  return report;
}

}  // namespace polaris

#endif  // POLARIS_POLYNOMIAL_HPP
