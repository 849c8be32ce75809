#ifndef POLARIS_CHARACTER_HPP
#define POLARIS_CHARACTER_HPP

#include "polaris/numeric.hpp"
#include "polaris/rootsys.hpp"
#include "polaris/weight.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polaris {

namespace testing_hooks {
/// Fault injection for the verification suite: flips the sign of the Newton recursion
/// in sym_power. Never set outside of tests.
inline std::atomic<bool> flip_sym_power_sign{false};
}  // namespace testing_hooks

/// Formal character: sparse multiset of weights for a simple root system or a torus.
///
/// Stored multiplicities are nonzero. Public operations only ever return genuine
/// characters (all multiplicities positive); signed intermediates stay internal.
class FormalCharacter {
 public:
  using Terms = std::unordered_map<Weight, BigInt, WeightHash>;

  /// Character of a simple group.
  explicit FormalCharacter(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)), rank_(rs_->rank()) {}
  /// Character of a torus of the given rank.
  static FormalCharacter torus(int rank) {
    if (rank < 1 || static_cast<std::size_t>(rank) > Weight::kMaxRank)
      throw std::invalid_argument("torus rank must be in 1.." + std::to_string(Weight::kMaxRank));
    return FormalCharacter(nullptr, rank);
  }

  bool is_torus() const { return rs_ == nullptr; }
  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  int rank() const { return rank_; }
  std::string tag_name() const { return is_torus() ? "torus(" + std::to_string(rank_) + ")" : rs_->name(); }

  bool same_tag(const FormalCharacter& o) const {
    if (is_torus() != o.is_torus() || rank_ != o.rank_) return false;
    return is_torus() || rs_->name() == o.rs_->name();
  }
  void require_same_tag(const FormalCharacter& o) const {
    if (!same_tag(o)) throw std::invalid_argument("character tag mismatch: " + tag_name() + " vs " + o.tag_name());
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  BigInt multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Adds m (possibly negative) to the multiplicity of w, dropping zero entries.
  void add(const Weight& w, const BigInt& m) {
    if (w.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("weight " + w.str() + " has wrong length");
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void reserve(std::size_t n) { terms_.reserve(n); }

  BigInt dimension() const {
    BigInt d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
  }

  bool is_genuine() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  void require_genuine(const char* what) const {
    for (const auto& [w, m] : terms_)
      if (m < 0) throw ConsistencyFault(std::string("negative multiplicity escaped ") + what + " at weight " + w.str());
  }

  std::vector<std::pair<Weight, BigInt>> sorted_terms() const {
    std::vector<std::pair<Weight, BigInt>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  FormalCharacter empty_like() const { return FormalCharacter(rs_, rank_); }

  Weight zero_weight() const { return Weight(static_cast<std::size_t>(rank_)); }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.same_tag(b) && a.terms_ == b.terms_;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    require_same_tag(o);
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    require_same_tag(o);
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }

  FormalCharacter scaled(const BigInt& c) const {
    FormalCharacter r = empty_like();
    if (c == 0) return r;
    r.reserve(size());
    for (const auto& [w, m] : terms_) r.terms_.emplace(w, m * c);
    return r;
  }

 private:
  FormalCharacter(std::shared_ptr<const RootSystem> rs, int rank) : rs_(std::move(rs)), rank_(rank) {}

  std::shared_ptr<const RootSystem> rs_;
  int rank_;
  Terms terms_;
};

/// Degrees (beta_1, ..., beta_k) of a multihomogeneous component over k copies or blocks.
struct MultiDegree {
  std::vector<int> parts;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> p) : parts(std::move(p)) {
    for (int a : parts)
      if (a < 0) throw std::invalid_argument("multidegree parts must be nonnegative");
  }
  MultiDegree(std::initializer_list<int> p) : MultiDegree(std::vector<int>(p)) {}

  std::size_t size() const { return parts.size(); }
  int operator[](std::size_t i) const { return parts[i]; }
  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool is_zero() const { return total() == 0; }
  /// Number of nonzero parts.
  int support() const { return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int a) { return a > 0; })); }
  bool dominated_by(const MultiDegree& o) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] > o.parts[i]) return false;
    return true;
  }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }
};

/// All multidegrees with k parts and the given total, in ascending lexicographic order.
inline std::vector<MultiDegree> multidegrees_of_total(int k, int d) {
  std::vector<MultiDegree> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  if (k <= 0) throw std::invalid_argument("number of parts must be positive");
  rec(rec, 0, d);
  return out;
}

/// All multidegrees with k parts and total <= D: by total degree, then ascending lex.
inline std::vector<MultiDegree> multidegrees_up_to(int k, int max_total) {
  std::vector<MultiDegree> out;
  for (int d = 0; d <= max_total; ++d) {
    auto layer = multidegrees_of_total(k, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------------------------
// Construction

/// Full weight multiplicity function of V(lambda): Freudenthal on the dominant chamber,
/// spread over Weyl orbits.
inline FormalCharacter irrep_character(const std::shared_ptr<const RootSystem>& rs, const Weight& lambda) {
  FormalCharacter chi(rs);
  for (const auto& [mu, m] : rs->dominant_multiplicities(lambda))
    for (const Weight& w : rs->orbit(mu)) chi.add(w, m);
  return chi;
}

/// Torus character from an explicit weight list (repetition = multiplicity).
inline FormalCharacter torus_character(int rank, const std::vector<Weight>& weights) {
  FormalCharacter chi = FormalCharacter::torus(rank);
  for (const auto& w : weights) chi.add(w, 1);
  return chi;
}

inline FormalCharacter trivial_like(const FormalCharacter& tag) {
  FormalCharacter one = tag.empty_like();
  one.add(tag.zero_weight(), 1);
  return one;
}

// ---------------------------------------------------------------------------------
// Operations

inline FormalCharacter dualize(const FormalCharacter& chi) {
  FormalCharacter r = chi.empty_like();
  r.reserve(chi.size());
  for (const auto& [w, m] : chi.terms()) r.add(-w, m);
  return r;
}

namespace detail {
// Convolution without sign checks; the smaller operand drives the outer loop.
inline FormalCharacter convolve(const FormalCharacter& a, const FormalCharacter& b) {
  a.require_same_tag(b);
  const FormalCharacter& small = a.size() <= b.size() ? a : b;
  const FormalCharacter& big = a.size() <= b.size() ? b : a;
  FormalCharacter r = a.empty_like();
  if (small.empty()) return r;
  r.reserve(big.size() * 2);
  for (const auto& [w1, m1] : small.terms())
    for (const auto& [w2, m2] : big.terms()) r.add(w1 + w2, m1 * m2);
  return r;
}
}  // namespace detail

inline FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r = detail::convolve(a, b);
  r.require_genuine("tensor");
  return r;
}

/// Adams operation: every weight scaled by m.
inline FormalCharacter adams(const FormalCharacter& chi, int m) {
  if (m <= 0) throw std::invalid_argument("Adams operation needs m >= 1");
  FormalCharacter r = chi.empty_like();
  r.reserve(chi.size());
  for (const auto& [w, mult] : chi.terms()) r.add(m * w, mult);
  return r;
}

/// Symmetric (or exterior) powers S^0..S^dmax by the Newton recursion
///   d S^d = sum_{m=1..d} (+-1)^{m-1} psi^m(chi) S^{d-m}.
class PowerSeries {
 public:
  enum class Kind { symmetric, exterior };

  PowerSeries(FormalCharacter base, Kind kind = Kind::symmetric) : base_(std::move(base)), kind_(kind) {
    base_.require_genuine("power series base");
    powers_.push_back(trivial_like(base_));
  }

  const FormalCharacter& base() const { return base_; }

  const FormalCharacter& operator()(int d) {
    if (d < 0) throw std::invalid_argument("power degree must be >= 0");
    while (static_cast<int>(powers_.size()) <= d) extend();
    return powers_[d];
  }

 private:
  const FormalCharacter& psi(int m) {
    while (static_cast<int>(adams_.size()) < m) adams_.push_back(adams(base_, static_cast<int>(adams_.size()) + 1));
    return adams_[m - 1];
  }

  void extend() {
    const int d = static_cast<int>(powers_.size());
    const bool flip = kind_ == Kind::symmetric && testing_hooks::flip_sym_power_sign.load();
    FormalCharacter acc = base_.empty_like();
    for (int m = 1; m <= d; ++m) {
      bool negative = kind_ == Kind::exterior && (m % 2 == 0);
      if (flip && m % 2 == 0) negative = !negative;
      const FormalCharacter& prev = powers_[d - m];
      if (prev.empty()) continue;
      for (const auto& [w1, m1] : psi(m).terms())
        for (const auto& [w2, m2] : prev.terms()) acc.add(w1 + w2, negative ? BigInt(-m1 * m2) : BigInt(m1 * m2));
    }
    FormalCharacter out = acc.empty_like();
    out.reserve(acc.size());
    const BigInt dd = d;
    for (const auto& [w, m] : acc.terms()) {
      BigInt q = exact_div(m, dd, "Newton power recursion");
      if (q < 0)
        throw ConsistencyFault("negative multiplicity " + q.str() + " at " + w.str() + " in degree " + std::to_string(d) +
                               (kind_ == Kind::symmetric ? " symmetric" : " exterior") + " power");
      out.add(w, q);
    }
    powers_.push_back(std::move(out));
  }

  FormalCharacter base_;
  Kind kind_;
  std::deque<FormalCharacter> adams_;
  std::deque<FormalCharacter> powers_;
};

inline FormalCharacter sym_power(const FormalCharacter& chi, int d) {
  if (d < 0) throw std::invalid_argument("symmetric power degree must be >= 0");
  PowerSeries s(chi, PowerSeries::Kind::symmetric);
  return s(d);
}

inline FormalCharacter ext_power(const FormalCharacter& chi, int d) {
  if (d < 0) throw std::invalid_argument("exterior power degree must be >= 0");
  PowerSeries s(chi, PowerSeries::Kind::exterior);
  return s(d);
}

inline bool is_weyl_symmetric(const FormalCharacter& chi) {
  if (chi.is_torus()) return true;
  const RootSystem& rs = *chi.root_system();
  for (const auto& [w, m] : chi.terms())
    for (int i = 0; i < rs.rank(); ++i)
      if (w[i] != 0 && chi.multiplicity(rs.reflect(w, i)) != m) return false;
  return true;
}

namespace detail {
// Racah-Speiser alternation: the (virtual) multiplicity of every V(lambda) in chi, read off
// by reflecting each mu + rho into the dominant chamber. Works for virtual characters.
inline std::map<Weight, BigInt> alternation(const FormalCharacter& chi) {
  std::map<Weight, BigInt> out;
  if (chi.is_torus()) {
    for (const auto& [w, m] : chi.terms()) out[w] += m;
    return out;
  }
  const RootSystem& rs = *chi.root_system();
  const Weight& rho = rs.rho();
  for (const auto& [mu, m] : chi.terms()) {
    auto [nu, steps] = rs.to_dominant(mu + rho);
    bool regular = true;
    for (int i = 0; i < rs.rank() && regular; ++i) regular = nu[i] != 0;
    if (!regular) continue;
    BigInt& slot = out[nu - rho];
    if (steps % 2) slot -= m;
    else slot += m;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline BigInt trivial_multiplicity_unchecked(const FormalCharacter& chi) {
  if (chi.is_torus()) return chi.multiplicity(chi.zero_weight());
  const RootSystem& rs = *chi.root_system();
  const Weight& rho = rs.rho();
  BigInt total = 0;
  for (const auto& [mu, m] : chi.terms()) {
    auto [nu, steps] = rs.to_dominant(mu + rho);
    if (nu != rho) continue;
    if (steps % 2) total -= m;
    else total += m;
  }
  return total;
}
}  // namespace detail

/// Multiplicity of the trivial module: signed Weyl alternation over the dominant chamber
/// (simple groups), multiplicity of the zero weight (tori).
inline BigInt trivial_multiplicity(const FormalCharacter& chi) {
  if (!is_weyl_symmetric(chi)) throw std::invalid_argument("trivial_multiplicity needs a Weyl-symmetric character");
  BigInt t = detail::trivial_multiplicity_unchecked(chi);
  if (t < 0) throw ConsistencyFault("negative trivial multiplicity " + t.str());
  return t;
}

/// Highest-weight decomposition by iterated extraction: repeatedly remove the Freudenthal
/// character of a maximal remaining dominant weight.
inline std::vector<std::pair<Weight, BigInt>> decompose(const FormalCharacter& chi) {
  std::vector<std::pair<Weight, BigInt>> out;
  if (chi.is_torus()) {
    auto t = chi.sorted_terms();
    for (auto& [w, m] : t)
      if (m < 0) throw ConsistencyFault("negative torus multiplicity in decompose");
    return t;
  }
  if (!is_weyl_symmetric(chi)) throw std::invalid_argument("decompose needs a Weyl-symmetric character");
  const auto& rs = chi.root_system();
  // Work on the dominant part only; symmetry carries the rest.
  std::map<Weight, BigInt> rest;
  for (const auto& [w, m] : chi.terms())
    if (w.is_dominant()) rest[w] = m;
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (rs->height(it->first) > rs->height(top->first)) top = it;
    const Weight lambda = top->first;
    const BigInt m = top->second;
    if (m < 0) throw ConsistencyFault("negative remainder at " + lambda.str() + " during decomposition");
    out.emplace_back(lambda, m);
    for (const auto& [mu, k] : rs->dominant_multiplicities(lambda)) {
      BigInt& slot = rest[mu];
      slot -= m * k;
      if (slot == 0) rest.erase(mu);
      else if (slot < 0) throw ConsistencyFault("negative remainder at " + mu.str() + " during decomposition");
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

/// Trivial multiplicity of x (tensor) y computed without forming the tensor product:
/// sum over lambda of m_lambda(x) * m_{lambda*}(y). Valid for virtual characters too.
inline BigInt pairing_trivial_multiplicity(const FormalCharacter& x, const FormalCharacter& y) {
  x.require_same_tag(y);
  auto ax = detail::alternation(x);
  auto ay = detail::alternation(dualize(y));
  const auto& small = ax.size() <= ay.size() ? ax : ay;
  const auto& big = ax.size() <= ay.size() ? ay : ax;
  BigInt total = 0;
  for (const auto& [lambda, m] : small) {
    auto it = big.find(lambda);
    if (it != big.end()) total += m * it->second;
  }
  return total;
}

/// dim of degree-d invariants: trivial multiplicity of S^d(V*).
inline BigInt invariant_dim(const FormalCharacter& v, int d) {
  return trivial_multiplicity(sym_power(dualize(v), d));
}

/// How multigraded invariant dimensions are assembled from symmetric powers.
enum class InvariantRoute {
  pairing,  ///< convolve all but the largest factor, then pair highest weights with it
  tensor,   ///< full tensor product, then Weyl alternation
};

/// Multigraded invariant dimensions of C[B_1 + ... + B_r]^G, degree beta_a in block a.
/// Symmetric powers of each block's dual are cached.
class BlockInvariants {
 public:
  explicit BlockInvariants(const std::vector<FormalCharacter>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("at least one block is required");
    // Identical blocks (the k copies of V) share one power series.
    for (const auto& b : blocks) {
      blocks.front().require_same_tag(b);
      std::size_t slot = 0;
      while (slot < sources_.size() && !(sources_[slot] == b)) ++slot;
      if (slot == sources_.size()) {
        sources_.push_back(b);
        series_.emplace_back(dualize(b));
      }
      slot_.push_back(slot);
    }
  }

  std::size_t blocks() const { return slot_.size(); }

  const FormalCharacter& sym(std::size_t block, int d) { return series_.at(slot_.at(block))(d); }

  BigInt dim(const MultiDegree& beta, InvariantRoute route = InvariantRoute::pairing) {
    if (beta.size() != slot_.size()) throw std::invalid_argument("multidegree " + beta.str() + " has wrong length");
    std::vector<const FormalCharacter*> factors;
    for (std::size_t a = 0; a < beta.size(); ++a)
      if (beta[a] > 0) factors.push_back(&sym(a, beta[a]));
    if (factors.empty()) return 1;
    if (factors.size() == 1) return trivial_multiplicity(*factors.front());
    if (route == InvariantRoute::tensor) {
      FormalCharacter acc = *factors.front();
      for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, *factors[i]);
      return trivial_multiplicity(acc);
    }
    auto largest = std::max_element(factors.begin(), factors.end(),
                                    [](const auto* a, const auto* b) { return a->size() < b->size(); });
    const FormalCharacter* last = *largest;
    factors.erase(largest);
    FormalCharacter acc = *factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, *factors[i]);
    BigInt t = pairing_trivial_multiplicity(acc, *last);
    if (t < 0) throw ConsistencyFault("negative invariant dimension at " + beta.str());
    return t;
  }

 private:
  std::vector<FormalCharacter> sources_;
  std::vector<PowerSeries> series_;
  std::vector<std::size_t> slot_;
};

/// dim C[kV]^G in multidegree beta (k = number of parts of beta).
inline BigInt multidegree_invariant_dim(const FormalCharacter& v, const MultiDegree& beta,
                                        InvariantRoute route = InvariantRoute::pairing) {
  BlockInvariants inv(std::vector<FormalCharacter>(beta.size(), v));
  return inv.dim(beta, route);
}

/// +1 orthogonal, -1 symplectic, 0 not self-dual (for an irreducible character).
inline int frobenius_indicator(const FormalCharacter& chi) {
  if (trivial_multiplicity(ext_power(chi, 2)) == 1) return -1;
  if (trivial_multiplicity(sym_power(chi, 2)) == 1) return +1;
  return 0;
}

}  // namespace polaris

#endif  // POLARIS_CHARACTER_HPP
