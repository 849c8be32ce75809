#ifndef POLARIS_ROOTSYS_HPP
#define POLARIS_ROOTSYS_HPP

#include "polaris/matrix.hpp"
#include "polaris/numeric.hpp"
#include "polaris/weight.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace polaris {

/// Dominant weight -> multiplicity in an irreducible module.
using DominantMultiplicities = std::map<Weight, BigInt>;

/// Root system of a simple Lie algebra of type A-G.
///
/// Simple roots follow the Bourbaki numbering. Weights are stored in the
/// fundamental-weight basis, so a weight is dominant iff all coordinates are >= 0.
/// The only representation-theoretic convention that needs care is the labelling of
/// fundamental weights: phi_i here is always the Bourbaki omega_i (for F4 the
/// 26-dimensional module is phi4, for G2 the 7-dimensional module is phi1).
class RootSystem {
 public:
  /// Default cap on explicitly enumerated Weyl orbits.
  static constexpr std::size_t kDefaultOrbitCap = 10'000'000;

  RootSystem(char type_letter, int rank) : type_(type_letter), rank_(rank) {
    validate(type_letter, rank);
    build_simple_roots();
    build_positive_roots();
    build_forms();
  }

  /// Shared, lazily built instance. Instances are immutable apart from an internal
  /// Freudenthal cache that is guarded by a mutex.
  static std::shared_ptr<const RootSystem> get(char type_letter, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> registry;
    std::lock_guard lock(mu);
    auto key = std::make_pair(type_letter, rank);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    auto rs = std::make_shared<const RootSystem>(type_letter, rank);
    registry.emplace(key, rs);
    return rs;
  }

  static void validate(char t, int n) {
    bool ok = false;
    switch (t) {
      case 'A': ok = n >= 1; break;
      case 'B': ok = n >= 2; break;
      case 'C': ok = n >= 3; break;
      case 'D': ok = n >= 3; break;
      case 'E': ok = n >= 6 && n <= 8; break;
      case 'F': ok = n == 4; break;
      case 'G': ok = n == 2; break;
      default: break;
    }
    if (!ok)
      throw std::invalid_argument(std::string("invalid simple type ") + t + std::to_string(n) +
                                  " (valid: A n>=1, B n>=2, C n>=3, D n>=3, E 6-8, F4, G2)");
    if (static_cast<std::size_t>(n) > Weight::kMaxRank)
      throw std::invalid_argument("rank exceeds the supported maximum of " + std::to_string(Weight::kMaxRank));
  }

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  /// Column j is the simple root alpha_j written in fundamental-weight coordinates.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  /// Positive roots in fundamental-weight coordinates, ordered by height.
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Positive roots as nonnegative integer combinations of simple roots (same order).
  const std::vector<std::vector<int>>& positive_roots_simple() const { return positive_simple_; }
  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }

  BigInt weyl_order() const {
    const int n = rank_;
    switch (type_) {
      case 'A': return factorial(n + 1);
      case 'B':
      case 'C': return factorial(n) * (BigInt(1) << n);
      case 'D': return factorial(n) * (BigInt(1) << (n - 1));
      case 'E': return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
      case 'F': return 1152;
      default: return 12;
    }
  }

  /// Squared length of simple root i in the internal integer scale.
  std::int64_t simple_root_norm(int i) const { return simple_norm_[i]; }

  /// Scaled inner product (lambda, mu); the scale is a fixed positive constant per root system.
  std::int64_t inner(const Weight& a, const Weight& b) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      std::int64_t row = 0;
      for (int j = 0; j < rank_; ++j) row += gram_[i][j] * b[j];
      s += a[i] * row;
    }
    return s;
  }

  /// Scaled height: a positive multiple of the sum of simple-root coordinates of mu.
  std::int64_t height(const Weight& mu) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += height_[i] * mu[i];
    return s;
  }

  Weight reflect(Weight mu, int i) const {
    int c = mu[i];
    if (c != 0) mu.add_scaled(simple_[i], -c);
    return mu;
  }

  /// Dominant Weyl conjugate of mu together with the number of simple reflections used
  /// (its parity is the sign of the Weyl element).
  std::pair<Weight, int> to_dominant(Weight mu) const {
    int steps = 0;
    for (;;) {
      int i = 0;
      while (i < rank_ && mu[i] >= 0) ++i;
      if (i == rank_) return {mu, steps};
      mu = reflect(mu, i);
      ++steps;
    }
  }

  bool is_weyl_symmetric_pair(const Weight& a, const Weight& b) const { return to_dominant(a).first == to_dominant(b).first; }

  /// Highest weight of the dual module: -w0(lambda).
  Weight dual(const Weight& lambda) const { return to_dominant(-lambda).first; }

  /// Full Weyl orbit of mu by closure under simple reflections.
  std::vector<Weight> orbit(const Weight& mu, std::size_t cap = kDefaultOrbitCap) const {
    std::unordered_set<Weight, WeightHash> seen{mu};
    std::vector<Weight> out{mu};
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (int i = 0; i < rank_; ++i) {
        if (out[head][i] == 0) continue;
        Weight nu = reflect(out[head], i);
        if (seen.insert(nu).second) {
          out.push_back(nu);
          if (out.size() > cap) throw std::length_error("Weyl orbit exceeds cap " + std::to_string(cap));
        }
      }
    }
    return out;
  }

  /// Dominant weights mu <= lambda (lambda - mu a nonnegative sum of positive roots).
  /// Covers in this poset are subtractions of positive roots, so a breadth-first search
  /// staying inside the dominant chamber reaches all of them.
  std::vector<Weight> dominant_weights_below(const Weight& lambda) const {
    require_dominant(lambda);
    std::set<Weight> seen{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
      Weight mu = queue.front();
      queue.pop_front();
      for (const auto& alpha : positive_) {
        Weight nu = mu - alpha;
        if (nu.is_dominant() && seen.insert(nu).second) queue.push_back(nu);
      }
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return height(a) > height(b); });
    return out;
  }

  /// Freudenthal multiplicities of the dominant weights of V(lambda), memoized.
  const DominantMultiplicities& dominant_multiplicities(const Weight& lambda) const {
    require_dominant(lambda);
    {
      std::lock_guard lock(cache_->mu);
      auto it = cache_->freudenthal.find(lambda);
      if (it != cache_->freudenthal.end()) return *it->second;
    }
    auto computed = std::make_unique<DominantMultiplicities>(freudenthal(lambda));
    std::lock_guard lock(cache_->mu);
    auto [it, inserted] = cache_->freudenthal.emplace(lambda, std::move(computed));
    return *it->second;
  }

  void require_dominant(const Weight& lambda) const {
    if (lambda.size() != static_cast<std::size_t>(rank_))
      throw std::invalid_argument("weight " + lambda.str() + " has wrong length for " + name());
    if (!lambda.is_dominant()) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  }

 private:
  DominantMultiplicities freudenthal(const Weight& lambda) const {
    DominantMultiplicities mult;
    const Weight lr = lambda + rho_;
    const std::int64_t top = inner(lr, lr);
    for (const Weight& mu : dominant_weights_below(lambda)) {
      if (mu == lambda) {
        mult[mu] = 1;
        continue;
      }
      BigInt num = 0;
      for (const auto& alpha : positive_) {
        Weight nu = mu + alpha;
        for (;;) {
          auto it = mult.find(to_dominant(nu).first);
          if (it == mult.end()) break;
          num += it->second * inner(nu, alpha);
          nu += alpha;
        }
      }
      num *= 2;
      const Weight mr = mu + rho_;
      const std::int64_t den = top - inner(mr, mr);
      if (den <= 0) throw ConsistencyFault("Freudenthal denominator vanished at " + mu.str());
      BigInt m = exact_div(num, BigInt(den), "Freudenthal recursion");
      if (m < 0) throw ConsistencyFault("negative Freudenthal multiplicity at " + mu.str());
      if (m > 0) mult[mu] = m;
    }
    return mult;
  }

  // Euclidean realizations (coordinates doubled so that every entry is an integer).
  void build_simple_roots() {
    const int n = rank_;
    std::vector<std::vector<int>> e;
    auto unit = [](int dim, std::initializer_list<std::pair<int, int>> entries) {
      std::vector<int> v(dim, 0);
      for (auto [idx, val] : entries) v[idx] = val;
      return v;
    };
    switch (type_) {
      case 'A':
        for (int i = 0; i < n; ++i) e.push_back(unit(n + 1, {{i, 2}, {i + 1, -2}}));
        break;
      case 'B':
        for (int i = 0; i < n - 1; ++i) e.push_back(unit(n, {{i, 2}, {i + 1, -2}}));
        e.push_back(unit(n, {{n - 1, 2}}));
        break;
      case 'C':
        for (int i = 0; i < n - 1; ++i) e.push_back(unit(n, {{i, 2}, {i + 1, -2}}));
        e.push_back(unit(n, {{n - 1, 4}}));
        break;
      case 'D':
        for (int i = 0; i < n - 1; ++i) e.push_back(unit(n, {{i, 2}, {i + 1, -2}}));
        e.push_back(unit(n, {{n - 2, 2}, {n - 1, 2}}));
        break;
      case 'E': {
        e.push_back({1, -1, -1, -1, -1, -1, -1, 1});
        e.push_back(unit(8, {{0, 2}, {1, 2}}));
        e.push_back(unit(8, {{0, -2}, {1, 2}}));
        for (int i = 1; i <= 5; ++i) e.push_back(unit(8, {{i, -2}, {i + 1, 2}}));
        e.resize(n);
        break;
      }
      case 'F':
        e.push_back(unit(4, {{1, 2}, {2, -2}}));
        e.push_back(unit(4, {{2, 2}, {3, -2}}));
        e.push_back(unit(4, {{3, 2}}));
        e.push_back({1, -1, -1, -1});
        break;
      case 'G':
        e.push_back(unit(3, {{0, 2}, {1, -2}}));
        e.push_back(unit(3, {{0, -4}, {1, 2}, {2, 2}}));
        break;
    }
    auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t(a[i]) * b[i];
      return s;
    };
    sym_.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sym_[i][j] = dot(e[i], e[j]);
    cartan_.assign(n, std::vector<int>(n));
    simple_norm_.resize(n);
    for (int i = 0; i < n; ++i) {
      simple_norm_[i] = sym_[i][i];
      for (int j = 0; j < n; ++j) cartan_[i][j] = static_cast<int>(2 * sym_[i][j] / sym_[i][i]);
    }
    simple_.assign(n, Weight(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) simple_[j].set(i, cartan_[i][j]);
    rho_ = Weight(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho_.set(i, 1);
  }

  void build_positive_roots() {
    const int n = rank_;
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
      std::vector<int> c(n, 0);
      c[i] = 1;
      layer.push_back(c);
      known.insert(c);
    }
    while (!layer.empty()) {
      for (const auto& c : layer) positive_simple_.push_back(c);
      std::set<std::vector<int>> next;
      for (const auto& c : layer) {
        Weight w = from_simple(c);
        for (int i = 0; i < n; ++i) {
          // q = length of the alpha_i-string below c; p = q - <c, alpha_i^vee>.
          int q = 0;
          std::vector<int> down = c;
          while (down[i] > 0) {
            --down[i];
            if (!known.count(down)) break;
            ++q;
          }
          if (q - w[i] > 0) {
            std::vector<int> up = c;
            ++up[i];
            if (!known.count(up)) next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      for (const auto& c : layer) known.insert(c);
    }
    for (const auto& c : positive_simple_) positive_.push_back(from_simple(c));
  }

  Weight from_simple(const std::vector<int>& c) const {
    Weight w(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j)
      if (c[j]) w.add_scaled(simple_[j], c[j]);
    return w;
  }

  void build_forms() {
    const int n = rank_;
    Matrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
    Matrix inv = *a.inverse();
    // omega_i = sum_j inv(j, i) alpha_j, so (omega_i, omega_l) = inv(l, i) |alpha_l|^2 / 2
    // and the height of omega_i is the i-th column sum of inv.
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    std::vector<Rational> h(n);
    BigInt lcm = 1;
    auto absorb = [&lcm](const Rational& r) {
      BigInt d = boost::multiprecision::denominator(r);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    };
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        g[i][l] = inv(l, i) * Rational(simple_norm_[l], 2);
        absorb(g[i][l]);
        h[i] += inv(l, i);
      }
    gram_.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) gram_[i][l] = static_cast<std::int64_t>(BigInt(g[i][l] * lcm));
    BigInt hl = 1;
    for (int i = 0; i < n; ++i) {
      BigInt d = boost::multiprecision::denominator(h[i]);
      hl = hl / boost::multiprecision::gcd(hl, d) * d;
    }
    height_.resize(n);
    for (int i = 0; i < n; ++i) height_[i] = static_cast<std::int64_t>(BigInt(h[i] * hl));
  }

  struct Cache {
    std::mutex mu;
    std::map<Weight, std::unique_ptr<DominantMultiplicities>> freudenthal;
  };

  char type_;
  int rank_;
  std::vector<std::vector<std::int64_t>> sym_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::int64_t> simple_norm_;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<std::vector<int>> positive_simple_;
  Weight rho_;
  std::vector<std::vector<std::int64_t>> gram_;
  std::vector<std::int64_t> height_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Dimension of V(lambda) by the Weyl dimension formula.
inline BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  rs.require_dominant(lambda);
  const Weight lr = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    num *= rs.inner(lr, alpha);
    den *= rs.inner(rs.rho(), alpha);
  }
  return exact_div(num, den, "Weyl dimension formula");
}

}  // namespace polaris

#endif  // POLARIS_ROOTSYS_HPP
