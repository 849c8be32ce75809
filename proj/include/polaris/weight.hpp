#ifndef POLARIS_WEIGHT_HPP
#define POLARIS_WEIGHT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polaris {

/// Integer lattice vector of fixed length.
///
/// For a simple root system the coordinates are taken in the fundamental-weight basis,
/// for a torus they are the character exponents. Storage is inline so that weights can
/// be used as hash keys in large sparse characters without allocation.
class Weight {
 public:
  static constexpr std::size_t kMaxRank = 16;
  using value_type = std::int16_t;

  Weight() = default;

  explicit Weight(std::size_t rank) : size_(check_rank(rank)) {}

  Weight(std::initializer_list<int> coords) : Weight(std::span<const int>(coords.begin(), coords.size())) {}

  explicit Weight(std::span<const int> coords) : size_(check_rank(coords.size())) {
    for (std::size_t i = 0; i < size_; ++i) c_[i] = narrow(coords[i]);
  }

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return c_[i]; }
  void set(std::size_t i, int v) { c_[i] = narrow(v); }

  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + size_}; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + size_, [](value_type v) { return v == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.begin() + size_, [](value_type v) { return v >= 0; });
  }

  Weight& operator+=(const Weight& o) {
    same_size(o);
    for (std::size_t i = 0; i < size_; ++i) c_[i] = narrow(int(c_[i]) + o.c_[i]);
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    same_size(o);
    for (std::size_t i = 0; i < size_; ++i) c_[i] = narrow(int(c_[i]) - o.c_[i]);
    return *this;
  }
  /// Adds m * o in place.
  Weight& add_scaled(const Weight& o, int m) {
    same_size(o);
    for (std::size_t i = 0; i < size_; ++i) c_[i] = narrow(int(c_[i]) + m * int(o.c_[i]));
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (std::size_t i = 0; i < a.size_; ++i) a.c_[i] = narrow(-int(a.c_[i]));
    return a;
  }
  friend Weight operator*(int m, Weight a) {
    for (std::size_t i = 0; i < a.size_; ++i) a.c_[i] = narrow(m * int(a.c_[i]));
    return a;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.size_ == b.size_ && std::equal(a.c_.begin(), a.c_.begin() + a.size_, b.c_.begin());
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.size_, b.c_.begin(),
                                                  b.c_.begin() + b.size_);
  }

  std::size_t hash() const {
    // FNV-1a over the used coordinates.
    std::uint64_t h = 1469598103934665603ull ^ size_;
    for (std::size_t i = 0; i < size_; ++i) {
      h ^= static_cast<std::uint16_t>(c_[i]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

 private:
  static std::uint8_t check_rank(std::size_t r) {
    if (r > kMaxRank) throw std::invalid_argument("weight length exceeds " + std::to_string(kMaxRank));
    return static_cast<std::uint8_t>(r);
  }
  static value_type narrow(int v) {
    if (v < std::numeric_limits<value_type>::min() || v > std::numeric_limits<value_type>::max())
      throw std::overflow_error("weight coordinate out of range: " + std::to_string(v));
    return static_cast<value_type>(v);
  }
  void same_size(const Weight& o) const {
    if (o.size_ != size_) throw std::invalid_argument("weight length mismatch");
  }

  std::array<value_type, kMaxRank> c_{};
  std::uint8_t size_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace polaris

#endif  // POLARIS_WEIGHT_HPP
