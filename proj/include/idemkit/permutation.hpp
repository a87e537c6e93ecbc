#ifndef IDEMKIT_PERMUTATION_HPP
#define IDEMKIT_PERMUTATION_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "idemkit/errors.hpp"
#include "idemkit/number.hpp"

namespace idemkit {

/// A bijection of {0, ..., degree-1}. Products compose as functions:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) throw InvalidArgument("images do not form a permutation");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(images));
  }

  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
    auto images = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto from = cycle[i];
        auto to = cycle[(i + 1) % cycle.size()];
        if (from >= degree) throw InvalidArgument("point " + std::to_string(from) + " exceeds degree");
        if (used[from]) throw InvalidArgument("point " + std::to_string(from) + " repeated in cycles");
        used[from] = true;
        images[from] = to;
      }
    }
    return Permutation(std::move(images));
  }

  /// Parses disjoint-cycle notation such as "(0 1)(2 3 4)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (i == text.size()) throw InvalidArgument("empty permutation");
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidArgument("expected '(' in '" + std::string(text) + "'");
      ++i;
      std::vector<std::uint32_t> cycle;
      for (;;) {
        skip_space();
        if (i == text.size()) throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] == ',') {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw InvalidArgument("unexpected character '" + std::string(1, text[i]) + "'");
        std::uint64_t value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (value > 0xFFFFFFFFULL) throw InvalidArgument("point index too large");
          ++i;
        }
        cycle.push_back(static_cast<std::uint32_t>(value));
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_space();
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  Permutation pow(std::int64_t k) const {
    Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    Permutation result = identity(degree());
    while (e > 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  /// Disjoint-cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const {
    std::string s;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      s += '(';
      std::uint32_t x = start;
      bool first = true;
      do {
        if (!first) s += ' ';
        first = false;
        s += std::to_string(x);
        seen[x] = true;
        x = images_[x];
      } while (x != start);
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InvalidArgument("permutation degree mismatch");
    Permutation p;
    p.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Least n >= 1 with g^n = identity.
inline std::uint64_t element_order(const Permutation& g) {
  // lcm of cycle lengths
  std::uint64_t order = 1;
  std::vector<bool> seen(g.degree(), false);
  for (std::uint32_t start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    std::uint32_t x = start;
    do {
      seen[x] = true;
      x = g(x);
      ++len;
    } while (x != start);
    order = std::lcm(order, len);
  }
  return order;
}

/// The commuting factorization g = g_P * g_P' into powers of g, returned as
/// {g_P, g_P'}; the order of g_P is a P-number and that of g_P' is prime to P.
inline std::pair<Permutation, Permutation> p_part_decomposition(const Permutation& g, const PrimeSet& primes) {
  std::uint64_t order = element_order(g);
  std::uint64_t m = primes.p_part(order);
  std::uint64_t n = order / m;
  auto prime_exp = static_cast<std::int64_t>(m * inverse_mod(m % n, n) % order);
  auto part_exp = static_cast<std::int64_t>(n * inverse_mod(n % m, m) % order);
  return {g.pow(part_exp), g.pow(prime_exp)};
}

}  // namespace idemkit

template <>
struct std::hash<idemkit::Permutation> : idemkit::PermutationHash {};

#endif  // IDEMKIT_PERMUTATION_HPP
