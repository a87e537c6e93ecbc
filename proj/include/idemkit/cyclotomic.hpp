#ifndef IDEMKIT_CYCLOTOMIC_HPP
#define IDEMKIT_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "idemkit/number.hpp"

namespace idemkit {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  if (n == 0) throw InvalidArgument("cyclotomic polynomial of order 0");
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& divisor = cyclotomic_polynomial(d);  // monic
    std::size_t dd = divisor.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      std::int64_t q = poly[i];
      quotient[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= q * divisor[j];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

inline std::uint64_t euler_phi(std::uint64_t n) { return cyclotomic_polynomial(n).size() - 1; }

/// An element of Q(zeta_n), n the conductor, stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) after reduction modulo Phi_n.
class CycNumber {
 public:
  CycNumber() : conductor_(1), coeffs_{Rational(0)} {}
  CycNumber(const Rational& q) : conductor_(1), coeffs_{q} {}  // NOLINT: implicit from rationals
  CycNumber(std::int64_t q) : CycNumber(Rational(q)) {}         // NOLINT

  /// sum_k c_k zeta_n^k for arbitrary exponents; reduced on construction.
  static CycNumber from_powers(std::uint64_t conductor, const std::vector<Rational>& by_exponent) {
    CycNumber z;
    z.conductor_ = conductor;
    z.coeffs_ = reduce(conductor, by_exponent);
    return z;
  }

  static CycNumber from_basis(std::uint64_t conductor, std::vector<Rational> coeffs) {
    if (coeffs.size() != euler_phi(conductor)) throw InvalidArgument("coefficient vector length is not phi(conductor)");
    CycNumber z;
    z.conductor_ = conductor;
    z.coeffs_ = std::move(coeffs);
    return z;
  }

  /// zeta_n^k.
  static CycNumber root_of_unity(std::uint64_t n, std::int64_t k) {
    auto e = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                                        static_cast<std::int64_t>(n));
    std::vector<Rational> v(n);
    v[e] = 1;
    return from_powers(n, v);
  }

  std::uint64_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic number is not rational");
    return coeffs_[0];
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// The same number written over conductor m (n must divide m).
  CycNumber lift(std::uint64_t m) const {
    if (m == conductor_) return *this;
    if (m % conductor_) throw InvalidArgument("lift target is not a multiple of the conductor");
    std::uint64_t step = m / conductor_;
    std::vector<Rational> v(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
    return from_powers(m, v);
  }

  /// Complex conjugation zeta -> zeta^-1.
  CycNumber conjugate() const {
    std::vector<Rational> v(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(conductor_ - i) % conductor_] += coeffs_[i];
    return from_powers(conductor_, v);
  }

  /// Galois action zeta -> zeta^k, k prime to the conductor.
  CycNumber galois(std::int64_t k) const {
    auto n = static_cast<std::int64_t>(conductor_);
    std::vector<Rational> v(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      auto e = ((static_cast<std::int64_t>(i) * k) % n + n) % n;
      v[static_cast<std::size_t>(e)] += coeffs_[i];
    }
    return from_powers(conductor_, v);
  }

  CycNumber operator-() const {
    CycNumber z = *this;
    for (auto& c : z.coeffs_) c = -c;
    return z;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) {
      auto m = std::lcm(a.conductor_, b.conductor_);
      return a.lift(m) + b.lift(m);
    }
    CycNumber z = a;
    for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] += b.coeffs_[i];
    return z;
  }

  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) {
      if (a.conductor_ == 1) return b.scaled(a.coeffs_[0]);
      if (b.conductor_ == 1) return a.scaled(b.coeffs_[0]);
      auto m = std::lcm(a.conductor_, b.conductor_);
      return a.lift(m) * b.lift(m);
    }
    if (a.conductor_ == 1) return CycNumber(a.coeffs_[0] * b.coeffs_[0]);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CycNumber z;
    z.conductor_ = a.conductor_;
    z.coeffs_ = reduce_poly(a.conductor_, std::move(prod));
    return z;
  }

  CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  CycNumber scaled(const Rational& s) const {
    CycNumber z = *this;
    for (auto& c : z.coeffs_) c *= s;
    return z;
  }

  CycNumber pow(std::uint64_t k) const {
    CycNumber result(1), base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      base *= base;
      k >>= 1U;
    }
    return result;
  }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    auto m = std::lcm(a.conductor_, b.conductor_);
    return a.lift(m).coeffs_ == b.lift(m).coeffs_;
  }

  /// Lexicographic on power-basis coefficients over a common conductor.
  friend bool lex_less(const CycNumber& a, const CycNumber& b) {
    auto m = std::lcm(a.conductor_, b.conductor_);
    const auto x = a.lift(m), y = b.lift(m);
    return std::lexicographical_compare(x.coeffs_.begin(), x.coeffs_.end(), y.coeffs_.begin(), y.coeffs_.end());
  }

  /// Readable form such as "-1", "z6^1 + 2/3" (z_n denotes zeta_n).
  std::string to_string() const {
    if (is_rational()) return to_compact_string(coeffs_[0]);
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] == 0) continue;
      Rational c = coeffs_[i];
      bool negative = c < 0;
      if (negative) c = -c;
      if (!s.empty()) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      std::string term = i == 0 ? "" : "z" + std::to_string(conductor_) + "^" + std::to_string(i);
      if (i == 0) s += to_compact_string(c);
      else if (c == 1) s += term;
      else s += to_compact_string(c) + "*" + term;
    }
    return s;
  }

 private:
  static std::vector<Rational> reduce(std::uint64_t n, const std::vector<Rational>& by_exponent) {
    std::vector<Rational> poly(std::max<std::size_t>(n, 1));
    for (std::size_t k = 0; k < by_exponent.size(); ++k) poly[k % n] += by_exponent[k];
    return reduce_poly(n, std::move(poly));
  }

  static std::vector<Rational> reduce_poly(std::uint64_t n, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > d;) {
      if (poly[i] == 0) continue;
      Rational q = poly[i];
      for (std::size_t j = 0; j <= d; ++j)
        if (phi[j] != 0) poly[i - d + j] -= q * phi[j];
    }
    poly.resize(d);
    return poly;
  }

  std::uint64_t conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace idemkit

#endif  // IDEMKIT_CYCLOTOMIC_HPP
