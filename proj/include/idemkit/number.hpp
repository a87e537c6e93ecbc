#ifndef IDEMKIT_NUMBER_HPP
#define IDEMKIT_NUMBER_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "idemkit/errors.hpp"

namespace idemkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Elementary number theory on machine integers.

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors of n in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a modulo m, for gcd(a, m) = 1. Returns 0 when m == 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidArgument("inverse_mod: arguments are not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// ---------------------------------------------------------------------------
// Rational helpers.

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

/// Human-oriented form: integers without the "/1".
inline std::string to_compact_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return to_string(q);
}

/// Parses "a/b" or "a".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in rational '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("malformed rational '" + s + "'");
  }
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

// ---------------------------------------------------------------------------

/// A finite set of primes P. Empty means the rational case.
class PrimeSet {
 public:
  PrimeSet() = default;

  PrimeSet(std::initializer_list<std::uint64_t> primes) : PrimeSet(std::vector<std::uint64_t>(primes)) {}

  explicit PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
      throw InvalidArgument("prime set contains a repeated prime");
    for (auto p : primes_)
      if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  }

  /// Parses a comma separated list such as "2,3". The empty string is the empty set.
  static PrimeSet parse(std::string_view text) {
    std::vector<std::uint64_t> primes;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (item.empty()) continue;
      if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidArgument("malformed prime '" + item + "'");
      primes.push_back(std::stoull(item));
    }
    return PrimeSet(std::move(primes));
  }

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(std::uint64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

  /// Largest divisor of n whose prime factors all lie in P.
  std::uint64_t p_part(std::uint64_t n) const {
    std::uint64_t m = 1;
    for (auto p : primes_)
      while (n % p == 0) {
        n /= p;
        m *= p;
      }
    return m;
  }

  std::uint64_t p_prime_part(std::uint64_t n) const { return n / p_part(n); }
  bool is_p_number(std::uint64_t n) const { return p_part(n) == n; }
  bool is_p_prime_number(std::uint64_t n) const { return p_part(n) == 1; }

  /// Membership of q in Z_(P): no prime of P divides the reduced denominator.
  bool is_local(const Rational& q) const {
    const Integer& den = boost::multiprecision::denominator(q);
    for (auto p : primes_)
      if (den % p == 0) return false;
    return true;
  }

  /// The primes of P dividing n.
  PrimeSet relevant_to(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    for (auto p : primes_)
      if (n % p == 0) out.push_back(p);
    return PrimeSet(std::move(out));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(primes_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// All subsets of the primes dividing n, the empty set first.
inline std::vector<PrimeSet> prime_subsets(std::uint64_t n) {
  auto primes = prime_divisors(n);
  std::vector<PrimeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::vector<std::uint64_t> subset;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(primes[i]);
    out.emplace_back(std::move(subset));
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeSet& a, const PrimeSet& b) {
    if (a.primes().size() != b.primes().size()) return a.primes().size() < b.primes().size();
    return a.primes() < b.primes();
  });
  return out;
}

}  // namespace idemkit

#endif  // IDEMKIT_NUMBER_HPP
