#ifndef IDEMKIT_CHARTABLE_HPP
#define IDEMKIT_CHARTABLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "idemkit/charfun.hpp"

namespace idemkit {

/// Irreducible complex characters, rows ordered by degree and then
/// lexicographically on their value vectors.
struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::int64_t> degrees;

  std::size_t size() const noexcept { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles[i]; }
};

inline RepMembership in_rep_ring_p(const ClassFunction& chi, const PrimeSet& primes, const CharacterTable& table) {
  RepMembership out;
  out.member = true;
  for (const auto& irr : table.irreducibles) {
    CycNumber m = inner_product(chi, irr);
    if (!m.is_rational() || !primes.is_local(m.rational_value())) out.member = false;
    out.multiplicities.push_back(std::move(m));
  }
  return out;
}

namespace dixon {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a >= b ? a - b : a + q - b; }

/// Least prime q = 1 mod e with q^2 > 4n, searched below `bound`.
inline std::uint64_t choose_prime(std::uint64_t e, std::uint64_t n, std::uint64_t bound) {
  for (std::uint64_t q = e + 1; q < bound; q += e)
    if (q * q > 4 * n && is_prime(q)) return q;
  throw InternalError("no prime q = 1 mod " + std::to_string(e) + " below bound " + std::to_string(bound));
}

inline std::uint64_t primitive_root(std::uint64_t q) {
  auto factors = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto r : factors)
      if (pow_mod(g, (q - 1) / r, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q == 2
}

/// Row-reduces in place; returns pivot columns. Zero rows are dropped.
inline std::vector<std::size_t> rref(Matrix& rows, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    std::uint64_t inv = inverse_mod(rows[r][c], q);
    for (auto& x : rows[r]) x = mul_mod(x, inv, q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = sub_mod(rows[i][j], mul_mod(f, rows[r][j], q), q);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of the kernel of a square matrix.
inline Matrix nullspace(Matrix a, std::uint64_t q) {
  const std::size_t n = a.size();
  auto pivots = rref(a, q);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (q - a[i][free]) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial via reduction to Hessenberg form; constant term first.
inline Row charpoly(Matrix a, std::uint64_t q) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::size_t piv = n;
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[j][i] != 0) {
        piv = j;
        break;
      }
    if (piv == n) continue;
    if (piv != i + 1) {
      std::swap(a[piv], a[i + 1]);
      for (auto& row : a) std::swap(row[piv], row[i + 1]);
    }
    std::uint64_t inv = inverse_mod(a[i + 1][i], q);
    for (std::size_t j = i + 2; j < n; ++j) {
      std::uint64_t u = mul_mod(a[j][i], inv, q);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) a[j][k] = sub_mod(a[j][k], mul_mod(u, a[i + 1][k], q), q);
      for (std::size_t k = 0; k < n; ++k) a[k][i + 1] = (a[k][i + 1] + mul_mod(u, a[k][j], q)) % q;
    }
  }
  std::vector<Row> p(n + 1);
  p[0] = {1};
  for (std::size_t i = 0; i < n; ++i) {
    Row next(i + 2, 0);
    for (std::size_t k = 0; k <= i; ++k) {
      next[k + 1] = (next[k + 1] + p[i][k]) % q;
      next[k] = sub_mod(next[k], mul_mod(a[i][i], p[i][k], q), q);
    }
    std::uint64_t prod = 1;
    for (std::size_t j = i; j-- > 0;) {
      prod = mul_mod(prod, a[j + 1][j], q);
      std::uint64_t f = mul_mod(a[j][i], prod, q);
      if (f == 0) continue;
      for (std::size_t k = 0; k < p[j].size(); ++k) next[k] = sub_mod(next[k], mul_mod(f, p[j][k], q), q);
    }
    p[i + 1] = std::move(next);
  }
  return p[n];
}

inline std::uint64_t eval_poly(const Row& poly, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (mul_mod(acc, x, q) + poly[i]) % q;
  return acc;
}

}  // namespace dixon

/// Burnside-Dixon-Schneider: common eigenvectors of the class multiplication
/// matrices over F_q (q = 1 mod exp(G)), lifted to exact cyclotomic values by
/// eigenvalue multiplicities.
inline CharacterTable character_table(const GroupPtr& group, std::size_t cap = 2000,
                                      std::uint64_t prime_bound = 100'000'000) {
  using namespace dixon;
  const FiniteGroup& g = *group;
  if (g.order() > cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds character table cap " +
                      std::to_string(cap));
  const auto& classes = g.conjugacy_classes();
  const std::size_t r = classes.size();
  const std::uint64_t n = g.order();
  const std::uint64_t e = g.exponent();
  const std::uint64_t q = choose_prime(e, n, prime_bound);

  // class matrices M_i[j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<Matrix> class_matrices(r, Matrix(r, Row(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      ElementIndex z = classes[k].representative;
      for (auto x : classes[i].members) ++class_matrices[i][g.class_of(g.mul(g.inverse(x), z))][k];
    }

  // simultaneous eigenspaces; each space is a row-reduced basis
  std::vector<Matrix> spaces;
  {
    Matrix id(r, Row(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.size() == 1; });
    if (all_split) break;
    std::vector<Matrix> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      auto pivots = rref(space, q);
      const std::size_t d = space.size();
      Matrix restricted(d, Row(d, 0));
      for (std::size_t col = 0; col < d; ++col) {
        Row image(r, 0);
        for (std::size_t a = 0; a < r; ++a) {
          std::uint64_t acc = 0;
          for (std::size_t b = 0; b < r; ++b) acc = (acc + mul_mod(class_matrices[i][a][b] % q, space[col][b], q)) % q;
          image[a] = acc;
        }
        for (std::size_t l = 0; l < d; ++l) restricted[l][col] = image[pivots[l]];
      }
      auto poly = charpoly(restricted, q);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < q && found < d; ++lambda) {
        if (eval_poly(poly, lambda, q) != 0) continue;
        Matrix shifted = restricted;
        for (std::size_t l = 0; l < d; ++l) shifted[l][l] = sub_mod(shifted[l][l], lambda, q);
        Matrix sub;
        for (const auto& coords : nullspace(shifted, q)) {
          Row v(r, 0);
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t b = 0; b < r; ++b) v[b] = (v[b] + mul_mod(coords[l], space[l][b], q)) % q;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw InternalError("class matrices are not diagonalizable over F_" + std::to_string(q));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InternalError("Dixon splitting did not separate all characters");

  const std::uint64_t zeta = pow_mod(primitive_root(q), (q - 1) / e, q);
  const auto max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
  CharacterTable table{group, {}, {}};
  for (auto& space : spaces) {
    Row w = space.front();
    if (w[0] == 0) throw InternalError("eigenvector vanishes at the identity class");
    std::uint64_t inv0 = inverse_mod(w[0], q);
    for (auto& x : w) x = mul_mod(x, inv0, q);
    // chi(1)^2 = |G| / sum_k w_k w_k* / |C_k|
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + mul_mod(mul_mod(w[k], w[g.inverse_class(k)], q), inverse_mod(classes[k].members.size() % q, q), q)) % q;
    std::uint64_t d2 = mul_mod(n % q, inverse_mod(s, q), q);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d)
      if (d * d % q == d2 && d * d <= n) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("could not recover a character degree");
    Row chi_mod(r);
    for (std::size_t k = 0; k < r; ++k)
      chi_mod[k] = mul_mod(mul_mod(w[k], degree, q), inverse_mod(classes[k].members.size() % q, q), q);

    std::vector<CycNumber> values;
    for (std::size_t k = 0; k < r; ++k) {
      ElementIndex x = classes[k].representative;
      const std::uint64_t o = g.element_order(x);
      const std::uint64_t z = pow_mod(zeta, e / o, q);
      const std::uint64_t inv_o = inverse_mod(o % q, q);
      std::vector<Rational> by_exponent(e);
      for (std::uint64_t j = 0; j < o; ++j) {
        std::uint64_t acc = 0;
        for (std::uint64_t l = 0; l < o; ++l) {
          std::uint64_t val = chi_mod[g.class_of(g.power(x, static_cast<std::int64_t>(l)))];
          acc = (acc + mul_mod(val, pow_mod(z, (o - (j * l) % o) % o, q), q)) % q;
        }
        std::uint64_t mult = mul_mod(acc, inv_o, q);
        if (mult > degree) throw InternalError("eigenvalue multiplicity out of range");
        by_exponent[j * (e / o)] = Rational(static_cast<std::int64_t>(mult));
      }
      values.push_back(CycNumber::from_powers(e, by_exponent));
    }
    table.irreducibles.emplace_back(group, std::move(values));
    table.degrees.push_back(static_cast<std::int64_t>(degree));
  }

  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    const auto& va = table.irreducibles[a].values();
    const auto& vb = table.irreducibles[b].values();
    for (std::size_t k = 0; k < r; ++k) {
      if (lex_less(va[k], vb[k])) return true;
      if (lex_less(vb[k], va[k])) return false;
    }
    return false;
  });
  CharacterTable sorted{group, {}, {}};
  for (auto i : order) {
    sorted.irreducibles.push_back(table.irreducibles[i]);
    sorted.degrees.push_back(table.degrees[i]);
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!(inner_product(sorted[i], sorted[j]) == CycNumber(i == j ? 1 : 0)))
        throw InternalError("computed character table fails orthogonality");
  return sorted;
}

}  // namespace idemkit

#endif  // IDEMKIT_CHARTABLE_HPP
