#pragma once

// Reference computations that share no code path with the library routines
// they are compared against.

#include <cstddef>
#include <vector>

#include "hodgelef/exactnum.hpp"
#include "hodgelef/lefschetz.hpp"

namespace oracle {

using hodgelef::GaussRational;
using hodgelef::GMatrix;
using hodgelef::GVector;
using hodgelef::Rational;

// Coefficients c_0..c_n of det(xI - A), by Faddeev-LeVerrier.
inline std::vector<GaussRational> characteristic_polynomial(const GMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<GaussRational> c(n + 1);
  c[n] = 1;
  GMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    GMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    GMatrix am = a * mk;
    GaussRational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / GaussRational(static_cast<long>(k));
  }
  return c;
}

inline std::size_t sign_changes(const std::vector<Rational>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : coeffs) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Inertia of a Hermitian matrix from its characteristic polynomial. All
/// roots are real, so Descartes' rule of signs counts the positive roots of
/// p(x) and of p(-x) exactly; the zero roots are the vanishing low-order
/// coefficients.
inline hodgelef::SignatureTriple hermitian_inertia(const GMatrix& a) {
  auto c = characteristic_polynomial(a);
  hodgelef::SignatureTriple s;
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  s.n_zero = low;
  std::vector<Rational> pos, neg;
  for (std::size_t i = low; i < c.size(); ++i) {
    pos.push_back(c[i].re());
    neg.push_back(i % 2 == 0 ? c[i].re() : Rational(-c[i].re()));
  }
  s.n_plus = sign_changes(pos);
  s.n_minus = sign_changes(neg);
  return s;
}

// Π_{i=1..j} i (m - k - i + 1), the scalar by which Λ^j L^j acts on
// primitives of degree k.
inline Rational tower_constant(int m, int k, int j) {
  Rational c = 1;
  for (int i = 1; i <= j; ++i) c *= Rational(i * (m - k - i + 1));
  return c;
}

struct Extracted {
  int j = 0;
  GVector alpha;
};

/// Lefschetz decomposition by peeling off the deepest tower level: for
/// v = Σ L^j α_j in degree k <= m, Λ^J v = c_J α_J with J maximal, and the
/// remainder v - L^J α_J has one level less. Above the middle, v = L^{k-m} w
/// is pulled back by a linear solve first. Components are returned in
/// increasing j, zero ones dropped.
inline std::vector<Extracted> inductive_decomposition(const hodgelef::LefschetzAlgebra& a, int k, GVector v) {
  const int m = a.m();
  int shift = 0;
  if (k > m) {
    shift = k - m;
    k = 2 * m - k;
    auto w = hodgelef::solve(a.L_power(k, shift), v);
    if (!w) return {};
    v = *w;
  }
  std::vector<Extracted> out;
  for (int big_j = k / 2; big_j >= 0; --big_j) {
    const int base = k - 2 * big_j;
    GVector down = v;
    for (int s = 0; s < big_j; ++s) down = a.lambda(k - 2 * s) * down;
    GVector alpha = (GaussRational(1) / GaussRational(tower_constant(m, base, big_j))) * down;
    if (!hodgelef::is_zero(alpha)) {
      out.insert(out.begin(), {big_j + shift, alpha});
      v = v - a.L_power(base, big_j) * alpha;
    }
  }
  return out;
}

}  // namespace oracle
