#pragma once

#include <optional>
#include <random>

#include "hodgelef/instances.hpp"
#include "hodgelef/lefschetz.hpp"

namespace support {

using namespace hodgelef;

inline GVector unit(std::size_t n, std::size_t i) {
  GVector v(n);
  v[i] = 1;
  return v;
}

inline GaussRational small_gauss(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return {Rational(d(rng)), Rational(d(rng))};
}

inline GVector random_vector(std::mt19937_64& rng, std::size_t n, int bound = 3) {
  GVector v(n);
  for (auto& x : v) x = small_gauss(rng, bound);
  return v;
}

// Random Hermitian matrix with small Gaussian-integer entries; `rank_cap`
// limits the rank when set, so singular cases appear too.
inline GMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, std::optional<std::size_t> rank_cap = {}) {
  if (rank_cap) {
    GMatrix f(n, *rank_cap);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < *rank_cap; ++c) f(r, c) = small_gauss(rng, 2);
    GMatrix d(*rank_cap, *rank_cap);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < *rank_cap; ++i) d(i, i) = coin(rng) ? 1 : -1;
    return f * d * f.adjoint();
  }
  GMatrix h(n, n);
  std::uniform_int_distribution<long> real(-4, 4);
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = real(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      h(r, c) = small_gauss(rng, 4);
      h(c, r) = h(r, c).conj();
    }
  }
  return h;
}

struct Overrides {
  std::map<int, GMatrix> gram;
  BlockMap l_blocks;
  bool zero_L = false;
};

// The same algebra rebuilt from its blocks with some of them replaced.
inline LefschetzAlgebra rebuild(const LefschetzAlgebra& a, const Overrides& o) {
  const HodgeFrame& f = a.frame();
  BlockMap l, c;
  DegreeMap g;
  for (int k = 0; k <= f.top_degree(); ++k) {
    g[k] = o.gram.count(k) ? o.gram.at(k) : a.gram(k);
    for (const auto& b : f.blocks(k)) {
      if (f.hodge(b) == 0) continue;
      c[b] = a.conj_block(b);
      if (f.hodge(b.p + 1, b.q + 1) == 0) continue;
      if (o.l_blocks.count(b))
        l[b] = o.l_blocks.at(b);
      else if (!o.zero_L)
        l[b] = a.L_block(b);
    }
  }
  return LefschetzAlgebra::from_blocks(f, l, g, c);
}

inline BigradedVector bv(int k, GVector coords) { return {k, std::move(coords)}; }

// conj_k * conj(v), the conjugate of a coordinate vector.
inline GVector bar(const LefschetzAlgebra& a, int k, const GVector& v) { return a.conj(k) * conj(v); }

}  // namespace support
