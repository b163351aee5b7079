#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "hodgelef/lefschetz.hpp"
#include "hodgelef/morphic.hpp"

namespace hodgelef {

/// Dimensions of the primitive spaces B^{p,q}, p + q <= m.
struct PrimitiveDiamond {
  int m = 0;
  HodgeTable b;

  // Throws StructuralError for keys with p + q > m, negative or asymmetric
  // entries, or b^{0,0} = 0.
  void check() const;
  int at(int p, int q) const;
};

/// h^{p,q} = sum over j of b^{p-j,q-j}, over the towers that reach (p, q).
HodgeFrame induced_frame(const PrimitiveDiamond& d);

/// The free algebra on a primitive diamond: basis L^j e over generators e of
/// B^{p,q} and 0 <= j <= m - (p+q), L shifting each tower, conjugation
/// swapping e^{(p,q)}_i with e^{(q,p)}_i, and the diagonal Gram form
/// <L^j e, L^j e> = ε_{p,q} c_j(p+q) with c_j(k) = j! (m-k)! / (m-k-j)!.
LefschetzAlgebra free_algebra(const PrimitiveDiamond& d);

struct Instance {
  LefschetzAlgebra algebra;
  MorphicFiltration filtration;
};

Instance projective_space(int m);
// Surface with irregularity q, geometric genus p_g, h^{1,1} = h11 and
// algebraic rank rho (the hyperplane class included), 1 <= rho <= h11.
Instance surface(int q, int pg, int h11, int rho);
Instance abelian_surface(int rho);
Instance k3(int rho);
/// 2n-dimensional model whose only primitive classes besides 1 sit in the
/// middle degree, with dims given by `middle` (keys p + q = 2n). The
/// algebraic middle space is spanned by ω^n and r - 1 primitive (n,n) classes.
Instance hypersurface(int n, const HodgeTable& middle, int r);

struct BuiltinParams {
  std::map<std::string, long> ints;
  HodgeTable primitive;  // hypersurface middle diamond
};

// Names: projective_space(m), surface(q, pg, h11, rho), abelian_surface(rho),
// k3(rho), hypersurface(n, primitive, r).
Instance builtin(std::string_view name, const BuiltinParams& params);

enum class RandomMode { ConjectureHolds, Arbitrary };

struct RandomBounds {
  int min_m = 1;
  int max_m = 4;
  int max_dim = 2;       // per primitive bigrade
  int zero_percent = 40;  // chance that a primitive bigrade is empty
  bool scramble = true;   // random change of basis inside every H^{p,q}
};

/// Deterministic in (seed, bounds, mode). The filtration is built from a
/// level τ per generator: L^j e lies in L̃^t H^k iff τ(e) <= 2t - k. In
/// arbitrary mode one generator is first lifted to a higher τ, then one
/// extra conjugation-stable vector is added at a single level above the
/// middle degree and the filtration is closed again under the level maps
/// and L.
Instance random_instance(std::uint64_t seed, const RandomBounds& bounds, RandomMode mode);

}  // namespace hodgelef
