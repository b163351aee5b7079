#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hodgelef/lefschetz.hpp"

namespace hodgelef {

struct SignFailure {
  Bigrade bigrade;
  GVector witness;  // primitive ξ in H^{p+q} coordinates with (-1)^{r+q} Q(ξ, ξ̄) <= 0
};

struct HodgeRiemannReport {
  std::vector<std::pair<Bigrade, Bigrade>> orthogonality_failures;
  std::vector<SignFailure> sign_failures;
  bool passed = true;
};

/// Q(α, β) = <L^{n-r} α, L^{n-r} β̄> for primitive α, β of degree 2r <= m = 2n.
GaussRational hodge_riemann_form(const LefschetzAlgebra& a, const BigradedVector& alpha,
                                 const BigradedVector& beta);

HodgeRiemannReport verify_hodge_riemann(const LefschetzAlgebra& a);

// Signature of the intersection pairing on the real points of H^m.
SignatureTriple middle_signature(const LefschetzAlgebra& a);

/// One summand E^{p,q}_k: the real points of L^k(B^{p-k,q-k} + B^{q-k,p-k})
/// inside the middle degree (p + q = m, p <= q, k <= p).
struct EBlock {
  int p = 0;
  int q = 0;
  int k = 0;
  std::size_t real_dim = 0;
  std::size_t expected_dim = 0;
  int sign = 1;  // (-1)^{q+k}
  bool definite = false;
};

struct IndexReport {
  SignatureTriple sigma_direct;
  long sigma_formula = 0;
  std::vector<EBlock> e_blocks;
  bool blocks_orthogonal = true;
  bool blocks_definite = true;
  bool block_dims_match = true;
  bool total_dim_match = true;
  bool match = false;
};

// Optional restriction to a graded subspace: given a degree j <= m, the
// columns spanning the part of the subspace in H^j. An empty function means
// the whole space.
using GradedSubspace = std::function<GMatrix(int)>;

/// The E-block analysis of the middle degree, restricted to `sub` when given:
/// primitives are intersected with sub(deg) before forming the blocks.
/// sigma_formula is left at zero; callers supply the formula they test.
IndexReport index_block_analysis(const LefschetzAlgebra& a, const GradedSubspace& sub = {});

/// Signature of the pairing on the real points of the column span `space`
/// of a conjugation-stable subspace of H^m.
SignatureTriple restricted_signature(const LefschetzAlgebra& a, const GMatrix& space);

// sum over all (p, q) of (-1)^q h^{p,q}.
long hodge_signature_formula(const HodgeFrame& frame);

IndexReport verify_index_theorem(const LefschetzAlgebra& a);

}  // namespace hodgelef
