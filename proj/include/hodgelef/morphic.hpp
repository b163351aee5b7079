#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgelef/hodge_riemann.hpp"
#include "hodgelef/lefschetz.hpp"

namespace hodgelef {

/// Subspaces L̃^t H^k of H^k, stored as spanning columns. Entries with
/// t >= m are the full space and entries with 2t < k are zero; only the
/// levels in between are stored.
class MorphicFiltration {
 public:
  MorphicFiltration() = default;
  explicit MorphicFiltration(HodgeFrame frame) : frame_(std::move(frame)) {}

  // Every stored level equal to the whole space.
  static MorphicFiltration full(const HodgeFrame& frame);
  // Every stored level as large as the bound |p - q| <= 2t - k allows.
  static MorphicFiltration maximal(const HodgeFrame& frame);

  const HodgeFrame& frame() const { return frame_; }

  static bool stored_level(int m, int t, int k) { return 2 * t >= k && t < m; }

  void set(int t, int k, GMatrix span);
  bool has(int t, int k) const { return spans_.count({t, k}) != 0; }

  /// L̃^t H^k with the defaults resolved; throws StructuralError for a
  /// missing stored level.
  GMatrix span(int t, int k) const;

  const std::map<std::pair<int, int>, GMatrix>& stored() const { return spans_; }

  friend bool operator==(const MorphicFiltration&, const MorphicFiltration&) = default;

 private:
  HodgeFrame frame_;
  std::map<std::pair<int, int>, GMatrix> spans_;  // (t, k) -> columns
};

ValidationReport validate_filtration(const LefschetzAlgebra& a, const MorphicFiltration& f);

// h^{p,q}_t = dim(L̃^t H^{p+q} ∩ H^{p,q}), for every (p, q) with h^{p,q} > 0.
HodgeTable morphic_hodge_numbers(const LefschetzAlgebra& a, const MorphicFiltration& f, int t);

// Basis of the intersection of span(s) with the bigraded block b.
GMatrix block_part(const HodgeFrame& frame, const GMatrix& s, Bigrade b);

enum class FamilyKind { EH, OH, LH };

std::string to_string(FamilyKind kind);

struct FamilySummand {
  int t = 0;
  int k = 0;
  GMatrix span;
};

/// EH(a) = ⊕_s L̃^{a+s} H^{2s}, OH(b) = ⊕_s L̃^{b+s} H^{2s+1}, LH(a, b) both.
struct SubspaceFamily {
  FamilyKind kind = FamilyKind::EH;
  int a = 0;
  int b = 0;
  std::vector<FamilySummand> summands;  // increasing k, at most one per degree

  const FamilySummand* in_degree(int k) const;
  // The level t attached to H^{p,q} (a + (p+q)/2 or b + (p+q-1)/2); -1 when
  // the family has no summand of that parity.
  int gamma(int p, int q) const;
};

SubspaceFamily assemble_subfamily(const LefschetzAlgebra& a, const MorphicFiltration& f, FamilyKind kind,
                                  int ea, int ob = 0);

SignatureTriple morphic_signature(const LefschetzAlgebra& a, const MorphicFiltration& f, int t);

struct ConjectureReport {
  bool stmt2_dims = true;
  bool stmt3_decomp = true;
  bool stmt4_star = true;
  bool stmt5_lambda = true;
  bool stmt6_adjoint = true;
  bool pairing_nondeg = true;
  bool all_agree = true;
  bool pairing_implies_dims = true;
  std::vector<std::string> failures;  // "stmtN@k=K" for every failing summand
};

ConjectureReport conjecture_report(const LefschetzAlgebra& a, const MorphicFiltration& f, FamilyKind kind,
                                   int ea, int ob = 0);

struct MorphicIndexReport {
  int level = 0;  // a + n
  IndexReport index;
  bool sub_decomposition = true;
  bool sub_hard_lefschetz = true;
  bool sub_hodge_riemann = true;
};

/// Morphic Hodge index theorem on EH(a): requires the statements of the
/// conjecture report to hold (PreconditionError naming the first failing
/// one), then compares σ_{a+n} with Σ (-1)^q h^{p,q}_{γ(a,p,q)} over even
/// weights.
MorphicIndexReport morphic_hodge_index(const LefschetzAlgebra& a, const MorphicFiltration& f, int ea);

}  // namespace hodgelef
