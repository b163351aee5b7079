#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgelef/errors.hpp"
#include "hodgelef/exactnum.hpp"
#include "hodgelef/graded.hpp"

namespace hodgelef {

// L: H^{p,q} -> H^{p+1,q+1}, conjugation: H^{p,q} -> H^{q,p}, Gram per degree.
using BlockMap = std::map<Bigrade, GMatrix>;
using DegreeMap = std::map<int, GMatrix>;

/// A finite-dimensional bigraded algebra with a degree-2 operator L, a
/// Hermitian form <x, y> = x^T G conj(y) on each H^k and an antilinear
/// conjugation x -> C x̄.
///
/// Derived data (the adjoint Λ, primitive subspaces, the Lefschetz
/// decomposition basis and the star operator) is computed once at
/// construction, as far as the input allows it. Operations that need a
/// piece that could not be formed throw PreconditionError.
class LefschetzAlgebra {
 public:
  LefschetzAlgebra() = default;

  /// Missing blocks are zero. Throws StructuralError on any block whose
  /// shape disagrees with the frame or on a block key outside it.
  static LefschetzAlgebra from_blocks(HodgeFrame frame, const BlockMap& l_blocks,
                                      const DegreeMap& gram_blocks, const BlockMap& conj_blocks);

  const HodgeFrame& frame() const { return frame_; }
  int m() const { return frame_.m(); }
  std::size_t betti(int k) const { return frame_.betti(k); }

  // Degree-level matrices. L(k): H^k -> H^{k+2}; lambda(k): H^k -> H^{k-2}.
  const GMatrix& L(int k) const { return l_.at(idx(k)); }
  const GMatrix& gram(int k) const { return gram_.at(idx(k)); }
  const GMatrix& conj(int k) const { return conj_.at(idx(k)); }
  const GMatrix& lambda(int k) const;

  GMatrix L_block(Bigrade b) const;
  GMatrix conj_block(Bigrade b) const;

  // L^j as a map H^k -> H^{k+2j}.
  GMatrix L_power(int k, int j) const;

  bool has_lambda() const { return lambda_ok_; }
  std::optional<int> degenerate_gram_degree() const { return degenerate_degree_; }

  /// Basis of ker Λ ∩ H^{p,q}, as columns in H^{p+q} coordinates. Bigrades
  /// outside the frame give an empty matrix.
  const GMatrix& primitives(Bigrade b) const;

  // Columns of D_k are L^j e over primitive e of degree k - 2j; one entry of
  // `tower_of` per column names (j, bigrade of e).
  struct DecompositionBasis {
    GMatrix basis;
    std::vector<std::pair<int, Bigrade>> tower_of;
    std::optional<GMatrix> inverse;
  };
  const DecompositionBasis& decomposition_basis(int k) const;

  // *̄ v = star_matrix(k) * conj(v) for v in H^k.
  const GMatrix& star_matrix(int k) const;

  friend bool operator==(const LefschetzAlgebra& a, const LefschetzAlgebra& b) {
    return a.frame_ == b.frame_ && a.l_ == b.l_ && a.gram_ == b.gram_ && a.conj_ == b.conj_;
  }

 private:
  std::size_t idx(int k) const;
  void analyze();

  HodgeFrame frame_;
  std::vector<GMatrix> l_;
  std::vector<GMatrix> gram_;
  std::vector<GMatrix> conj_;

  bool lambda_ok_ = false;
  std::optional<int> degenerate_degree_;
  std::vector<GMatrix> lambda_;
  std::map<Bigrade, GMatrix> primitive_;
  std::vector<DecompositionBasis> decomp_;
  std::optional<std::string> star_error_;
  std::vector<GMatrix> star_;
};

/// Axiom checks, one entry per axiom and degree (names of the form
/// "axiom@k=K"). When `definite` is set, positive definiteness of every Gram
/// block is reported as well.
ValidationReport validate_lefschetz(const LefschetzAlgebra& a, bool definite = false);

// Λ_k for k = 0..2m. Throws PreconditionError naming the degenerate degree.
std::vector<GMatrix> adjoint_of_L(const LefschetzAlgebra& a);

GMatrix primitive_basis(const LefschetzAlgebra& a, int p, int q);

struct PrimitiveComponent {
  int j = 0;
  BigradedVector alpha;
};

struct PrimitiveDecomposition {
  int degree = 0;
  std::vector<PrimitiveComponent> components;  // increasing j, nonzero only
};

PrimitiveDecomposition lefschetz_decompose(const LefschetzAlgebra& a, const BigradedVector& v);
BigradedVector reconstruct(const LefschetzAlgebra& a, const PrimitiveDecomposition& d);

// L^{m-k}: H^k -> H^{2m-k} bijective. Requires k <= m.
bool hard_lefschetz_check(const LefschetzAlgebra& a, int k);

BigradedVector star(const LefschetzAlgebra& a, const BigradedVector& v);

// <x, y> on H^k.
GaussRational hermitian_form(const LefschetzAlgebra& a, int k, const GVector& x, const GVector& y);

/// (α, β) = <α, *̄β> for α in H^k and β in H^{2m-k}. Bilinear; on the middle
/// degree it is symmetric.
GaussRational intersection_pairing(const LefschetzAlgebra& a, const BigradedVector& alpha,
                                   const BigradedVector& beta);

// Matrix [(x_i, y_j)] for columns x_i of `xs` in H^k and y_j of `ys` in H^{2m-k}.
GMatrix pairing_matrix(const LefschetzAlgebra& a, int k, const GMatrix& xs, const GMatrix& ys);

std::vector<BigradedVector> real_basis(const LefschetzAlgebra& a, int k);
GMatrix real_basis_matrix(const LefschetzAlgebra& a, int k);
RealForm real_form(const LefschetzAlgebra& a, int k);

}  // namespace hodgelef
