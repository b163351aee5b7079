#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "hodgelef/exactnum.hpp"

namespace hodgelef {

struct Bigrade {
  int p = 0;
  int q = 0;

  int degree() const { return p + q; }
  Bigrade swapped() const { return {q, p}; }
  friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

using HodgeTable = std::map<Bigrade, int>;

/// Bigraded dimension table h^{p,q}, 0 <= p, q <= m, of a space whose
/// degrees run over 0..2m. Coordinates of H^k are the concatenation of the
/// blocks H^{p,k-p} in increasing p.
class HodgeFrame {
 public:
  HodgeFrame() = default;

  /// Rejects tables with keys outside 0..m, negative entries, an asymmetric
  /// table, or h^{0,0} = 0.
  static HodgeFrame build(const HodgeTable& table, int m);

  int m() const { return m_; }
  int top_degree() const { return 2 * m_; }
  int hodge(int p, int q) const;
  int hodge(Bigrade b) const { return hodge(b.p, b.q); }
  std::size_t betti(int k) const;

  // Every bigrade of total degree k that fits in the frame, zero-dimensional
  // ones included.
  std::vector<Bigrade> blocks(int k) const;
  std::size_t offset(Bigrade b) const;
  std::vector<std::size_t> block_indices(Bigrade b) const;

  HodgeTable table() const;

  friend bool operator==(const HodgeFrame&, const HodgeFrame&) = default;

 private:
  int m_ = 0;
  std::vector<std::vector<int>> h_;
};

struct BigradedVector {
  int degree = 0;
  GVector coords;  // full H^degree coordinates

  GVector block(const HodgeFrame& frame, Bigrade b) const;
  friend bool operator==(const BigradedVector&, const BigradedVector&) = default;
};

// Coordinates of H^k with the block b kept and everything else zeroed.
GVector restrict_to_block(const HodgeFrame& frame, int k, Bigrade b, const GVector& v);

/// Basis of the vectors x with conj_k * conj(x) == x, i.e. the rational
/// points of the real form of H^k under the antilinear conjugation x ->
/// conj_k * x̄. Computed as the kernel over Q of the real 2n x 2n system
/// obtained by splitting x = a + i b.
std::vector<GVector> conjugation_fixed_basis(const GMatrix& conj_k);

/// Real structure of one degree: a Q(i)-basis fixed by conjugation and its
/// inverse, so that the rational real points of any conjugation-stable
/// subspace can be read off from coordinates.
struct RealForm {
  GMatrix basis;
  GMatrix inverse;

  static RealForm from_conjugation(const GMatrix& conj_k);
  // Basis of the rational real points of the (conjugation-stable) column
  // span of `subspace`; its size is the complex dimension of the span.
  GMatrix points(const GMatrix& subspace) const;
};

GMatrix real_points(const GMatrix& real_basis, const GMatrix& subspace);

}  // namespace hodgelef
