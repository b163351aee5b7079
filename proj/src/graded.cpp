#include "hodgelef/graded.hpp"

#include <algorithm>
#include <string>

#include "hodgelef/errors.hpp"

namespace hodgelef {

HodgeFrame HodgeFrame::build(const HodgeTable& table, int m) {
  if (m < 0) throw StructuralError("middle degree must be nonnegative");
  HodgeFrame f;
  f.m_ = m;
  f.h_.assign(static_cast<std::size_t>(m) + 1, std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
  for (const auto& [b, dim] : table) {
    if (b.p < 0 || b.q < 0 || b.p > m || b.q > m)
      throw StructuralError("Hodge number h^{" + std::to_string(b.p) + "," + std::to_string(b.q) +
                            "} lies outside 0.." + std::to_string(m));
    if (dim < 0) throw StructuralError("negative Hodge number");
    f.h_[b.p][b.q] = dim;
  }
  for (int p = 0; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q)
      if (f.h_[p][q] != f.h_[q][p])
        throw StructuralError("asymmetric Hodge table: h^{" + std::to_string(p) + "," + std::to_string(q) +
                              "} = " + std::to_string(f.h_[p][q]) + " but h^{" + std::to_string(q) + "," +
                              std::to_string(p) + "} = " + std::to_string(f.h_[q][p]));
  if (f.h_[0][0] < 1) throw StructuralError("h^{0,0} must be at least 1");
  return f;
}

int HodgeFrame::hodge(int p, int q) const {
  if (p < 0 || q < 0 || p > m_ || q > m_) return 0;
  return h_[p][q];
}

std::size_t HodgeFrame::betti(int k) const {
  std::size_t b = 0;
  for (const auto& bg : blocks(k)) b += static_cast<std::size_t>(hodge(bg));
  return b;
}

std::vector<Bigrade> HodgeFrame::blocks(int k) const {
  std::vector<Bigrade> out;
  if (k < 0 || k > 2 * m_) return out;
  for (int p = std::max(0, k - m_); p <= std::min(k, m_); ++p) out.push_back({p, k - p});
  return out;
}

std::size_t HodgeFrame::offset(Bigrade b) const {
  std::size_t off = 0;
  for (const auto& bg : blocks(b.degree())) {
    if (bg == b) return off;
    off += static_cast<std::size_t>(hodge(bg));
  }
  throw StructuralError("bigrade (" + std::to_string(b.p) + "," + std::to_string(b.q) + ") outside the frame");
}

std::vector<std::size_t> HodgeFrame::block_indices(Bigrade b) const {
  std::vector<std::size_t> idx;
  std::size_t off = offset(b);
  for (int k = 0; k < hodge(b); ++k) idx.push_back(off + static_cast<std::size_t>(k));
  return idx;
}

HodgeTable HodgeFrame::table() const {
  HodgeTable t;
  for (int p = 0; p <= m_; ++p)
    for (int q = 0; q <= m_; ++q)
      if (h_[p][q] != 0) t[{p, q}] = h_[p][q];
  return t;
}

GVector BigradedVector::block(const HodgeFrame& frame, Bigrade b) const {
  std::size_t off = frame.offset(b);
  return GVector(coords.begin() + static_cast<std::ptrdiff_t>(off),
                 coords.begin() + static_cast<std::ptrdiff_t>(off + static_cast<std::size_t>(frame.hodge(b))));
}

GVector restrict_to_block(const HodgeFrame& frame, int k, Bigrade b, const GVector& v) {
  GVector out(frame.betti(k));
  for (auto i : frame.block_indices(b)) out[i] = v[i];
  return out;
}

std::vector<GVector> conjugation_fixed_basis(const GMatrix& conj_k) {
  const std::size_t n = conj_k.rows();
  // x = a + i b, C = Cr + i Ci:  C x̄ = (Cr a + Ci b) + i (Ci a - Cr b)
  GMatrix sys(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      GaussRational cr(conj_k(r, c).re());
      GaussRational ci(conj_k(r, c).im());
      sys(r, c) = cr;
      sys(r, n + c) = ci;
      sys(n + r, c) = ci;
      sys(n + r, n + c) = -cr;
    }
  for (std::size_t k = 0; k < 2 * n; ++k) sys(k, k) -= 1;
  std::vector<GVector> out;
  for (const auto& z : mat_kernel_rank(sys).kernel) {
    GVector x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = GaussRational(z[k].re(), z[n + k].re());
    out.push_back(std::move(x));
  }
  return out;
}

RealForm RealForm::from_conjugation(const GMatrix& conj_k) {
  RealForm rf;
  rf.basis = GMatrix::from_columns(conj_k.rows(), conjugation_fixed_basis(conj_k));
  auto inv = hodgelef::inverse(rf.basis);
  if (!inv) throw StructuralError("conjugation has no real form of full dimension");
  rf.inverse = std::move(*inv);
  return rf;
}

GMatrix RealForm::points(const GMatrix& subspace) const {
  const std::size_t n = basis.rows();
  GMatrix sub = column_basis(subspace);
  if (sub.cols() == 0) return GMatrix(n, 0);
  // In coordinates of a conjugation-fixed basis, conjugation is entrywise, so
  // the rational points of a stable subspace are spanned by the real and
  // imaginary parts of any spanning set.
  GMatrix z = inverse * sub;
  GMatrix parts(n, 2 * z.cols());
  for (std::size_t c = 0; c < z.cols(); ++c)
    for (std::size_t r = 0; r < n; ++r) {
      parts(r, 2 * c) = GaussRational(z(r, c).re());
      parts(r, 2 * c + 1) = GaussRational(z(r, c).im());
    }
  return basis * column_basis(parts);
}

GMatrix real_points(const GMatrix& real_basis, const GMatrix& subspace) {
  auto inv = inverse(real_basis);
  if (!inv) throw StructuralError("real basis is not a basis of the ambient space");
  return RealForm{real_basis, std::move(*inv)}.points(subspace);
}

}  // namespace hodgelef
