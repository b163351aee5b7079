#include "hodgelef/hodge_riemann.hpp"

#include <string>

namespace hodgelef {

namespace {

int middle_half(const LefschetzAlgebra& a) {
  if (a.m() % 2 != 0) throw PreconditionError("middle pairing undefined: m = " + std::to_string(a.m()) + " is odd");
  return a.m() / 2;
}

bool is_primitive(const LefschetzAlgebra& a, const BigradedVector& v) {
  return is_zero(a.lambda(v.degree) * v.coords);
}

GMatrix form_matrix(const LefschetzAlgebra& a, int k, const GMatrix& xs, const GMatrix& ys) {
  return xs.transpose() * a.gram(k) * ys.conj();
}

bool positive_definite(const GMatrix& g) {
  if (g.rows() == 0) return true;
  try {
    return hermitian_signature(g).n_plus == g.rows();
  } catch (const NotHermitianError&) {
    return false;
  }
}

GMatrix restrict_primitives(const LefschetzAlgebra& a, Bigrade b, const GradedSubspace& sub) {
  GMatrix prim = primitive_basis(a, b.p, b.q);
  if (!sub || prim.cols() == 0) return prim;
  return intersect(sub(b.degree()), prim);
}

std::size_t primitive_dim_from_frame(const HodgeFrame& f, Bigrade b) {
  return static_cast<std::size_t>(f.hodge(b) - f.hodge(b.p - 1, b.q - 1));
}

}  // namespace

GaussRational hodge_riemann_form(const LefschetzAlgebra& a, const BigradedVector& alpha,
                                 const BigradedVector& beta) {
  const int n = middle_half(a);
  const int k = alpha.degree;
  if (beta.degree != k || k % 2 != 0 || k > a.m())
    throw PreconditionError("Hodge-Riemann form needs primitives of one even degree <= m");
  if (alpha.coords.size() != a.betti(k) || beta.coords.size() != a.betti(k))
    throw StructuralError("vector does not match H^" + std::to_string(k));
  if (!is_primitive(a, alpha) || !is_primitive(a, beta)) throw PreconditionError("non-primitive input");
  GMatrix lp = a.L_power(k, n - k / 2);
  GVector x = lp * alpha.coords;
  GVector y = lp * (a.conj(k) * conj(beta.coords));
  return hermitian_form(a, a.m(), x, y);
}

HodgeRiemannReport verify_hodge_riemann(const LefschetzAlgebra& a) {
  const int n = middle_half(a);
  const HodgeFrame& f = a.frame();
  HodgeRiemannReport rep;
  for (int r = 0; r <= n; ++r) {
    const int k = 2 * r;
    GMatrix lp = a.L_power(k, n - r);
    for (const auto& b : f.blocks(k)) {
      GMatrix prim = primitive_basis(a, b.p, b.q);
      if (prim.cols() == 0) continue;
      GMatrix x = lp * prim;
      for (const auto& other : f.blocks(k)) {
        if (other.p == b.q) continue;
        GMatrix op = primitive_basis(a, other.p, other.q);
        if (op.cols() == 0) continue;
        GMatrix y = lp * (a.conj(k) * op.conj());
        if (!form_matrix(a, a.m(), x, y).is_zero()) rep.orthogonality_failures.emplace_back(b, other);
      }
      const int sign = (r + b.q) % 2 == 0 ? 1 : -1;
      GMatrix q = GaussRational(sign) * form_matrix(a, a.m(), x, x);
      try {
        auto cd = congruence_diagonalize(q);
        for (std::size_t i = 0; i < cd.diagonal.size(); ++i)
          if (sgn(cd.diagonal[i]) <= 0) {
            rep.sign_failures.push_back({b, prim * cd.transform.col(i)});
            break;
          }
      } catch (const NotHermitianError&) {
        rep.sign_failures.push_back({b, prim.col(0)});
      }
    }
  }
  rep.passed = rep.orthogonality_failures.empty() && rep.sign_failures.empty();
  return rep;
}

SignatureTriple middle_signature(const LefschetzAlgebra& a) {
  middle_half(a);
  GMatrix basis = real_basis_matrix(a, a.m());
  return hermitian_signature(pairing_matrix(a, a.m(), basis, basis));
}

SignatureTriple restricted_signature(const LefschetzAlgebra& a, const GMatrix& space) {
  middle_half(a);
  GMatrix pts = real_form(a, a.m()).points(space);
  return hermitian_signature(pairing_matrix(a, a.m(), pts, pts));
}

long hodge_signature_formula(const HodgeFrame& frame) {
  long s = 0;
  for (const auto& [b, dim] : frame.table()) s += (b.q % 2 == 0 ? 1 : -1) * dim;
  return s;
}

IndexReport index_block_analysis(const LefschetzAlgebra& a, const GradedSubspace& sub) {
  const int n = middle_half(a);
  const int m = a.m();
  const HodgeFrame& f = a.frame();
  RealForm rf = real_form(a, m);
  IndexReport rep;

  std::vector<GMatrix> spaces;
  for (int p = 0; p <= n; ++p) {
    const int q = m - p;
    for (int k = 0; k <= p; ++k) {
      Bigrade b1{p - k, q - k};
      Bigrade b2{q - k, p - k};
      GMatrix prim = restrict_primitives(a, b1, sub);
      std::size_t expected = sub ? prim.cols() : primitive_dim_from_frame(f, b1);
      if (p != q) {
        GMatrix other = restrict_primitives(a, b2, sub);
        expected += sub ? other.cols() : primitive_dim_from_frame(f, b2);
        prim = hstack(prim, other);
      }
      GMatrix e = rf.points(a.L_power(m - 2 * k, k) * prim);
      if (e.cols() == 0 && expected == 0) continue;
      EBlock blk;
      blk.p = p;
      blk.q = q;
      blk.k = k;
      blk.real_dim = e.cols();
      blk.expected_dim = expected;
      blk.sign = (q + k) % 2 == 0 ? 1 : -1;
      blk.definite = positive_definite(GaussRational(blk.sign) * pairing_matrix(a, m, e, e));
      if (blk.real_dim != blk.expected_dim) rep.block_dims_match = false;
      if (!blk.definite) rep.blocks_definite = false;
      rep.e_blocks.push_back(blk);
      spaces.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i + 1; j < spaces.size(); ++j)
      if (!pairing_matrix(a, m, spaces[i], spaces[j]).is_zero() ||
          !form_matrix(a, m, spaces[i], spaces[j]).is_zero())
        rep.blocks_orthogonal = false;

  GMatrix middle = sub ? sub(m) : GMatrix::identity(a.betti(m));
  std::size_t total = 0;
  for (const auto& blk : rep.e_blocks) total += blk.real_dim;
  rep.total_dim_match = total == rank(middle);
  rep.sigma_direct = sub ? restricted_signature(a, middle) : middle_signature(a);
  return rep;
}

IndexReport verify_index_theorem(const LefschetzAlgebra& a) {
  middle_half(a);
  auto hr = verify_hodge_riemann(a);
  if (!hr.passed) throw PreconditionError("Hodge-Riemann relations fail; the index theorem does not apply");
  IndexReport rep = index_block_analysis(a);
  rep.sigma_formula = hodge_signature_formula(a.frame());
  rep.match = rep.sigma_direct.net() == rep.sigma_formula;
  return rep;
}

}  // namespace hodgelef
