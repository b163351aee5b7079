#include "hodgelef/morphic.hpp"

#include <algorithm>
#include <cstdlib>

namespace hodgelef {

namespace {

std::string level_name(const std::string& what, int t, int k) {
  return what + "@t=" + std::to_string(t) + ",k=" + std::to_string(k);
}

std::string degree_name(const std::string& what, int k) { return what + "@k=" + std::to_string(k); }

GMatrix primitive_space(const LefschetzAlgebra& a, int k) {
  GMatrix out(a.betti(k), 0);
  for (const auto& b : a.frame().blocks(k)) {
    GMatrix prim = primitive_basis(a, b.p, b.q);
    if (prim.cols() > 0) out = hstack(out, prim);
  }
  return out;
}

bool positive_definite(const GMatrix& g) {
  if (g.rows() == 0) return true;
  try {
    return hermitian_signature(g).n_plus == g.rows();
  } catch (const NotHermitianError&) {
    return false;
  }
}

bool same_span(const GMatrix& u, const GMatrix& v) {
  return rank(u) == rank(v) && span_contains(u, v);
}

}  // namespace

MorphicFiltration MorphicFiltration::full(const HodgeFrame& frame) {
  MorphicFiltration f(frame);
  const int m = frame.m();
  for (int k = 0; k <= frame.top_degree(); ++k)
    for (int t = (k + 1) / 2; t < m; ++t) f.set(t, k, GMatrix::identity(frame.betti(k)));
  return f;
}

MorphicFiltration MorphicFiltration::maximal(const HodgeFrame& frame) {
  MorphicFiltration f(frame);
  const int m = frame.m();
  for (int k = 0; k <= frame.top_degree(); ++k)
    for (int t = (k + 1) / 2; t < m; ++t) {
      std::vector<std::size_t> keep;
      for (const auto& b : frame.blocks(k))
        if (std::abs(b.p - b.q) <= 2 * t - k)
          for (std::size_t i : frame.block_indices(b)) keep.push_back(i);
      f.set(t, k, GMatrix::identity(frame.betti(k)).select_cols(keep));
    }
  return f;
}

void MorphicFiltration::set(int t, int k, GMatrix span) {
  const int m = frame_.m();
  if (k < 0 || k > frame_.top_degree() || !stored_level(m, t, k))
    throw StructuralError("filtration level (t=" + std::to_string(t) + ", k=" + std::to_string(k) +
                          ") is implicit and cannot be set");
  if (span.rows() != frame_.betti(k))
    throw StructuralError("filtration level (t=" + std::to_string(t) + ", k=" + std::to_string(k) +
                          ") has vectors of length " + std::to_string(span.rows()) + ", expected " +
                          std::to_string(frame_.betti(k)));
  spans_[{t, k}] = std::move(span);
}

GMatrix MorphicFiltration::span(int t, int k) const {
  if (k < 0 || k > frame_.top_degree()) throw StructuralError("degree " + std::to_string(k) + " out of range");
  if (t >= frame_.m()) return GMatrix::identity(frame_.betti(k));
  if (2 * t < k) return GMatrix(frame_.betti(k), 0);
  auto it = spans_.find({t, k});
  if (it == spans_.end())
    throw StructuralError("filtration level (t=" + std::to_string(t) + ", k=" + std::to_string(k) +
                          ") must be given explicitly");
  return it->second;
}

GMatrix block_part(const HodgeFrame& frame, const GMatrix& s, Bigrade b) {
  GMatrix basis = column_basis(s);
  if (basis.cols() == 0 || frame.hodge(b) == 0) return GMatrix(s.rows(), 0);
  std::vector<std::size_t> other;
  auto inside = frame.block_indices(b);
  for (std::size_t r = 0; r < s.rows(); ++r)
    if (std::find(inside.begin(), inside.end(), r) == inside.end()) other.push_back(r);
  auto kr = mat_kernel_rank(basis.select_rows(other));
  return basis * GMatrix::from_columns(basis.cols(), kr.kernel);
}

ValidationReport validate_filtration(const LefschetzAlgebra& a, const MorphicFiltration& f) {
  if (!(f.frame() == a.frame())) throw StructuralError("filtration frame differs from the algebra frame");
  const HodgeFrame& fr = a.frame();
  const int m = fr.m();
  const int top = fr.top_degree();
  ValidationReport rep;

  for (int k = 0; k <= top; ++k)
    for (int t = (k + 1) / 2; t < m; ++t) {
      GMatrix s = f.span(t, k);
      rep.add(level_name("monotone", t, k), span_contains(f.span(t + 1, k), s));
      rep.add(level_name("conj_stable", t, k), span_contains(s, a.conj(k) * s.conj()));

      std::size_t split = 0;
      bool bound = true;
      for (const auto& b : fr.blocks(k)) {
        split += block_part(fr, s, b).cols();
        if (std::abs(b.p - b.q) > 2 * t - k && fr.hodge(b) > 0)
          if (!s.select_rows(fr.block_indices(b)).is_zero()) bound = false;
      }
      rep.add(level_name("bigrade_split", t, k), split == rank(s));
      rep.add(level_name("bound", t, k), bound, "components outside |p-q| <= 2t-k");
      if (k + 2 <= top) rep.add(level_name("L_closed", t, k), span_contains(f.span(t + 1, k + 2), a.L(k) * s));
    }
  if (m >= 1) rep.add("omega_algebraic", span_contains(f.span(1, 2), a.L(0)), "L(H^0) must lie in level t=1");
  return rep;
}

HodgeTable morphic_hodge_numbers(const LefschetzAlgebra& a, const MorphicFiltration& f, int t) {
  HodgeTable out;
  const HodgeFrame& fr = a.frame();
  for (int k = 0; k <= fr.top_degree(); ++k) {
    GMatrix s = f.span(t, k);
    for (const auto& b : fr.blocks(k))
      if (fr.hodge(b) > 0) out[b] = static_cast<int>(block_part(fr, s, b).cols());
  }
  return out;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::EH:
      return "EH";
    case FamilyKind::OH:
      return "OH";
    case FamilyKind::LH:
      return "LH";
  }
  return "?";
}

const FamilySummand* SubspaceFamily::in_degree(int k) const {
  for (const auto& s : summands)
    if (s.k == k) return &s;
  return nullptr;
}

int SubspaceFamily::gamma(int p, int q) const {
  const int w = p + q;
  if (w % 2 == 0 && kind != FamilyKind::OH) return a + w / 2;
  if (w % 2 != 0 && kind != FamilyKind::EH) return b + (w - 1) / 2;
  return -1;
}

SubspaceFamily assemble_subfamily(const LefschetzAlgebra& a, const MorphicFiltration& f, FamilyKind kind,
                                  int ea, int ob) {
  if (ea < 0 || ob < 0) throw PreconditionError("family indices must be nonnegative");
  SubspaceFamily fam;
  fam.kind = kind;
  fam.a = ea;
  fam.b = ob;
  const int m = a.m();
  for (int k = 0; k <= 2 * m; ++k) {
    bool even = k % 2 == 0;
    if (even && kind != FamilyKind::OH) fam.summands.push_back({ea + k / 2, k, f.span(ea + k / 2, k)});
    if (!even && kind != FamilyKind::EH && k <= 2 * m - 1)
      fam.summands.push_back({ob + (k - 1) / 2, k, f.span(ob + (k - 1) / 2, k)});
  }
  return fam;
}

SignatureTriple morphic_signature(const LefschetzAlgebra& a, const MorphicFiltration& f, int t) {
  if (a.m() % 2 != 0) throw PreconditionError("middle pairing undefined: m is odd");
  const int n = a.m() / 2;
  if (t < n) throw PreconditionError("morphic signature needs t >= n = " + std::to_string(n));
  return restricted_signature(a, f.span(t, a.m()));
}

ConjectureReport conjecture_report(const LefschetzAlgebra& a, const MorphicFiltration& f, FamilyKind kind,
                                   int ea, int ob) {
  SubspaceFamily fam = assemble_subfamily(a, f, kind, ea, ob);
  const int m = a.m();
  const int top = 2 * m;
  std::map<int, GMatrix> basis;
  for (const auto& s : fam.summands) basis[s.k] = column_basis(s.span);

  ConjectureReport rep;
  auto fail = [&rep](bool& flag, const std::string& what, int k) {
    flag = false;
    rep.failures.push_back(degree_name(what, k));
  };

  for (const auto& [k, p] : basis) {
    const GMatrix& dual = basis.at(top - k);

    if (p.cols() != dual.cols()) fail(rep.stmt2_dims, "stmt2", k);

    bool inside = true;
    for (const auto& v : p.columns()) {
      for (const auto& c : lefschetz_decompose(a, {k, v}).components)
        if (!span_contains(basis.at(c.alpha.degree), GMatrix::column(c.alpha.coords))) inside = false;
      if (!inside) break;
    }
    if (!inside) fail(rep.stmt3_decomp, "stmt3", k);

    if (!span_contains(dual, a.star_matrix(k) * p.conj())) fail(rep.stmt4_star, "stmt4", k);

    if (k >= 2 && !span_contains(basis.at(k - 2), a.lambda(k) * p)) fail(rep.stmt5_lambda, "stmt5", k);

    if (k >= 2) {
      // λ is the adjoint of L: A_{k-2} -> A_k for the restricted forms g.
      const GMatrix& lower = basis.at(k - 2);
      bool ok = true;
      GMatrix mk(p.cols(), lower.cols());
      GMatrix image = a.L(k - 2) * lower;
      for (std::size_t c = 0; c < lower.cols() && ok; ++c) {
        auto x = solve(p, image.col(c));
        if (!x) {
          ok = false;
          break;
        }
        for (std::size_t r = 0; r < p.cols(); ++r) mk(r, c) = (*x)[r];
      }
      if (ok) {
        GMatrix g_low = lower.transpose() * a.gram(k - 2) * lower.conj();
        GMatrix g_high = p.transpose() * a.gram(k) * p.conj();
        auto g_low_inv = inverse(g_low);
        if (!g_low_inv) {
          ok = false;
        } else {
          GMatrix lam = (*g_low_inv * mk.transpose() * g_high).conj();
          ok = a.lambda(k) * p == lower * lam;
        }
      }
      if (!ok) fail(rep.stmt6_adjoint, "stmt6", k);
    }

    GMatrix pm = pairing_matrix(a, k, p, dual);
    if (!(p.cols() == dual.cols() && rank(pm) == p.cols())) fail(rep.pairing_nondeg, "pairing", k);
  }

  const bool s2 = rep.stmt2_dims;
  rep.all_agree = rep.stmt3_decomp == s2 && rep.stmt4_star == s2 && rep.stmt5_lambda == s2 &&
                  rep.stmt6_adjoint == s2;
  rep.pairing_implies_dims = !rep.pairing_nondeg || s2;
  return rep;
}

MorphicIndexReport morphic_hodge_index(const LefschetzAlgebra& a, const MorphicFiltration& f, int ea) {
  if (a.m() % 2 != 0) throw PreconditionError("middle pairing undefined: m is odd");
  const int m = a.m();
  const int n = m / 2;
  ConjectureReport cr = conjecture_report(a, f, FamilyKind::EH, ea);
  const std::pair<const char*, bool> hyp[] = {{"stmt2_dims", cr.stmt2_dims},
                                              {"stmt3_decomp", cr.stmt3_decomp},
                                              {"stmt4_star", cr.stmt4_star},
                                              {"stmt5_lambda", cr.stmt5_lambda},
                                              {"stmt6_adjoint", cr.stmt6_adjoint}};
  for (const auto& [name, ok] : hyp)
    if (!ok) throw PreconditionError(std::string("morphic conjecture fails on EH(a): ") + name);

  SubspaceFamily fam = assemble_subfamily(a, f, FamilyKind::EH, ea);
  std::map<int, GMatrix> basis;
  for (const auto& s : fam.summands) basis[s.k] = column_basis(s.span);

  MorphicIndexReport out;
  out.level = ea + n;
  out.index = index_block_analysis(a, [&basis](int k) { return basis.at(k); });
  long formula = 0;
  const HodgeFrame& fr = a.frame();
  for (const auto& [k, p] : basis)
    for (const auto& b : fr.blocks(k))
      formula += (b.q % 2 == 0 ? 1 : -1) * static_cast<long>(block_part(fr, p, b).cols());
  out.index.sigma_formula = formula;
  out.index.match = out.index.sigma_direct.net() == formula;

  for (const auto& [k, p] : basis) {
    GMatrix generated(a.betti(k), 0);
    for (int j = std::max(0, k - m); 2 * j <= k; ++j) {
      GMatrix prim = intersect(basis.at(k - 2 * j), primitive_space(a, k - 2 * j));
      generated = hstack(generated, a.L_power(k - 2 * j, j) * prim);
    }
    if (!same_span(p, generated)) out.sub_decomposition = false;

    if (k <= m) {
      GMatrix img = a.L_power(k, m - k) * p;
      const GMatrix& dual = basis.at(2 * m - k);
      if (rank(img) != p.cols() || dual.cols() != p.cols() || !span_contains(dual, img))
        out.sub_hard_lefschetz = false;
    }

    if (k <= m) {
      const int r = k / 2;
      GMatrix lp = a.L_power(k, n - r);
      for (const auto& b : fr.blocks(k)) {
        GMatrix prim = primitive_basis(a, b.p, b.q);
        if (prim.cols() == 0) continue;
        GMatrix x = lp * intersect(p, prim);
        const int sign = (r + b.q) % 2 == 0 ? 1 : -1;
        if (!positive_definite(GaussRational(sign) * (x.transpose() * a.gram(m) * x.conj())))
          out.sub_hodge_riemann = false;
      }
    }
  }
  return out;
}

}  // namespace hodgelef
