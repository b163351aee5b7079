#include "hodgelef/lefschetz.hpp"

#include <algorithm>
#include <string>

namespace hodgelef {

namespace {

std::string bg_name(Bigrade b) { return std::to_string(b.p) + "," + std::to_string(b.q); }

std::string shape(const GMatrix& g) { return std::to_string(g.rows()) + "x" + std::to_string(g.cols()); }

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_hermitian(const GMatrix& g) { return g.is_square() && g.adjoint() == g; }

GMatrix embed_block(const HodgeFrame& frame, Bigrade b, const GMatrix& block_cols) {
  GMatrix out(frame.betti(b.degree()), block_cols.cols());
  out.set_block(frame.offset(b), 0, block_cols);
  return out;
}

const GMatrix& empty_matrix() {
  static const GMatrix e;
  return e;
}

}  // namespace

std::size_t LefschetzAlgebra::idx(int k) const {
  if (k < 0 || k > frame_.top_degree()) throw StructuralError("degree " + std::to_string(k) + " out of range");
  return static_cast<std::size_t>(k);
}

LefschetzAlgebra LefschetzAlgebra::from_blocks(HodgeFrame frame, const BlockMap& l_blocks,
                                               const DegreeMap& gram_blocks, const BlockMap& conj_blocks) {
  LefschetzAlgebra a;
  a.frame_ = std::move(frame);
  const HodgeFrame& f = a.frame_;
  const int top = f.top_degree();
  const int m = f.m();
  auto in_frame = [m](Bigrade b) { return b.p >= 0 && b.q >= 0 && b.p <= m && b.q <= m; };

  for (int k = 0; k <= top; ++k) {
    a.l_.emplace_back(k + 2 <= top ? f.betti(k + 2) : 0, f.betti(k));
    a.gram_.emplace_back(f.betti(k), f.betti(k));
    a.conj_.emplace_back(f.betti(k), f.betti(k));
  }

  for (const auto& [b, mat] : l_blocks) {
    if (!in_frame(b)) throw StructuralError("L block (" + bg_name(b) + ") outside the frame");
    Bigrade t{b.p + 1, b.q + 1};
    auto rows = static_cast<std::size_t>(f.hodge(t));
    auto cols = static_cast<std::size_t>(f.hodge(b));
    if (mat.rows() != rows || mat.cols() != cols)
      throw StructuralError("L block (" + bg_name(b) + ") has shape " + shape(mat) + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
    if (rows == 0 || cols == 0) continue;
    a.l_[static_cast<std::size_t>(b.degree())].set_block(f.offset(t), f.offset(b), mat);
  }
  for (const auto& [k, mat] : gram_blocks) {
    if (k < 0 || k > top) throw StructuralError("Gram block for degree " + std::to_string(k) + " outside 0..2m");
    auto n = f.betti(k);
    if (mat.rows() != n || mat.cols() != n)
      throw StructuralError("Gram block for degree " + std::to_string(k) + " has shape " + shape(mat) +
                            ", expected " + std::to_string(n) + "x" + std::to_string(n));
    a.gram_[static_cast<std::size_t>(k)] = mat;
  }
  for (const auto& [b, mat] : conj_blocks) {
    if (!in_frame(b)) throw StructuralError("conjugation block (" + bg_name(b) + ") outside the frame");
    auto rows = static_cast<std::size_t>(f.hodge(b.swapped()));
    auto cols = static_cast<std::size_t>(f.hodge(b));
    if (mat.rows() != rows || mat.cols() != cols)
      throw StructuralError("conjugation block (" + bg_name(b) + ") has shape " + shape(mat) + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
    if (rows == 0 || cols == 0) continue;
    a.conj_[static_cast<std::size_t>(b.degree())].set_block(f.offset(b.swapped()), f.offset(b), mat);
  }
  a.analyze();
  return a;
}

GMatrix LefschetzAlgebra::L_block(Bigrade b) const {
  Bigrade t{b.p + 1, b.q + 1};
  auto rows = static_cast<std::size_t>(frame_.hodge(t));
  auto cols = static_cast<std::size_t>(frame_.hodge(b));
  if (rows == 0 || cols == 0) return GMatrix(rows, cols);
  return L(b.degree()).block(frame_.offset(t), rows, frame_.offset(b), cols);
}

GMatrix LefschetzAlgebra::conj_block(Bigrade b) const {
  auto rows = static_cast<std::size_t>(frame_.hodge(b.swapped()));
  auto cols = static_cast<std::size_t>(frame_.hodge(b));
  if (rows == 0 || cols == 0) return GMatrix(rows, cols);
  return conj(b.degree()).block(frame_.offset(b.swapped()), rows, frame_.offset(b), cols);
}

GMatrix LefschetzAlgebra::L_power(int k, int j) const {
  GMatrix out = GMatrix::identity(betti(k));
  for (int s = 0; s < j; ++s) {
    int d = k + 2 * s;
    if (d > frame_.top_degree()) return GMatrix(0, betti(k));
    out = L(d) * out;
  }
  return out;
}

const GMatrix& LefschetzAlgebra::lambda(int k) const {
  if (!lambda_ok_)
    throw PreconditionError("adjoint undefined: Gram form is degenerate in degree " +
                            std::to_string(*degenerate_degree_));
  return lambda_.at(idx(k));
}

const GMatrix& LefschetzAlgebra::primitives(Bigrade b) const {
  auto it = primitive_.find(b);
  if (it == primitive_.end()) {
    if (!lambda_ok_) (void)lambda(0);
    return empty_matrix();
  }
  return it->second;
}

const LefschetzAlgebra::DecompositionBasis& LefschetzAlgebra::decomposition_basis(int k) const {
  if (!lambda_ok_) (void)lambda(0);
  return decomp_.at(idx(k));
}

const GMatrix& LefschetzAlgebra::star_matrix(int k) const {
  if (!lambda_ok_) (void)lambda(0);
  if (star_error_) throw StructuralError(*star_error_);
  return star_.at(idx(k));
}

void LefschetzAlgebra::analyze() {
  const int top = frame_.top_degree();
  const int m = frame_.m();

  std::vector<GMatrix> gram_inv;
  for (int k = 0; k <= top; ++k) {
    auto inv = inverse(gram(k));
    if (!inv) {
      degenerate_degree_ = k;
      return;
    }
    gram_inv.push_back(std::move(*inv));
  }
  lambda_ok_ = true;

  // <L x, y> = <x, Λ y>  <=>  G_k conj(Λ) = L^T G_{k+2}
  for (int k = 0; k <= top; ++k) {
    if (k < 2) {
      lambda_.emplace_back(0, betti(k));
      continue;
    }
    auto s = static_cast<std::size_t>(k - 2);
    lambda_.push_back((gram_inv[s] * L(k - 2).transpose() * gram(k)).conj());
  }

  for (int k = 0; k <= top; ++k)
    for (const auto& b : frame_.blocks(k)) {
      auto cols = frame_.block_indices(b);
      if (cols.empty()) continue;
      auto kr = mat_kernel_rank(lambda(k).select_cols(cols));
      GMatrix basis = GMatrix::from_columns(cols.size(), kr.kernel);
      primitive_[b] = embed_block(frame_, b, basis);
      if (k > m && basis.cols() > 0 && !star_error_)
        star_error_ = "primitive class in degree " + std::to_string(k) + " above the middle degree";
    }

  for (int k = 0; k <= top; ++k) {
    DecompositionBasis d;
    std::vector<GVector> cols;
    for (int j = std::max(0, k - m); 2 * j <= k; ++j) {
      int kj = k - 2 * j;
      GMatrix lj = L_power(kj, j);
      for (const auto& b : frame_.blocks(kj)) {
        if (primitives(b).cols() == 0) continue;
        GMatrix img = lj * primitives(b);
        for (auto& c : img.columns()) {
          cols.push_back(std::move(c));
          d.tower_of.emplace_back(j, b);
        }
      }
    }
    d.basis = GMatrix::from_columns(betti(k), cols);
    d.inverse = inverse(d.basis);
    if (!d.inverse && !star_error_) star_error_ = "Lefschetz decomposition fails in degree " + std::to_string(k);
    decomp_.push_back(std::move(d));
  }
  if (star_error_) return;

  // *̄ (L^j α) = (-1)^{k(k+1)/2} j!/(m-k-j)! L^{m-k-j} ᾱ with k = deg α; the
  // matrix form is S = T conj(D^{-1}) where T collects the images of the
  // decomposition basis columns.
  for (int k = 0; k <= top; ++k) {
    const auto& d = decomp_[static_cast<std::size_t>(k)];
    GMatrix t(betti(top - k), d.basis.cols());
    std::size_t col = 0;
    for (int j = std::max(0, k - m); 2 * j <= k; ++j) {
      int kj = k - 2 * j;
      int e = m - kj - j;
      Rational ratio(factorial(j), factorial(e));
      ratio.canonicalize();
      GaussRational coeff(ratio);
      if ((kj * (kj + 1) / 2) % 2 != 0) coeff = -coeff;
      GMatrix le = L_power(kj, e);
      for (const auto& b : frame_.blocks(kj)) {
        const GMatrix& prim = primitives(b);
        if (prim.cols() == 0) continue;
        GMatrix img = coeff * (le * (conj(kj) * prim.conj()));
        t.set_block(0, col, img);
        col += prim.cols();
      }
    }
    star_.push_back(t * d.inverse->conj());
  }
}

ValidationReport validate_lefschetz(const LefschetzAlgebra& a, bool definite) {
  ValidationReport rep;
  const HodgeFrame& f = a.frame();
  const int top = f.top_degree();
  const int m = f.m();
  auto at = [](const std::string& name, int k) { return name + "@k=" + std::to_string(k); };

  for (int k = 0; k <= top; ++k) {
    const GMatrix& g = a.gram(k);
    rep.add(at("gram_hermitian", k), is_hermitian(g));
    rep.add(at("gram_nondegenerate", k), rank(g) == g.rows());
    bool orth = true;
    for (const auto& b1 : f.blocks(k))
      for (const auto& b2 : f.blocks(k)) {
        if (b1 == b2 || f.hodge(b1) == 0 || f.hodge(b2) == 0) continue;
        if (!g.block(f.offset(b1), static_cast<std::size_t>(f.hodge(b1)), f.offset(b2),
                     static_cast<std::size_t>(f.hodge(b2)))
                 .is_zero())
          orth = false;
      }
    rep.add(at("gram_bigrade_orthogonal", k), orth);
    if (definite) {
      bool pd = is_hermitian(g) && hermitian_signature(g).n_plus == g.rows();
      rep.add(at("gram_positive_definite", k), pd);
    }

    const GMatrix& c = a.conj(k);
    rep.add(at("conj_involution", k), c * c.conj() == GMatrix::identity(c.rows()));
    rep.add(at("conj_form_compatible", k), c.transpose() * g * c.conj() == g.conj());
    if (k + 2 <= top) rep.add(at("L_real", k), a.L(k) * c == a.conj(k + 2) * a.L(k).conj());
  }

  if (!a.has_lambda()) {
    rep.add("adjoint_exists", false,
            "Gram form is degenerate in degree " + std::to_string(*a.degenerate_gram_degree()));
    return rep;
  }
  rep.add("adjoint_exists", true);

  for (int k = 0; k <= top; ++k) {
    const auto n = a.betti(k);
    GMatrix lam_l(n, n);  // Λ_{k+2} L_k
    if (k + 2 <= top) lam_l = a.lambda(k + 2) * a.L(k);
    GMatrix l_lam(n, n);  // L_{k-2} Λ_k
    if (k >= 2) l_lam = a.L(k - 2) * a.lambda(k);
    GaussRational hk(m - k);
    rep.add(at("bracket_lambda_L", k), lam_l - l_lam == hk * GMatrix::identity(n));
    if (k + 2 <= top) {
      GaussRational hk2(m - k - 2);
      rep.add(at("bracket_h_L", k), hk2 * a.L(k) - hk * a.L(k) == GaussRational(-2) * a.L(k));
    }
    if (k >= 2) {
      GaussRational hk2(m - k + 2);
      rep.add(at("bracket_h_lambda", k),
              hk2 * a.lambda(k) - hk * a.lambda(k) == GaussRational(2) * a.lambda(k));
      // Λ must map H^{p,q} into H^{p-1,q-1}.
      bool shift = true;
      for (const auto& b : f.blocks(k)) {
        if (f.hodge(b) == 0) continue;
        for (const auto& t : f.blocks(k - 2)) {
          if (t == Bigrade{b.p - 1, b.q - 1} || f.hodge(t) == 0) continue;
          if (!a.lambda(k).block(f.offset(t), static_cast<std::size_t>(f.hodge(t)), f.offset(b),
                                static_cast<std::size_t>(f.hodge(b)))
                   .is_zero())
            shift = false;
        }
      }
      rep.add(at("lambda_bigrade_shift", k), shift);
    }

    for (const auto& b : f.blocks(k)) {
      if (f.hodge(b) == 0) continue;
      const GMatrix& prim = a.primitives(b);
      std::string name = "primitive_kernel@" + bg_name(b);
      if (k > m) {
        rep.add(name, prim.cols() == 0, "ker Λ must vanish above the middle degree");
        continue;
      }
      auto cols = f.block_indices(b);
      auto kr = mat_kernel_rank(a.L_power(k, m - k + 1).select_cols(cols));
      GMatrix via_power = embed_block(f, b, GMatrix::from_columns(cols.size(), kr.kernel));
      bool same = prim.cols() == via_power.cols() && span_contains(prim, via_power);
      rep.add(name, same);
    }
    rep.add(at("decomposition_basis", k), a.decomposition_basis(k).inverse.has_value());
  }
  return rep;
}

std::vector<GMatrix> adjoint_of_L(const LefschetzAlgebra& a) {
  std::vector<GMatrix> out;
  for (int k = 0; k <= a.frame().top_degree(); ++k) out.push_back(a.lambda(k));
  return out;
}

GMatrix primitive_basis(const LefschetzAlgebra& a, int p, int q) {
  const GMatrix& prim = a.primitives({p, q});
  if (prim.cols() == 0 && prim.rows() == 0 && p >= 0 && q >= 0 && p + q <= a.frame().top_degree())
    return GMatrix(a.betti(p + q), 0);
  return prim;
}

PrimitiveDecomposition lefschetz_decompose(const LefschetzAlgebra& a, const BigradedVector& v) {
  const int k = v.degree;
  if (k < 0 || k > a.frame().top_degree() || v.coords.size() != a.betti(k))
    throw StructuralError("vector does not match H^" + std::to_string(k));
  const auto& d = a.decomposition_basis(k);
  if (!d.inverse) throw PreconditionError("Lefschetz decomposition fails in degree " + std::to_string(k));
  GVector x = *d.inverse * v.coords;

  PrimitiveDecomposition out;
  out.degree = k;
  std::size_t col = 0;
  for (int j = std::max(0, k - a.m()); 2 * j <= k; ++j) {
    GVector alpha(a.betti(k - 2 * j));
    for (const auto& b : a.frame().blocks(k - 2 * j)) {
      const GMatrix& prim = a.primitives(b);
      for (std::size_t c = 0; c < prim.cols(); ++c) alpha = alpha + x[col++] * prim.col(c);
    }
    if (!is_zero(alpha)) out.components.push_back({j, {k - 2 * j, std::move(alpha)}});
  }
  return out;
}

BigradedVector reconstruct(const LefschetzAlgebra& a, const PrimitiveDecomposition& d) {
  GVector sum(a.betti(d.degree));
  for (const auto& c : d.components) sum = sum + a.L_power(c.alpha.degree, c.j) * c.alpha.coords;
  return {d.degree, sum};
}

bool hard_lefschetz_check(const LefschetzAlgebra& a, int k) {
  const int m = a.m();
  if (k < 0 || k > m) throw PreconditionError("hard Lefschetz is stated for 0 <= k <= m");
  if (a.betti(k) != a.betti(2 * m - k)) return false;
  return rank(a.L_power(k, m - k)) == a.betti(k);
}

BigradedVector star(const LefschetzAlgebra& a, const BigradedVector& v) {
  const int k = v.degree;
  if (k < 0 || k > a.frame().top_degree() || v.coords.size() != a.betti(k))
    throw StructuralError("vector does not match H^" + std::to_string(k));
  return {a.frame().top_degree() - k, a.star_matrix(k) * hodgelef::conj(v.coords)};
}

GaussRational hermitian_form(const LefschetzAlgebra& a, int k, const GVector& x, const GVector& y) {
  GVector gy = a.gram(k) * hodgelef::conj(y);
  GaussRational s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

GaussRational intersection_pairing(const LefschetzAlgebra& a, const BigradedVector& alpha,
                                   const BigradedVector& beta) {
  if (alpha.degree + beta.degree != a.frame().top_degree())
    throw PreconditionError("pairing needs degrees adding up to 2m");
  BigradedVector sb = star(a, beta);
  if (alpha.coords.size() != sb.coords.size()) throw StructuralError("vector does not match its degree");
  return hermitian_form(a, alpha.degree, alpha.coords, sb.coords);
}

GMatrix pairing_matrix(const LefschetzAlgebra& a, int k, const GMatrix& xs, const GMatrix& ys) {
  const int top = a.frame().top_degree();
  // (x, y) = x^T G_k conj(S_{2m-k} conj(y)) = x^T G_k conj(S_{2m-k}) y
  return xs.transpose() * a.gram(k) * a.star_matrix(top - k).conj() * ys;
}

std::vector<BigradedVector> real_basis(const LefschetzAlgebra& a, int k) {
  std::vector<BigradedVector> out;
  for (auto& v : conjugation_fixed_basis(a.conj(k))) out.push_back({k, std::move(v)});
  return out;
}

GMatrix real_basis_matrix(const LefschetzAlgebra& a, int k) {
  return GMatrix::from_columns(a.betti(k), conjugation_fixed_basis(a.conj(k)));
}

RealForm real_form(const LefschetzAlgebra& a, int k) { return RealForm::from_conjugation(a.conj(k)); }

}  // namespace hodgelef
