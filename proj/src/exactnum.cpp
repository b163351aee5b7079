#include "hodgelef/exactnum.hpp"

#include <algorithm>
#include <cctype>

#include "hodgelef/errors.hpp"

namespace hodgelef {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw StructuralError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussRational parse_gauss(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw StructuralError("empty scalar");
  if (s.back() != 'i') return GaussRational(parse_rational(s));

  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // The imaginary coefficient starts at the last sign that is not leading.
  std::size_t split = 0;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = s.substr(0, split);
  std::string im_part = s.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, im};
}

std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(abs(z.im())) + "*i";
  if (sgn(z.re()) == 0) return (sgn(z.im()) < 0 ? "-" : "") + im;
  return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + im;
}

GVector conj(const GVector& v) {
  GVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

bool is_zero(const GVector& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussRational& x) { return x.is_zero(); });
}

GVector operator+(const GVector& a, const GVector& b) {
  GVector out(a);
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

GVector operator-(const GVector& a, const GVector& b) {
  GVector out(a);
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return out;
}

GVector operator*(const GaussRational& s, const GVector& v) {
  GVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

// ---------------------------------------------------------------------------

GMatrix GMatrix::identity(std::size_t n) {
  GMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

GMatrix GMatrix::from_rows(const std::vector<std::vector<GaussRational>>& rows) {
  if (rows.empty()) return {};
  GMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw StructuralError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

GMatrix GMatrix::from_columns(std::size_t rows, const std::vector<GVector>& cols) {
  GMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw StructuralError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

GVector GMatrix::col(std::size_t c) const {
  GVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<GVector> GMatrix::columns() const {
  std::vector<GVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

GMatrix GMatrix::conj() const {
  GMatrix m(*this);
  for (auto& x : m.data_) x = x.conj();
  return m;
}

GMatrix GMatrix::transpose() const {
  GMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

GMatrix GMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  GMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void GMatrix::set_block(std::size_t r0, std::size_t c0, const GMatrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

GMatrix GMatrix::select_rows(std::span<const std::size_t> idx) const {
  GMatrix m(idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
  return m;
}

GMatrix GMatrix::select_cols(std::span<const std::size_t> idx) const {
  GMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

bool GMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussRational& x) { return x.is_zero(); });
}

bool GMatrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussRational& x) { return x.is_real(); });
}

GMatrix operator+(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  GMatrix m(a);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) += b(r, c);
  return m;
}

GMatrix operator-(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  GMatrix m(a);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) -= b(r, c);
  return m;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  GMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

GMatrix operator*(const GaussRational& s, const GMatrix& a) {
  GMatrix m(a);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) *= s;
  return m;
}

GVector operator*(const GMatrix& a, const GVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  GVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

GMatrix hstack(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  GMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

// ---------------------------------------------------------------------------

Echelon row_reduce(const GMatrix& input) {
  GMatrix m(input);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    GaussRational inv = GaussRational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

KernelRank mat_kernel_rank(const GMatrix& m) {
  Echelon e = row_reduce(m);
  KernelRank out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    GVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const GMatrix& m) { return row_reduce(m).pivots.size(); }

std::optional<GMatrix> inverse(const GMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Echelon e = row_reduce(hstack(m, GMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::optional<GVector> solve(const GMatrix& a, const GVector& b) {
  Echelon e = row_reduce(hstack(a, GMatrix::column(b)));
  GVector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

GMatrix column_basis(const GMatrix& m) {
  Echelon e = row_reduce(m);
  return m.select_cols(e.pivots);
}

bool span_contains(const GMatrix& u, const GMatrix& v) {
  if (v.cols() == 0) return true;
  if (u.cols() == 0) return v.is_zero();
  return rank(hstack(u, v)) == rank(u);
}

GMatrix intersect(const GMatrix& u, const GMatrix& w) {
  GMatrix ub = column_basis(u);
  GMatrix wb = column_basis(w);
  if (ub.cols() == 0 || wb.cols() == 0) return GMatrix(u.rows(), 0);
  // u a = w b  <=>  [u | -w] (a, b) = 0
  KernelRank kr = mat_kernel_rank(hstack(ub, GaussRational(-1) * wb));
  std::vector<GVector> cols;
  for (const auto& z : kr.kernel) {
    GVector a(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(ub.cols()));
    cols.push_back(ub * a);
  }
  return column_basis(GMatrix::from_columns(u.rows(), cols));
}

// ---------------------------------------------------------------------------

CongruenceDiagonalization congruence_diagonalize(const GMatrix& g) {
  if (!g.is_square()) throw NotHermitianError(0, 0, "Hermitian form must be square");
  const std::size_t n = g.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (!(g(r, c) == g(c, r).conj()))
        throw NotHermitianError(r, c,
                                "matrix is not Hermitian: entry (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") = " + to_string(g(r, c)) + " but (" +
                                    std::to_string(c) + "," + std::to_string(r) + ") = " +
                                    to_string(g(c, r)));

  GMatrix a(g);
  GMatrix p = GMatrix::identity(n);
  std::vector<bool> done(n, false);

  auto column_op = [&](std::size_t target, std::size_t source, const GaussRational& x) {
    // col_target += x col_source, row_target += conj(x) row_source
    for (std::size_t r = 0; r < n; ++r) {
      if (!a(r, source).is_zero()) a(r, target) += x * a(r, source);
      if (!p(r, source).is_zero()) p(r, target) += x * p(r, source);
    }
    GaussRational xc = x.conj();
    for (std::size_t c = 0; c < n; ++c)
      if (!a(source, c).is_zero()) a(target, c) += xc * a(source, c);
  };

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k] && !a(k, k).is_zero()) {
        piv = k;
        break;
      }
    if (piv == n) {
      std::size_t bi = n, bj = n;
      for (std::size_t r = 0; r < n && bi == n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!done[r] && !done[c] && r != c && !a(r, c).is_zero()) {
            bi = r;
            bj = c;
            break;
          }
      if (bi == n) break;  // the remaining block is zero
      column_op(bi, bj, a(bi, bj).conj());
      piv = bi;
    }
    const Rational d = a(piv, piv).re();
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || r == piv || a(piv, r).is_zero()) continue;
      column_op(r, piv, -(a(piv, r) / GaussRational(d)));
    }
    done[piv] = true;
  }

  // After elimination a is diagonal; untouched indices form a zero block.
  CongruenceDiagonalization out;
  out.diagonal.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.diagonal.push_back(a(k, k).re());
  out.transform = std::move(p);
  return out;
}

SignatureTriple hermitian_signature(const GMatrix& g) {
  CongruenceDiagonalization cd = congruence_diagonalize(g);
  SignatureTriple s;
  for (const auto& d : cd.diagonal) {
    int sign = sgn(d);
    if (sign > 0)
      ++s.n_plus;
    else if (sign < 0)
      ++s.n_minus;
    else
      ++s.n_zero;
  }
  return s;
}

}  // namespace hodgelef
