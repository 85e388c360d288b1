#include "symkuls/linalg.hpp"

#include <algorithm>

namespace symkuls {

Vec zero_vec(const FieldPtr& field, size_t n) { return Vec(n, field->zero()); }

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector lengths differ");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector lengths differ");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x = c * x;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector lengths differ");
  if (a.empty()) throw AmbientMismatch("dot of empty vectors has no field");
  Scalar s = a[0].field().zero();
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(const FieldPtr& field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, const std::vector<Vec>& rows, size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AmbientMismatch("row length differs from column count");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::col(size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      const Scalar& a = at(i, l);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(l, j);
    }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  Vec r = zero_vec(field_, rows_);
  for (size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (size_t rI = 0; rI < rows_; ++rI) r[rI] = r[rI] + at(rI, c) * x[c];
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch("column counts differ");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t c = 0; c < cols_; ++c) r.at(i, c) = at(i, c);
  for (size_t i = 0; i < o.rows_; ++i)
    for (size_t c = 0; c < cols_; ++c) r.at(rows_ + i, c) = o.at(i, c);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t pr = r;
    while (pr < a.rows() && a.at(pr, c).is_zero()) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
    Scalar piv_inv = a.at(r, c).inv();
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) = piv_inv * a.at(r, j);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

Subspace::Subspace(size_t ambient, Matrix basis, std::vector<size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(const FieldPtr& field, size_t ambient) {
  return Subspace(ambient, Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(const FieldPtr& field, size_t ambient) {
  std::vector<size_t> piv(ambient);
  for (size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Matrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::row_span(const Matrix& m) {
  RrefResult r = rref(m);
  size_t rank = r.pivots.size();
  Matrix basis(m.field(), rank, m.cols());
  for (size_t i = 0; i < rank; ++i)
    for (size_t c = 0; c < m.cols(); ++c) basis.at(i, c) = r.mat.at(i, c);
  return Subspace(m.cols(), std::move(basis), std::move(r.pivots));
}

Subspace Subspace::row_span(const FieldPtr& field, const std::vector<Vec>& rows, size_t ambient) {
  return row_span(Matrix::from_rows(field, rows, ambient));
}

Vec Subspace::reduce(const Vec& x) const {
  if (x.size() != ambient_) throw AmbientMismatch("vector outside ambient space");
  Vec v(x);
  for (size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (size_t j = 0; j < ambient_; ++j) v[j] = v[j] - f * basis_.at(r, j);
  }
  return v;
}

bool Subspace::contains(const Vec& x) const { return is_zero(reduce(x)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("ambient dimensions differ");
  for (size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& x) const {
  if (!contains(x)) return std::nullopt;
  Vec coords;
  coords.reserve(dim());
  for (size_t r = 0; r < dim(); ++r) coords.push_back(x[pivots_[r]]);
  return coords;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const FieldPtr& field = m.field();
  size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(field, n);
    x[f] = field->one();
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.mat.at(i, f);
    rows.push_back(std::move(x));
  }
  return Subspace::row_span(field, rows, n);
}

Subspace image_rowspace(const Matrix& m) { return Subspace::row_span(m); }

Matrix constraint_matrix(const Subspace& u) {
  return kernel(u.basis()).basis();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
  return Subspace::row_span(u.basis().vstack(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
  return kernel(constraint_matrix(u).vstack(constraint_matrix(v)));
}

Subspace preimage(const Matrix& m, const Subspace& v) {
  if (m.rows() != v.ambient_dim())
    throw DimensionMismatch("map does not land in the target ambient space");
  return kernel(constraint_matrix(v) * m);
}

Subspace orth_complement(const Subspace& v, const Matrix& gram) {
  if (gram.rows() != v.ambient_dim() || gram.cols() != v.ambient_dim())
    throw DimensionMismatch("gram matrix size differs from ambient dimension");
  if (rref(gram).pivots.size() != gram.rows())
    throw DegenerateForm("gram matrix is singular");
  return kernel(v.basis() * gram);
}

Subspace semilinear_kernel(const FieldPtr& field, const std::vector<Vec>& vectors,
                           unsigned twist, size_t ambient_of_vectors) {
  size_t m = vectors.size();
  Matrix cols(field, ambient_of_vectors, m);
  for (size_t j = 0; j < m; ++j) {
    if (vectors[j].size() != ambient_of_vectors)
      throw AmbientMismatch("input vectors live in different ambient spaces");
    for (size_t i = 0; i < ambient_of_vectors; ++i) cols.at(i, j) = vectors[j][i];
  }
  // Substitute nu_i = l_i^(p^twist): the system becomes linear in nu, and the
  // solution set in l is the entrywise inverse-Frobenius image, again a
  // subspace since the twist is a field automorphism.
  Subspace nu_kernel = kernel(cols);
  std::vector<Vec> rows;
  for (size_t r = 0; r < nu_kernel.dim(); ++r) {
    Vec row = nu_kernel.basis().row(r);
    for (auto& x : row) x = x.inv_frobenius_n(twist);
    rows.push_back(std::move(row));
  }
  return Subspace::row_span(field, rows, m);
}

Vec solve(const Matrix& gram, const Vec& w) {
  if (gram.rows() != gram.cols()) throw DimensionMismatch("gram matrix must be square");
  if (w.size() != gram.rows()) throw DimensionMismatch("right-hand side length mismatch");
  size_t n = gram.rows();
  const FieldPtr& field = gram.field();
  Matrix aug(field, n, n + 1);
  Matrix gt = gram.transpose();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = gt.at(i, j);
    aug.at(i, n) = w[i];
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() != n || (n > 0 && r.pivots.back() == n))
    throw DegenerateForm("gram matrix is singular");
  Vec x;
  x.reserve(n);
  for (size_t i = 0; i < n; ++i) x.push_back(r.mat.at(i, n));
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("only square matrices invert");
  size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field()->one();
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() != n || (n > 0 && r.pivots.back() >= n))
    throw DegenerateForm("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

}  // namespace symkuls
