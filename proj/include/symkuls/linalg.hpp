#ifndef SYMKULS_LINALG_HPP
#define SYMKULS_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "symkuls/gfield.hpp"

namespace symkuls {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldPtr& field, size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

// Dense matrix over one FieldSpec, row-major. Maps use the column-vector
// convention (apply(x) = m*x); subspaces are row spaces.
class Matrix {
 public:
  Matrix(FieldPtr field, size_t rows, size_t cols);

  static Matrix identity(const FieldPtr& field, size_t n);
  static Matrix from_rows(const FieldPtr& field, const std::vector<Vec>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  Scalar& at(size_t r, size_t c) { return e_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec col(size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // m * x, column convention

  // Stacks o below this matrix; column counts must agree.
  Matrix vstack(const Matrix& o) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix mat;                   // reduced row-echelon form, zero rows kept
  std::vector<size_t> pivots;   // pivot column per nonzero row
};

RrefResult rref(const Matrix& m);

// Canonical subspace of F^n: basis in reduced row-echelon form with zero rows
// removed, so equality of subspaces is entrywise equality of bases. The zero
// subspace is an empty basis with an explicit ambient dimension.
class Subspace {
 public:
  static Subspace zero(const FieldPtr& field, size_t ambient);
  static Subspace full(const FieldPtr& field, size_t ambient);
  static Subspace row_span(const Matrix& m);
  static Subspace row_span(const FieldPtr& field, const std::vector<Vec>& rows, size_t ambient);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivot_columns() const { return pivots_; }
  const FieldPtr& field() const { return basis_.field(); }

  bool contains(const Vec& x) const;
  bool contains(const Subspace& other) const;
  // Unique coordinates of x in the canonical basis; nullopt if x is outside.
  std::optional<Vec> coordinates(const Vec& x) const;
  // x reduced modulo the subspace (pivot coordinates eliminated).
  Vec reduce(const Vec& x) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(size_t ambient, Matrix basis, std::vector<size_t> pivots);

  size_t ambient_;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

// {x : m*x = 0}, column convention.
Subspace kernel(const Matrix& m);

// Row space of m.
Subspace image_rowspace(const Matrix& m);

// Rows annihilating u under the standard dot product: {y : B y = 0 for the
// basis B of u}. kernel of (this matrix) recovers u.
Matrix constraint_matrix(const Subspace& u);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// {x : m*x in v}.
Subspace preimage(const Matrix& m, const Subspace& v);

// {x : b^T gram x = 0 for every basis row b of v}; gram must be invertible.
Subspace orth_complement(const Subspace& v, const Matrix& gram);

// Solutions (l_1..l_m) of sum_i l_i^(p^n) v_i = 0; ambient of the result is
// the number of input vectors. A subspace because the twist is by a field
// automorphism.
Subspace semilinear_kernel(const FieldPtr& field, const std::vector<Vec>& vectors,
                           unsigned twist, size_t ambient_of_vectors);

// Unique x with gram^T x = w; throws DegenerateForm if gram is singular.
Vec solve(const Matrix& gram, const Vec& w);

// Inverse of a square matrix; throws DegenerateForm if singular.
Matrix inverse(const Matrix& m);

}  // namespace symkuls

#endif
