#ifndef SYMKULS_ALGEBRA_HPP
#define SYMKULS_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symkuls/linalg.hpp"

namespace symkuls {

// Element of an algebra = coordinate vector in the structure-constant basis.
using Element = Vec;

struct SparseEntry {
  uint32_t idx;
  Scalar c;
};
using SparseVec = std::vector<SparseEntry>;  // sorted by idx, no zero entries

// Finite-dimensional associative algebra presented by structure constants
// sc(i,j) = e_i * e_j. Immutable after construction. The zero algebra
// (dim 0) is permitted and propagates through every operation.
class Algebra {
 public:
  // Validates associativity on all basis triples and the unit law; throws
  // ValidationFailure when the presentation is not an algebra.
  static Algebra create(FieldPtr field, size_t dim, std::vector<SparseVec> sc, Vec unit,
                        std::vector<std::string> names = {});
  // Skips eager validation (for input paths that report violations instead).
  static Algebra create_unchecked(FieldPtr field, size_t dim, std::vector<SparseVec> sc,
                                  Vec unit, std::vector<std::string> names = {});

  const FieldPtr& field() const { return field_; }
  size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& names() const { return names_; }

  // e_i * e_j as a sparse vector.
  const SparseVec& sc(size_t i, size_t j) const { return sc_[i * dim_ + j]; }

  Element basis_element(size_t i) const;
  Element zero_element() const { return zero_vec(field_, dim_); }

  Element multiply(const Element& x, const Element& y) const;
  Matrix left_mul(const Element& x) const;   // column j = x * e_j
  Matrix right_mul(const Element& x) const;  // column j = e_j * x
  Element power_pn(const Element& x, unsigned n) const;  // x^(p^n)

 private:
  Algebra(FieldPtr field, size_t dim, std::vector<SparseVec> sc, Vec unit,
          std::vector<std::string> names);

  FieldPtr field_;
  size_t dim_;
  std::vector<SparseVec> sc_;  // dim*dim entries, row-major by (i,j)
  Vec unit_;
  std::vector<std::string> names_;
};

struct ValidationReport {
  struct Violation {
    enum Kind { Associativity, UnitLaw } kind;
    size_t i, j, k;  // k unused for unit-law entries
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks associativity on all dim^3 basis triples and both unit laws.
ValidationReport validate(const Algebra& a);

// Simultaneous kernel of all commutation maps left_mul(e_i) - right_mul(e_i).
Subspace centre(const Algebra& a);

// Row space of all e_i e_j - e_j e_i, i < j.
Subspace commutator_space(const Algebra& a);

// Projection/section pair modelling the quotient of the underlying space by s.
// The complement is the span of the non-pivot standard coordinates of s, so
// the model is reproducible bit-for-bit. projection*section = identity and
// kernel(projection) = s.
struct QuotientModel {
  Matrix projection;  // (dim - dim s) x dim
  Matrix section;     // dim x (dim - dim s)
};
QuotientModel quotient_mod(const Algebra& a, const Subspace& s);

// Symmetrising form: the linear functional lambda, its Gram matrix
// gram[i][j] = lambda(e_i e_j), and the dual basis (columns of gram^{-1}).
struct SymForm {
  Vec lambda;
  Matrix gram;
  Matrix gram_inv;

  Scalar pair(const Element& x, const Element& y) const;  // lambda(x*y)
  Scalar value(const Element& x) const;                   // lambda(x)
  Element dual_basis_vector(size_t j) const { return gram_inv.col(j); }
};

// Builds and checks a SymForm from lambda. Throws NotSymmetricForm when the
// gram matrix is asymmetric (equivalently lambda does not vanish on the
// commutator space) and DegenerateForm when it is singular.
SymForm validate_form(const Algebra& a, const Vec& lambda);

struct FindFormResult {
  std::optional<SymForm> form;
  // True when every functional vanishing on KA was tried, so a miss
  // certifies that no symmetrising form exists.
  bool exhausted = false;
  size_t tried = 0;
};

// Searches the space of functionals vanishing on KA: a deterministic sweep
// over small coefficient patterns (exhaustive when the space is tiny), then
// seeded random trials.
FindFormResult find_form(const Algebra& a, size_t trials = 200);

struct CondenseResult {
  Algebra algebra;       // eAe in its canonical basis
  SymForm form;          // restriction of the form to eAe
  Matrix centre_map;     // z -> e z e on A-coordinates
  Subspace image;        // eAe as a subspace of A
};

// Passage to eAe for an idempotent e. Throws NotIdempotent if e*e != e, and
// DegenerateForm if the restricted gram degenerates (an internal-consistency
// failure for symmetric A).
CondenseResult condense(const Algebra& a, const SymForm& f, const Element& e);

Algebra direct_sum(const Algebra& a, const Algebra& b);
Vec direct_sum_lambda(const Vec& la, const Vec& lb);
Algebra opposite(const Algebra& a);

}  // namespace symkuls

#endif
