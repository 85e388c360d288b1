#include "symkuls/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace symkuls {

namespace {

// Accumulator for sparse sums of basis products.
class SparseAccum {
 public:
  explicit SparseAccum(size_t dim) : entries_(dim) {}

  void add(uint32_t idx, const Scalar& c) {
    if (entries_[idx]) {
      *entries_[idx] = *entries_[idx] + c;
    } else {
      entries_[idx] = c;
      touched_.push_back(idx);
    }
  }

  void add_scaled(const SparseVec& v, const Scalar& c) {
    for (const auto& e : v) add(e.idx, c * e.c);
  }

  SparseVec take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    for (uint32_t idx : touched_) {
      if (!entries_[idx]->is_zero()) out.push_back({idx, *entries_[idx]});
      entries_[idx].reset();
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<std::optional<Scalar>> entries_;
  std::vector<uint32_t> touched_;
};

Vec sparse_to_dense(const FieldPtr& field, const SparseVec& v, size_t dim) {
  Vec d = zero_vec(field, dim);
  for (const auto& e : v) d[e.idx] = e.c;
  return d;
}

}  // namespace

Algebra::Algebra(FieldPtr field, size_t dim, std::vector<SparseVec> sc, Vec unit,
                 std::vector<std::string> names)
    : field_(std::move(field)), dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)),
      names_(std::move(names)) {
  if (sc_.size() != dim_ * dim_) throw BadParameters("structure constant table has wrong size");
  if (unit_.size() != dim_) throw BadParameters("unit vector has wrong length");
}

Algebra Algebra::create_unchecked(FieldPtr field, size_t dim, std::vector<SparseVec> sc,
                                  Vec unit, std::vector<std::string> names) {
  return Algebra(std::move(field), dim, std::move(sc), std::move(unit), std::move(names));
}

Algebra Algebra::create(FieldPtr field, size_t dim, std::vector<SparseVec> sc, Vec unit,
                        std::vector<std::string> names) {
  Algebra a(std::move(field), dim, std::move(sc), std::move(unit), std::move(names));
  ValidationReport report = validate(a);
  if (!report.ok()) throw ValidationFailure(report.summary());
  return a;
}

Element Algebra::basis_element(size_t i) const {
  Element e = zero_element();
  e[i] = field_->one();
  return e;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("element length differs from dim");
  Element r = zero_element();
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& e : sc(i, j)) r[e.idx] = r[e.idx] + c * e.c;
    }
  }
  return r;
}

Matrix Algebra::left_mul(const Element& x) const {
  Matrix m(field_, dim_, dim_);
  for (size_t j = 0; j < dim_; ++j)
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& e : sc(i, j)) m.at(e.idx, j) = m.at(e.idx, j) + x[i] * e.c;
    }
  return m;
}

Matrix Algebra::right_mul(const Element& x) const {
  Matrix m(field_, dim_, dim_);
  for (size_t j = 0; j < dim_; ++j)
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& e : sc(j, i)) m.at(e.idx, j) = m.at(e.idx, j) + x[i] * e.c;
    }
  return m;
}

Element Algebra::power_pn(const Element& x, unsigned n) const {
  Element r = x;
  unsigned p = field_->p();
  for (unsigned step = 0; step < n; ++step) {
    // r <- r^p by binary powering; powers of one element commute.
    Element acc = unit_;
    Element base = r;
    unsigned e = p;
    while (e > 0) {
      if (e & 1) acc = multiply(acc, base);
      base = multiply(base, base);
      e >>= 1;
    }
    r = std::move(acc);
  }
  return r;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == 8) {
      os << "; ...";
      break;
    }
    if (v.kind == Violation::Associativity)
      os << "; assoc(" << v.i << "," << v.j << "," << v.k << ")";
    else
      os << "; unit(" << v.i << ")";
  }
  return os.str();
}

ValidationReport validate(const Algebra& a) {
  ValidationReport report;
  size_t d = a.dim();
  // Unit law.
  for (size_t i = 0; i < d; ++i) {
    Element e = a.basis_element(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e)
      report.violations.push_back({ValidationReport::Violation::UnitLaw, i, 0, 0});
  }
  // Associativity on basis triples, worked sparsely.
  SparseAccum acc(d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const SparseVec& ij = a.sc(i, j);
      for (size_t k = 0; k < d; ++k) {
        for (const auto& e : ij) acc.add_scaled(a.sc(e.idx, k), e.c);
        SparseVec left = acc.take();
        for (const auto& e : a.sc(j, k)) acc.add_scaled(a.sc(i, e.idx), e.c);
        SparseVec right = acc.take();
        bool equal = left.size() == right.size();
        for (size_t t = 0; equal && t < left.size(); ++t)
          equal = left[t].idx == right[t].idx && left[t].c == right[t].c;
        if (!equal)
          report.violations.push_back({ValidationReport::Violation::Associativity, i, j, k});
      }
    }
  return report;
}

Subspace centre(const Algebra& a) {
  const FieldPtr& field = a.field();
  size_t d = a.dim();
  Subspace z = Subspace::full(field, d);
  for (size_t i = 0; i < d && z.dim() > 0; ++i) {
    Element e = a.basis_element(i);
    Matrix commute = a.left_mul(e) - a.right_mul(e);
    z = intersect(z, kernel(commute));
  }
  return z;
}

Subspace commutator_space(const Algebra& a) {
  const FieldPtr& field = a.field();
  size_t d = a.dim();
  std::vector<Vec> rows;
  SparseAccum acc(d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      for (const auto& e : a.sc(i, j)) acc.add(e.idx, e.c);
      for (const auto& e : a.sc(j, i)) acc.add(e.idx, -e.c);
      SparseVec comm = acc.take();
      if (!comm.empty()) rows.push_back(sparse_to_dense(field, comm, d));
    }
  return Subspace::row_span(field, rows, d);
}

QuotientModel quotient_mod(const Algebra& a, const Subspace& s) {
  size_t d = a.dim();
  if (s.ambient_dim() != d) throw AmbientMismatch("subspace ambient differs from dim");
  const FieldPtr& field = a.field();
  std::vector<bool> is_pivot(d, false);
  for (size_t p : s.pivot_columns()) is_pivot[p] = true;
  std::vector<size_t> nonpiv;
  for (size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) nonpiv.push_back(c);
  size_t q = nonpiv.size();
  Matrix projection(field, q, d);
  for (size_t j = 0; j < d; ++j) {
    Vec red = s.reduce(a.basis_element(j));
    for (size_t i = 0; i < q; ++i) projection.at(i, j) = red[nonpiv[i]];
  }
  Matrix section(field, d, q);
  for (size_t i = 0; i < q; ++i) section.at(nonpiv[i], i) = field->one();
  return {std::move(projection), std::move(section)};
}

Scalar SymForm::pair(const Element& x, const Element& y) const {
  return dot(x, gram.apply(y));
}

Scalar SymForm::value(const Element& x) const { return dot(lambda, x); }

SymForm validate_form(const Algebra& a, const Vec& lambda) {
  size_t d = a.dim();
  if (lambda.size() != d) throw DimensionMismatch("lambda length differs from dim");
  const FieldPtr& field = a.field();
  Matrix gram(field, d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Scalar v = field->zero();
      for (const auto& e : a.sc(i, j)) v = v + e.c * lambda[e.idx];
      gram.at(i, j) = v;
    }
  // Symmetry of the gram matrix is exactly lambda vanishing on KA.
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j)
      if (gram.at(i, j) != gram.at(j, i))
        throw NotSymmetricForm("lambda does not vanish on the commutator space");
  Matrix gram_inv = [&] {
    try {
      return inverse(gram);
    } catch (const DegenerateForm&) {
      throw DegenerateForm("symmetrising form is degenerate");
    }
  }();
  return SymForm{lambda, std::move(gram), std::move(gram_inv)};
}

FindFormResult find_form(const Algebra& a, size_t trials) {
  FindFormResult result;
  const FieldPtr& field = a.field();
  size_t d = a.dim();
  if (d == 0) {
    result.form = validate_form(a, {});
    result.exhausted = true;
    return result;
  }
  // Functionals vanishing on KA = vectors orthogonal to every commutator.
  Subspace sym_space = kernel(commutator_space(a).basis());
  size_t s = sym_space.dim();
  auto try_lambda = [&](const Vec& coeffs) -> bool {
    Vec lambda = zero_vec(field, d);
    for (size_t i = 0; i < s; ++i)
      if (!coeffs[i].is_zero()) lambda = add(lambda, scale(coeffs[i], sym_space.basis().row(i)));
    ++result.tried;
    try {
      result.form = validate_form(a, lambda);
      return true;
    } catch (const DegenerateForm&) {
      return false;
    }
  };
  if (s == 0) {
    result.exhausted = true;
    return result;
  }
  // Tiny coefficient spaces are swept exhaustively; a miss is a certificate.
  uint64_t total = 1;
  bool small = true;
  for (size_t i = 0; i < s && small; ++i) {
    total *= field->order();
    if (total > 4096) small = false;
  }
  if (small) {
    for (uint64_t idx = 1; idx < total; ++idx) {
      uint64_t v = idx;
      Vec coeffs;
      coeffs.reserve(s);
      for (size_t i = 0; i < s; ++i) {
        coeffs.push_back(field->from_index(static_cast<uint32_t>(v % field->order())));
        v /= field->order();
      }
      if (try_lambda(coeffs)) return result;
    }
    result.exhausted = true;
    return result;
  }
  // Deterministic sweep: single basis functionals, pairs, then the full sum.
  for (size_t i = 0; i < s; ++i) {
    Vec coeffs = zero_vec(field, s);
    coeffs[i] = field->one();
    if (try_lambda(coeffs)) return result;
  }
  for (size_t i = 0; i < s; ++i)
    for (size_t j = i + 1; j < s; ++j) {
      Vec coeffs = zero_vec(field, s);
      coeffs[i] = field->one();
      coeffs[j] = field->one();
      if (try_lambda(coeffs)) return result;
    }
  {
    Vec coeffs(s, field->one());
    if (try_lambda(coeffs)) return result;
  }
  std::mt19937_64 rng(0x5ca1ab1e);
  std::uniform_int_distribution<uint32_t> dist(0, field->order() - 1);
  while (result.tried < trials) {
    Vec coeffs;
    coeffs.reserve(s);
    for (size_t i = 0; i < s; ++i) coeffs.push_back(field->from_index(dist(rng)));
    if (try_lambda(coeffs)) return result;
  }
  return result;
}

CondenseResult condense(const Algebra& a, const SymForm& f, const Element& e) {
  if (e.size() != a.dim()) throw DimensionMismatch("idempotent length differs from dim");
  if (a.multiply(e, e) != e) throw NotIdempotent("element is not idempotent");
  const FieldPtr& field = a.field();
  Matrix centre_map = a.left_mul(e) * a.right_mul(e);  // x -> e x e
  Subspace image = image_rowspace(centre_map.transpose());
  size_t m = image.dim();
  std::vector<Vec> basis_rows;
  for (size_t i = 0; i < m; ++i) basis_rows.push_back(image.basis().row(i));
  std::vector<SparseVec> sc(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Element prod = a.multiply(basis_rows[i], basis_rows[j]);
      auto coords = image.coordinates(prod);
      if (!coords)
        throw ValidationFailure("condensed product left the condensed subspace");
      SparseVec entry;
      for (size_t l = 0; l < m; ++l)
        if (!(*coords)[l].is_zero()) entry.push_back({static_cast<uint32_t>(l), (*coords)[l]});
      sc[i * m + j] = std::move(entry);
    }
  auto unit_coords = image.coordinates(e);
  if (!unit_coords) throw ValidationFailure("idempotent missing from its own condensation");
  Algebra condensed = Algebra::create_unchecked(field, m, std::move(sc), *unit_coords);
  Vec lambda_r;
  lambda_r.reserve(m);
  for (size_t i = 0; i < m; ++i) lambda_r.push_back(f.value(basis_rows[i]));
  SymForm form_r = validate_form(condensed, lambda_r);
  return {std::move(condensed), std::move(form_r), std::move(centre_map), std::move(image)};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!a.field()->same(*b.field())) throw FieldMismatch("direct sum needs one field");
  size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<SparseVec> sc(d * d);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j) sc[i * d + j] = a.sc(i, j);
  for (size_t i = 0; i < db; ++i)
    for (size_t j = 0; j < db; ++j) {
      SparseVec shifted = b.sc(i, j);
      for (auto& e : shifted) e.idx += static_cast<uint32_t>(da);
      sc[(da + i) * d + (da + j)] = std::move(shifted);
    }
  Vec unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<std::string> names;
  if (!a.names().empty() || !b.names().empty()) {
    names.resize(d);
    for (size_t i = 0; i < da; ++i) names[i] = a.names().empty() ? "" : a.names()[i];
    for (size_t i = 0; i < db; ++i) names[da + i] = b.names().empty() ? "" : b.names()[i];
  }
  return Algebra::create_unchecked(a.field(), d, std::move(sc), std::move(unit), std::move(names));
}

Vec direct_sum_lambda(const Vec& la, const Vec& lb) {
  Vec l = la;
  l.insert(l.end(), lb.begin(), lb.end());
  return l;
}

Algebra opposite(const Algebra& a) {
  size_t d = a.dim();
  std::vector<SparseVec> sc(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) sc[i * d + j] = a.sc(j, i);
  return Algebra::create_unchecked(a.field(), d, std::move(sc), a.unit(), a.names());
}

}  // namespace symkuls
