#include "symkuls/invariants.hpp"

#include <algorithm>

namespace symkuls {

namespace {

// Shared scaffolding for one T_n computation: the commutator space and the
// quotient model A/KA.
struct TContext {
  Subspace ka;
  QuotientModel q;
};

TContext t_context(const Algebra& a) {
  Subspace ka = commutator_space(a);
  QuotientModel q = quotient_mod(a, ka);
  return {std::move(ka), std::move(q)};
}

Subspace t_space_with(const Algebra& a, const TContext& ctx, unsigned n) {
  const FieldPtr& field = a.field();
  size_t qdim = ctx.q.section.cols();
  // Class of s_i^(p^n) in A/KA for each complement coordinate s_i. On the
  // quotient the p^n-power map is additive and Frobenius-semilinear, so
  // x = sum l_i s_i lands in KA exactly when sum l_i^(p^n) v_i = 0.
  std::vector<Vec> images;
  images.reserve(qdim);
  for (size_t i = 0; i < qdim; ++i) {
    Element s = ctx.q.section.col(i);
    images.push_back(ctx.q.projection.apply(a.power_pn(s, n)));
  }
  Subspace coeffs = semilinear_kernel(field, images, n, qdim);
  // T_n is the preimage of the coefficient solutions under the projection;
  // this adds KA back in.
  return preimage(ctx.q.projection, coeffs);
}

}  // namespace

Subspace t_space(const Algebra& a, unsigned n) {
  return t_space_with(a, t_context(a), n);
}

Subspace t_perp(const Algebra& a, const SymForm& f, unsigned n) {
  return orth_complement(t_space(a, n), f.gram);
}

KulsChain compute_chain(const Algebra& a, const SymForm& f) {
  TContext ctx = t_context(a);
  KulsChain chain;
  size_t cap = std::max<size_t>(a.dim(), 1) + 1;
  Subspace current = t_space_with(a, ctx, 1);
  for (size_t n = 1; n <= cap; ++n) {
    Subspace next = t_space_with(a, ctx, static_cast<unsigned>(n + 1));
    bool stable = (next == current);
    chain.t_spaces.push_back(current);
    chain.t_perps.push_back(orth_complement(current, f.gram));
    if (stable) {
      chain.n_stab = n;
      return chain;
    }
    current = std::move(next);
  }
  throw ValidationFailure("T-chain failed to stabilize within the dimension cap");
}

Element zeta(const Algebra& a, const SymForm& f, unsigned n, const Element& z) {
  if (!centre(a).contains(z)) throw NotCentral("zeta argument is not central");
  size_t d = a.dim();
  Vec w;
  w.reserve(d);
  for (size_t j = 0; j < d; ++j) {
    Element pj = a.power_pn(a.basis_element(j), n);
    w.push_back(f.pair(z, pj).inv_frobenius_n(n));
  }
  return solve(f.gram, w);
}

Subspace zeta_image(const Algebra& a, const SymForm& f, unsigned n) {
  Subspace za = centre(a);
  size_t d = a.dim();
  std::vector<Vec> rows;
  for (size_t r = 0; r < za.dim(); ++r) {
    Element z = za.basis().row(r);
    Vec w;
    w.reserve(d);
    for (size_t j = 0; j < d; ++j) {
      Element pj = a.power_pn(a.basis_element(j), n);
      w.push_back(f.pair(z, pj).inv_frobenius_n(n));
    }
    rows.push_back(solve(f.gram, w));
  }
  return Subspace::row_span(a.field(), rows, d);
}

Subspace higman_ideal(const Algebra& a, const SymForm& f) {
  size_t d = a.dim();
  std::vector<Vec> rows;
  for (size_t j = 0; j < d; ++j) {
    Element tau = a.zero_element();
    Element ej = a.basis_element(j);
    for (size_t i = 0; i < d; ++i) {
      Element left = a.multiply(a.basis_element(i), ej);
      tau = add(tau, a.multiply(left, f.dual_basis_vector(i)));
    }
    rows.push_back(std::move(tau));
  }
  return Subspace::row_span(a.field(), rows, d);
}

Subspace reynolds(const KulsChain& chain) { return chain.t_perps.back(); }

Subspace ideal_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < u.dim(); ++i)
    for (size_t j = 0; j < v.dim(); ++j)
      rows.push_back(a.multiply(u.basis().row(i), v.basis().row(j)));
  return Subspace::row_span(a.field(), rows, a.dim());
}

namespace {

// Commutative algebra structure on a subspace of A closed under multiply,
// in the coordinates of its canonical basis.
struct SubAlgebra {
  const Algebra& parent;
  Subspace space;

  size_t dim() const { return space.dim(); }

  Element lift(const Vec& coords) const {
    Element x = parent.zero_element();
    for (size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) x = add(x, scale(coords[i], space.basis().row(i)));
    return x;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Element prod = parent.multiply(lift(x), lift(y));
    auto coords = space.coordinates(prod);
    if (!coords) throw ValidationFailure("subalgebra is not closed under multiplication");
    return *coords;
  }
};

// Minimal polynomial (monic, constant term first) of mult-by-b on the ideal
// generated by the idempotent E inside the fixed subalgebra: iterate
// E, bE, b^2 E, ... until the first linear dependence.
std::vector<Scalar> minimal_polynomial(const SubAlgebra& za, const Vec& b, const Vec& e_idem) {
  const FieldPtr& field = za.space.field();
  std::vector<Vec> powers;  // b^i E in ZA-coordinates, linearly independent
  Vec cur = e_idem;
  while (true) {
    size_t np = powers.size();
    Matrix aug(field, za.dim(), np + 1);
    for (size_t j = 0; j < np; ++j)
      for (size_t i = 0; i < za.dim(); ++i) aug.at(i, j) = powers[j][i];
    for (size_t i = 0; i < za.dim(); ++i) aug.at(i, np) = cur[i];
    RrefResult sol = rref(aug);
    bool dependent = sol.pivots.empty() || sol.pivots.back() != np;
    if (dependent) {
      // cur = sum c_i b^i E, so the minimal polynomial is t^np - sum c_i t^i.
      std::vector<Scalar> coeffs(np + 1, field->zero());
      coeffs[np] = field->one();
      for (size_t row = 0; row < sol.pivots.size(); ++row)
        coeffs[sol.pivots[row]] = -sol.mat.at(row, np);
      return coeffs;
    }
    powers.push_back(cur);
    cur = za.mul(b, cur);
  }
}

std::vector<Scalar> polynomial_roots(const FieldPtr& field, const std::vector<Scalar>& poly) {
  std::vector<Scalar> roots;
  for (uint32_t idx = 0; idx < field->order(); ++idx) {
    Scalar c = field->from_index(idx);
    Scalar v = field->zero();
    Scalar cp = field->one();
    for (const Scalar& coeff : poly) {
      v = v + coeff * cp;
      cp = cp * c;
    }
    if (v.is_zero()) roots.push_back(c);
  }
  return roots;
}

}  // namespace

BlockDecomposition blocks(const Algebra& a, const SymForm& f) {
  BlockDecomposition dec;
  if (a.dim() == 0) return dec;
  const FieldPtr& field = a.field();
  SubAlgebra za{a, centre(a)};
  size_t r = za.dim();
  // Fixed subalgebra {z in ZA : z^q = z}: kernel of the GF(q)-linear map
  // z -> z^q - z, q = |field|.
  Matrix frob_minus_id(field, r, r);
  for (size_t i = 0; i < r; ++i) {
    Element zi = za.space.basis().row(i);
    Element zq = a.power_pn(zi, field->k());
    auto coords = za.space.coordinates(zq);
    if (!coords) throw ValidationFailure("centre is not closed under the q-power map");
    for (size_t l = 0; l < r; ++l) frob_minus_id.at(l, i) = (*coords)[l];
    frob_minus_id.at(i, i) = frob_minus_id.at(i, i) - field->one();
  }
  Subspace fixed = kernel(frob_minus_id);
  size_t target = fixed.dim();

  auto unit_coords = za.space.coordinates(a.unit());
  if (!unit_coords) throw ValidationFailure("unit is not central");
  std::vector<Vec> idems{*unit_coords};

  // Berlekamp-style refinement: split every current idempotent along the
  // eigenvalues of multiplication by each fixed-subalgebra basis element,
  // with the eigenprojections built by Lagrange interpolation.
  for (size_t bi = 0; bi < fixed.dim() && idems.size() < target; ++bi) {
    Vec b = fixed.basis().row(bi);
    std::vector<Vec> next;
    for (const Vec& e_idem : idems) {
      Vec be = za.mul(b, e_idem);
      std::vector<Scalar> minpoly = minimal_polynomial(za, b, e_idem);
      std::vector<Scalar> roots = polynomial_roots(field, minpoly);
      if (roots.size() <= 1) {
        next.push_back(e_idem);
        continue;
      }
      for (const Scalar& c : roots) {
        Vec proj = e_idem;
        for (const Scalar& c2 : roots) {
          if (c2 == c) continue;
          // proj *= (bE - c2 E) / (c - c2)
          Vec factor = sub(be, scale(c2, e_idem));
          proj = scale((c - c2).inv(), za.mul(proj, factor));
        }
        next.push_back(std::move(proj));
      }
    }
    idems = std::move(next);
  }
  if (idems.size() != target)
    throw ValidationFailure("block splitting did not reach the fixed-subalgebra dimension");

  // Lift to A-coordinates and order deterministically.
  std::vector<Element> lifted;
  for (const Vec& e_idem : idems) lifted.push_back(za.lift(e_idem));
  std::sort(lifted.begin(), lifted.end(), [](const Element& x, const Element& y) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].index() != y[i].index()) return x[i].index() < y[i].index();
    }
    return false;
  });
  dec.idempotents = std::move(lifted);

  // A block is simple exactly when its stabilized T-space collapses to its
  // commutator space.
  for (const Element& e : dec.idempotents) {
    CondenseResult block = condense(a, f, e);
    KulsChain chain = compute_chain(block.algebra, block.form);
    Subspace kb = commutator_space(block.algebra);
    dec.simple_flags.push_back(chain.t_spaces[chain.n_stab - 1] == kb);
  }
  return dec;
}

Subspace z0(const Algebra& a, const SymForm& f, const BlockDecomposition& b) {
  (void)f;
  Subspace za = centre(a);
  std::vector<Vec> rows;
  for (size_t i = 0; i < b.idempotents.size(); ++i) {
    if (!b.simple_flags[i]) continue;
    for (size_t r = 0; r < za.dim(); ++r)
      rows.push_back(a.multiply(b.idempotents[i], za.basis().row(r)));
  }
  return Subspace::row_span(a.field(), rows, a.dim());
}

bool derived_invariants_equal(const Fingerprint& a, const Fingerprint& b) {
  return a.p == b.p && a.k == b.k && a.dim_za == b.dim_za && a.n_stab == b.n_stab &&
         a.perp_dims == b.perp_dims && a.dim_ha == b.dim_ha &&
         a.dim_reynolds == b.dim_reynolds && a.dim_z0 == b.dim_z0 &&
         a.product_dims == b.product_dims && a.t1_power_dims == b.t1_power_dims;
}

Fingerprint fingerprint(const Algebra& a, const SymForm& f) {
  Fingerprint fp;
  fp.p = a.field()->p();
  fp.k = a.field()->k();
  fp.dim_a = a.dim();
  fp.dim_za = centre(a).dim();
  fp.dim_ka = commutator_space(a).dim();
  KulsChain chain = compute_chain(a, f);
  fp.n_stab = chain.n_stab;
  for (const Subspace& s : chain.t_perps) fp.perp_dims.push_back(s.dim());
  fp.dim_ha = higman_ideal(a, f).dim();
  fp.dim_reynolds = reynolds(chain).dim();
  fp.dim_z0 = z0(a, f, blocks(a, f)).dim();
  size_t nprod = std::min<size_t>(chain.n_stab, 3);
  fp.product_dims.assign(nprod, std::vector<size_t>(nprod, 0));
  for (size_t i = 1; i <= nprod; ++i)
    for (size_t j = 1; j <= nprod; ++j)
      fp.product_dims[i - 1][j - 1] =
          ideal_product(a, chain.t_perp_at(i), chain.t_perp_at(j)).dim();
  const Subspace& t1p = chain.t_perp_at(1);
  Subspace square = ideal_product(a, t1p, t1p);
  Subspace cube = ideal_product(a, t1p, square);
  fp.t1_power_dims = {t1p.dim(), square.dim(), cube.dim()};
  return fp;
}

uint64_t enumeration_size(const Algebra& a, uint64_t budget) {
  uint64_t total = 1;
  for (size_t i = 0; i < a.dim(); ++i) {
    total *= a.field()->order();
    if (total > budget) return 0;
  }
  return total;
}

namespace {

// Odometer over all |field|^dim coordinate vectors; callers iterate by count.
class ElementEnumerator {
 public:
  explicit ElementEnumerator(const Algebra& a)
      : a_(a), digits_(a.dim(), 0), current_(a.zero_element()) {}

  const Element& current() const { return current_; }

  void advance() {
    size_t pos = 0;
    while (pos < digits_.size()) {
      if (++digits_[pos] < a_.field()->order()) {
        current_[pos] = a_.field()->from_index(digits_[pos]);
        return;
      }
      digits_[pos] = 0;
      current_[pos] = a_.field()->zero();
      ++pos;
    }
  }

 private:
  const Algebra& a_;
  std::vector<uint32_t> digits_;
  Element current_;
};

}  // namespace

std::vector<Element> brute_t_space(const Algebra& a, unsigned n, uint64_t budget) {
  uint64_t total = enumeration_size(a, budget);
  if (total == 0)
    throw TooLarge("enumeration of |field|^dim elements exceeds the budget");
  Subspace ka = commutator_space(a);
  std::vector<Element> hits;
  ElementEnumerator it(a);
  for (uint64_t c = 0; c < total; ++c) {
    if (ka.contains(a.power_pn(it.current(), n))) hits.push_back(it.current());
    it.advance();
  }
  return hits;
}

bool brute_zeta_check(const Algebra& a, const SymForm& f, unsigned n, uint64_t budget) {
  const FieldPtr& field = a.field();
  Subspace za = centre(a);
  // (zeta(z), x)^(p^n) is the n-fold Frobenius of the pairing value.
  auto equation_holds = [&](const Element& z, const Element& x) {
    Element zz = zeta(a, f, n, z);
    Scalar lhs = f.pair(zz, x).frobenius_n(n);
    Scalar rhs = f.pair(z, a.power_pn(x, n));
    return lhs == rhs;
  };

  for (size_t r = 0; r < za.dim(); ++r)
    for (size_t j = 0; j < a.dim(); ++j)
      if (!equation_holds(za.basis().row(r), a.basis_element(j))) return false;

  // Full enumeration when |field|^(dim ZA + dim A) fits the budget.
  uint64_t pairs = 1;
  bool feasible = true;
  for (size_t i = 0; i < za.dim() + a.dim() && feasible; ++i) {
    pairs *= field->order();
    if (pairs > budget) feasible = false;
  }
  if (!feasible) return true;

  uint64_t zcount = 1;
  for (size_t i = 0; i < za.dim(); ++i) zcount *= field->order();
  uint64_t xcount = 1;
  for (size_t i = 0; i < a.dim(); ++i) xcount *= field->order();

  for (uint64_t zi = 0; zi < zcount; ++zi) {
    Element z = a.zero_element();
    uint64_t v = zi;
    for (size_t r = 0; r < za.dim(); ++r) {
      Scalar c = field->from_index(static_cast<uint32_t>(v % field->order()));
      v /= field->order();
      if (!c.is_zero()) z = add(z, scale(c, za.basis().row(r)));
    }
    Element zz = zeta(a, f, n, z);
    ElementEnumerator it(a);
    for (uint64_t xi = 0; xi < xcount; ++xi) {
      const Element& x = it.current();
      Scalar lhs = f.pair(zz, x).frobenius_n(n);
      Scalar rhs = f.pair(z, a.power_pn(x, n));
      if (lhs != rhs) return false;
      it.advance();
    }
  }
  return true;
}

}  // namespace symkuls
