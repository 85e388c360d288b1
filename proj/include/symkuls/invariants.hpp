#ifndef SYMKULS_INVARIANTS_HPP
#define SYMKULS_INVARIANTS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "symkuls/algebra.hpp"

namespace symkuls {

// Ascending chain T_1 <= T_2 <= ... of subspaces T_n = {x : x^(p^n) in KA},
// together with the descending chain of orthogonal ideals, computed up to
// stabilization. n_stab is the first n with T_n = T_{n+1}; both lists have
// length n_stab (entry index n-1 holds the data for n).
struct KulsChain {
  std::vector<Subspace> t_spaces;
  std::vector<Subspace> t_perps;
  size_t n_stab = 0;

  const Subspace& t_space_at(size_t n) const {  // clamps past stabilization
    return t_spaces[std::min(n, n_stab) - 1];
  }
  const Subspace& t_perp_at(size_t n) const {
    return t_perps[std::min(n, n_stab) - 1];
  }
};

// Central primitive orthogonal idempotents summing to the unit, with a
// simplicity flag per block.
struct BlockDecomposition {
  std::vector<Element> idempotents;
  std::vector<bool> simple_flags;
};

// The dimension record emitted as the derived-equivalence obstruction.
// dim_a and dim_ka are presentation context: derived equivalent algebras may
// differ in both, so comparisons use derived_invariants_equal.
struct Fingerprint {
  unsigned p = 0;
  unsigned k = 0;
  size_t dim_a = 0;
  size_t dim_za = 0;
  size_t dim_ka = 0;
  size_t n_stab = 0;
  std::vector<size_t> perp_dims;  // dim T_n^perp for n = 1..n_stab
  size_t dim_ha = 0;
  size_t dim_reynolds = 0;
  size_t dim_z0 = 0;
  // dim(T_i^perp * T_j^perp) for i,j = 1..min(n_stab,3).
  std::vector<std::vector<size_t>> product_dims;
  // dim((T_1^perp)^m) for m = 1,2,3.
  std::array<size_t, 3> t1_power_dims{0, 0, 0};

  bool operator==(const Fingerprint& o) const = default;
};

// Equality of every entry that a derived equivalence preserves (everything
// except dim_a and dim_ka).
bool derived_invariants_equal(const Fingerprint& a, const Fingerprint& b);

Subspace t_space(const Algebra& a, unsigned n);
Subspace t_perp(const Algebra& a, const SymForm& f, unsigned n);
KulsChain compute_chain(const Algebra& a, const SymForm& f);

// The central element defined by (zeta_n(z), x)^(p^n) = (z, x^(p^n)) for all
// x in A. Throws NotCentral when z is outside ZA.
Element zeta(const Algebra& a, const SymForm& f, unsigned n, const Element& z);

// zeta_n(ZA); spans the image because zeta_n is additive and semilinear.
Subspace zeta_image(const Algebra& a, const SymForm& f, unsigned n);

// Span of tau(e_j) = sum_i b_i e_j b*_i over the dual bases of f.
Subspace higman_ideal(const Algebra& a, const SymForm& f);

Subspace reynolds(const KulsChain& chain);

// Span of x*y over basis pairs of u and v.
Subspace ideal_product(const Algebra& a, const Subspace& u, const Subspace& v);

BlockDecomposition blocks(const Algebra& a, const SymForm& f);

// Sum of e_i * ZA over the simple blocks.
Subspace z0(const Algebra& a, const SymForm& f, const BlockDecomposition& b);

Fingerprint fingerprint(const Algebra& a, const SymForm& f);

constexpr uint64_t kDefaultEnumBudget = uint64_t(1) << 20;

// Number of elements |field|^dim if it fits the budget, else 0.
uint64_t enumeration_size(const Algebra& a, uint64_t budget = kDefaultEnumBudget);

// Every element x with x^(p^n) in KA, by full enumeration.
// Throws TooLarge when |field|^dim exceeds the budget.
std::vector<Element> brute_t_space(const Algebra& a, unsigned n,
                                   uint64_t budget = kDefaultEnumBudget);

// Verifies the defining equation of zeta_n for every basis pair, and for
// every element pair when full enumeration fits the budget.
bool brute_zeta_check(const Algebra& a, const SymForm& f, unsigned n,
                      uint64_t budget = kDefaultEnumBudget);

}  // namespace symkuls

#endif
