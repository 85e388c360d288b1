#ifndef SYMKULS_GFIELD_HPP
#define SYMKULS_GFIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symkuls/errors.hpp"

namespace symkuls {

class Scalar;

// Description of GF(p^k) in the polynomial basis over GF(p).
//
// Scalars hold a raw pointer to their FieldSpec, so the spec must outlive
// every scalar created from it; keep the shared_ptr returned by the factory
// alive for as long as the field is in use. Field sizes are capped at
// p^k <= 2^16, which covers every computation this library targets and keeps
// the arithmetic table-free.
class FieldSpec {
 public:
  static constexpr unsigned kMaxDegree = 16;
  static constexpr uint32_t kMaxOrder = 1u << 16;

  // GF(p), p prime.
  static std::shared_ptr<const FieldSpec> prime(unsigned p);
  // GF(p^k) with a user-supplied monic irreducible modulus of degree k
  // (k+1 coefficients, constant term first). Throws BadParameters if the
  // modulus is not monic irreducible of degree k, or the size cap is hit.
  static std::shared_ptr<const FieldSpec> extension(unsigned p, unsigned k,
                                                    const std::vector<unsigned>& modulus);
  // GF(p^k) with the canonical modulus: the first monic irreducible of
  // degree k in the base-p enumeration of the lower coefficients.
  static std::shared_ptr<const FieldSpec> canonical(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  uint32_t order() const { return order_; }
  // Constant term first; empty for prime fields.
  const std::vector<uint16_t>& modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  // Element with the given polynomial coefficients (length <= k, reduced mod p).
  Scalar element(const std::vector<unsigned>& coeffs) const;
  // Image of an integer under Z -> GF(p) -> GF(p^k).
  Scalar from_int(long long v) const;
  // The idx-th element in base-p digit order, 0 <= idx < order().
  Scalar from_index(uint32_t idx) const;

  bool same(const FieldSpec& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  std::string describe() const;

 private:
  FieldSpec(unsigned p, unsigned k, std::vector<uint16_t> modulus);

  unsigned p_;
  unsigned k_;
  uint32_t order_;
  std::vector<uint16_t> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// Element of GF(p^k), stored fully reduced in the polynomial basis, so
// equality is coefficient equality. Immutable value type.
class Scalar {
 public:
  Scalar() : field_(nullptr), c_{} {}

  const FieldSpec& field() const { return *field_; }
  const FieldSpec* field_ptr() const { return field_; }

  bool is_zero() const;
  bool is_one() const;
  // Coefficient of t^i, 0 <= i < k.
  unsigned coeff(unsigned i) const { return c_[i]; }
  uint32_t index() const;  // position in base-p digit order

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;  // throws DivisionByZero on 0
  Scalar pow(uint64_t e) const;

  // a^(p^n); n is reduced mod k since Frobenius has order k on GF(p^k).
  Scalar frobenius_n(unsigned n) const;
  // The unique b with frobenius_n(b, n) == a.
  Scalar inv_frobenius_n(unsigned n) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend class FieldSpec;
  explicit Scalar(const FieldSpec* f) : field_(f), c_{} {}

  void check_same_field(const Scalar& o) const;

  const FieldSpec* field_;
  std::array<uint16_t, FieldSpec::kMaxDegree> c_;
};

}  // namespace symkuls

#endif
