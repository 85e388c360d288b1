#include "symkuls/gfield.hpp"

#include <algorithm>
#include <sstream>

namespace symkuls {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p), constant term first, for modulus validation only.
using Poly = std::vector<uint16_t>;

size_t degree(const Poly& f) {
  size_t d = f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;  // deg(0) treated as 0, callers guard
}

bool is_zero_poly(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](uint16_t c) { return c == 0; });
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  size_t dg = degree(g);
  while (!is_zero_poly(f) && degree(f) >= dg) {
    size_t df = degree(f);
    uint32_t c = f[df];
    for (size_t j = 0; j <= dg; ++j) {
      uint32_t sub = (c * g[j]) % p;
      f[df - dg + j] = static_cast<uint16_t>((f[df - dg + j] + p - sub) % p);
    }
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
  return is_zero_poly(poly_mod(f, g, p));
}

// Trial division by every monic polynomial of degree 1..k/2. The size cap
// keeps the candidate count at sqrt(p^k) <= 256 per degree.
bool is_irreducible(const Poly& f, unsigned p, unsigned k) {
  for (unsigned d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      uint64_t v = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<uint16_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(unsigned p, unsigned k, std::vector<uint16_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  order_ = 1;
  for (unsigned i = 0; i < k_; ++i) order_ *= p_;
}

std::shared_ptr<const FieldSpec> FieldSpec::prime(unsigned p) {
  if (!is_prime(p)) throw BadParameters("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) throw BadParameters("field size exceeds 2^16 cap");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(p, 1, {}));
}

std::shared_ptr<const FieldSpec> FieldSpec::extension(unsigned p, unsigned k,
                                                      const std::vector<unsigned>& modulus) {
  if (!is_prime(p)) throw BadParameters("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw BadParameters("extension degree must be positive");
  if (k == 1) {
    if (!modulus.empty()) throw BadParameters("prime field takes no modulus");
    return prime(p);
  }
  uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxOrder) throw BadParameters("field size exceeds 2^16 cap");
  }
  if (modulus.size() != k + 1) throw BadParameters("modulus must have k+1 coefficients");
  Poly m(k + 1);
  for (size_t i = 0; i <= k; ++i) m[i] = static_cast<uint16_t>(modulus[i] % p);
  if (m[k] != 1) throw BadParameters("modulus must be monic");
  if (!is_irreducible(m, p, k))
    throw BadParameters("modulus is reducible over GF(" + std::to_string(p) + ")");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(p, k, std::move(m)));
}

std::shared_ptr<const FieldSpec> FieldSpec::canonical(unsigned p, unsigned k) {
  if (k <= 1) return prime(p);
  uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> m(k + 1, 0);
    uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    m[k] = 1;
    try {
      return extension(p, k, m);
    } catch (const BadParameters&) {
      continue;
    }
  }
  throw BadParameters("no irreducible modulus found");  // unreachable for valid p, k
}

Scalar FieldSpec::zero() const { return Scalar(this); }

Scalar FieldSpec::one() const {
  Scalar s(this);
  s.c_[0] = 1;
  return s;
}

Scalar FieldSpec::element(const std::vector<unsigned>& coeffs) const {
  if (coeffs.size() > k_) throw BadParameters("too many coefficients for GF(p^k) element");
  Scalar s(this);
  for (size_t i = 0; i < coeffs.size(); ++i) s.c_[i] = static_cast<uint16_t>(coeffs[i] % p_);
  return s;
}

Scalar FieldSpec::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  Scalar s(this);
  s.c_[0] = static_cast<uint16_t>(r);
  return s;
}

Scalar FieldSpec::from_index(uint32_t idx) const {
  Scalar s(this);
  for (unsigned i = 0; i < k_; ++i) {
    s.c_[i] = static_cast<uint16_t>(idx % p_);
    idx /= p_;
  }
  return s;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << order_ << ")";
  if (k_ > 1) {
    os << "=GF(" << p_ << ")[t]/(";
    bool first = true;
    for (size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ == o.field_) return;
  if (field_ == nullptr || o.field_ == nullptr || !field_->same(*o.field_))
    throw FieldMismatch("scalars belong to different fields");
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint16_t x) { return x == 0; });
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](uint16_t x) { return x == 0; });
}

uint32_t Scalar::index() const {
  uint32_t idx = 0;
  for (unsigned i = field_->k(); i-- > 0;) idx = idx * field_->p() + c_[i];
  return idx;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_);
  unsigned p = field_->p();
  for (unsigned i = 0; i < field_->k(); ++i)
    r.c_[i] = static_cast<uint16_t>((c_[i] + o.c_[i]) % p);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_);
  unsigned p = field_->p();
  for (unsigned i = 0; i < field_->k(); ++i)
    r.c_[i] = static_cast<uint16_t>((c_[i] + p - o.c_[i]) % p);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  unsigned p = field_->p();
  for (unsigned i = 0; i < field_->k(); ++i)
    r.c_[i] = static_cast<uint16_t>((p - c_[i]) % p);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  unsigned p = field_->p();
  unsigned k = field_->k();
  if (k == 1) {
    Scalar r(field_);
    r.c_[0] = static_cast<uint16_t>((uint32_t(c_[0]) * o.c_[0]) % p);
    return r;
  }
  // Schoolbook convolution, then reduction by the monic modulus.
  std::array<uint64_t, 2 * FieldSpec::kMaxDegree> buf{};
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) buf[i + j] += uint64_t(c_[i]) * o.c_[j];
  }
  const auto& m = field_->modulus();
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    uint64_t c = buf[d] % p;
    if (c == 0) continue;
    // t^d = -sum_j m[j] t^(d-k+j)
    for (unsigned j = 0; j < k; ++j) {
      uint64_t sub = (c * m[j]) % p;
      buf[d - k + j] += p - sub;  // keep non-negative mod p
    }
    buf[d] = 0;
  }
  Scalar r(field_);
  for (unsigned i = 0; i < k; ++i) r.c_[i] = static_cast<uint16_t>(buf[i] % p);
  return r;
}

Scalar Scalar::pow(uint64_t e) const {
  Scalar base = *this;
  Scalar acc = field_->one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return pow(uint64_t(field_->order()) - 2);
}

Scalar Scalar::frobenius_n(unsigned n) const {
  unsigned k = field_->k();
  unsigned r = n % k;
  if (r == 0) return *this;
  uint64_t e = 1;
  for (unsigned i = 0; i < r; ++i) e *= field_->p();
  return pow(e);
}

Scalar Scalar::inv_frobenius_n(unsigned n) const {
  unsigned k = field_->k();
  unsigned r = n % k;
  return frobenius_n((k - r) % k);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

std::string Scalar::str() const {
  if (field_->k() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (unsigned i = 0; i < field_->k(); ++i) {
    if (i) s += " ";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

}  // namespace symkuls
