#include "gs/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gs/number_theory.hpp"

namespace gs::ff {

namespace {

using Poly = std::vector<std::int64_t>;  // constant term first

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// Reduce a by the monic modulus m, in place.
void poly_reduce(Poly& a, const Poly& m, std::int64_t p) {
  int dm = degree(m);
  trim(a);
  while (degree(a) >= dm) {
    std::int64_t lead = a.back();
    int shift = degree(a) - dm;
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = mod_p(a[i + shift] - lead * m[i], p);
    }
    trim(a);
  }
}

Poly poly_mul(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = mod_p(prod[i + j] + a[i] * b[j], p);
    }
  }
  poly_reduce(prod, m, p);
  return prod;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
  Poly result = {1};
  poly_reduce(base, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base, m, p);
    base = poly_mul(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], p);
  trim(a);
  return a;
}

Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  // b need not be monic here.
  int db = degree(b);
  std::int64_t inv_lead =
      static_cast<std::int64_t>(nt::powmod(mod_p(b.back(), p), p - 2, p));
  trim(a);
  while (degree(a) >= db) {
    std::int64_t factor = mod_p(a.back() * inv_lead, p);
    int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = mod_p(a[i + shift] - factor * b[i], p);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: m (monic, degree k) is irreducible over F_p iff
// t^(p^k) = t mod m and gcd(t^(p^(k/r)) - t, m) = 1 for each prime r | k.
bool is_irreducible(const Poly& m, std::int64_t p) {
  int k = degree(m);
  if (k == 1) return true;
  const Poly t = {0, 1};
  std::uint64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= static_cast<std::uint64_t>(p);
  if (poly_sub(poly_powmod(t, pk, m, p), t, p) != Poly{}) return false;
  for (std::uint64_t r : nt::prime_divisors(static_cast<std::uint64_t>(k))) {
    std::uint64_t pe = 1;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(k) / r; ++i) {
      pe *= static_cast<std::uint64_t>(p);
    }
    Poly g = poly_gcd(poly_sub(poly_powmod(t, pe, m, p), t, p), m, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

}  // namespace

FieldPtr make_field(std::int64_t p, int k) {
  if (p == 2) throw std::invalid_argument("make_field: p = 2 is rejected");
  if (p < 3 || !nt::is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("make_field: p must be an odd prime");
  if (k < 1) throw std::invalid_argument("make_field: k must be >= 1");
  unsigned __int128 order = 1;
  for (int i = 0; i < k; ++i) {
    order *= static_cast<unsigned __int128>(p);
    if (order > (static_cast<unsigned __int128>(1) << 31))
      throw std::invalid_argument("make_field: p^k exceeds 2^31");
  }

  auto field = std::make_shared<FieldDesc>();
  field->p = p;
  field->k = k;
  field->order = static_cast<std::uint64_t>(order);

  // Smallest monic irreducible of degree k, lexicographic in
  // (c0, ..., c_{k-1}) with c0 most significant.
  Poly m(static_cast<std::size_t>(k) + 1, 0);
  m[static_cast<std::size_t>(k)] = 1;
  while (true) {
    if (is_irreducible(m, p)) break;
    int i = k - 1;
    while (i >= 0 && m[static_cast<std::size_t>(i)] == p - 1) {
      m[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0)
      throw std::logic_error("make_field: no irreducible found");  // unreachable
    ++m[static_cast<std::size_t>(i)];
  }
  field->modulus = std::move(m);
  return field;
}

bool same_field(const FieldDesc& a, const FieldDesc& b) {
  return a.p == b.p && a.k == b.k && a.modulus == b.modulus;
}

FFElem::FFElem(FieldPtr field, std::vector<std::int64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->k)
    throw std::invalid_argument("FFElem: coefficient count must equal k");
  for (auto& c : coeffs_) c = mod_p(c, field_->p);
}

FFElem FFElem::from_int(const FieldPtr& field, std::int64_t value) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(field->k), 0);
  c[0] = mod_p(value, field->p);
  return FFElem(field, std::move(c));
}

bool FFElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t c) { return c == 0; });
}

bool FFElem::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](std::int64_t c) { return c == 0; });
}

namespace {
void check_fields(const FFElem& a, const FFElem& b) {
  if (!same_field(*a.field(), *b.field()))
    throw std::invalid_argument("FFElem: field mismatch");
}
}  // namespace

FFElem FFElem::operator+(const FFElem& rhs) const {
  check_fields(*this, rhs);
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = mod_p(coeffs_[i] + rhs.coeffs_[i], field_->p);
  }
  return FFElem(field_, std::move(c));
}

FFElem FFElem::operator-(const FFElem& rhs) const {
  check_fields(*this, rhs);
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = mod_p(coeffs_[i] - rhs.coeffs_[i], field_->p);
  }
  return FFElem(field_, std::move(c));
}

FFElem FFElem::operator-() const {
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = mod_p(-coeffs_[i], field_->p);
  }
  return FFElem(field_, std::move(c));
}

FFElem FFElem::operator*(const FFElem& rhs) const {
  check_fields(*this, rhs);
  Poly prod = poly_mul(coeffs_, rhs.coeffs_, field_->modulus, field_->p);
  prod.resize(static_cast<std::size_t>(field_->k), 0);
  return FFElem(field_, std::move(prod));
}

FFElem FFElem::operator/(const FFElem& rhs) const {
  check_fields(*this, rhs);
  if (rhs.is_zero()) throw std::invalid_argument("FFElem: division by zero");
  return *this * rhs.inverse();
}

FFElem FFElem::pow(std::uint64_t e) const {
  FFElem result = FFElem::one(field_);
  FFElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw std::invalid_argument("FFElem: inverse of zero");
  return pow(field_->order - 2);
}

bool FFElem::operator==(const FFElem& rhs) const {
  return same_field(*field_, *rhs.field_) && coeffs_ == rhs.coeffs_;
}

std::string FFElem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << "+";
    os << coeffs_[i];
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  os << " (mod " << field_->p << ", ";
  for (std::size_t i = 0; i < field_->modulus.size(); ++i) {
    if (i > 0) os << "+";
    os << field_->modulus[i];
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  os << ")";
  return os.str();
}

std::uint64_t mult_order(const FFElem& x) {
  if (x.is_zero()) throw std::invalid_argument("mult_order: zero input");
  std::uint64_t n = x.field()->order - 1;
  std::uint64_t e = n;
  for (std::uint64_t r : nt::prime_divisors(n)) {
    while (e % r == 0 && x.pow(e / r).is_one()) e /= r;
  }
  return e;
}

std::vector<FFElem> all_elements(const FieldPtr& field) {
  std::vector<FFElem> elems;
  elems.reserve(field->order);
  std::vector<std::int64_t> c(static_cast<std::size_t>(field->k), 0);
  while (true) {
    elems.emplace_back(field, c);
    int i = field->k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == field->p - 1) {
      c[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  // Trailing coefficient varies fastest, so this is already
  // coefficient-lexicographic order with c0 most significant.
  return elems;
}

FFElem primitive_element(const FieldPtr& field) {
  std::uint64_t n = field->order - 1;
  for (const FFElem& x : all_elements(field)) {
    if (x.is_zero()) continue;
    if (mult_order(x) == n) return x;
  }
  throw std::logic_error("primitive_element: none found");  // unreachable
}

FFElem nonsquare(const FieldPtr& field) {
  std::uint64_t half = (field->order - 1) / 2;
  for (const FFElem& x : all_elements(field)) {
    if (x.is_zero()) continue;
    FFElem y = x.pow(half);
    if (!y.is_one()) return x;  // Euler criterion: y = -1
  }
  throw std::logic_error("nonsquare: none found");  // unreachable
}

}  // namespace gs::ff
