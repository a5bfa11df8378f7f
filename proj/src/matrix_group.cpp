#include "gs/matrix_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "gs/number_theory.hpp"

namespace gs::mat {

using ff::FFElem;
using ff::FieldPtr;

Mat2 Mat2::operator*(const Mat2& rhs) const {
  return Mat2{a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
              c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

bool Mat2::operator==(const Mat2& rhs) const {
  return a == rhs.a && b == rhs.b && c == rhs.c && d == rhs.d;
}

FFElem Mat2::det() const { return a * d - b * c; }
FFElem Mat2::trace() const { return a + d; }

bool Mat2::is_identity() const {
  return a.is_one() && d.is_one() && b.is_zero() && c.is_zero();
}

Mat2 Mat2::negated() const { return Mat2{-a, -b, -c, -d}; }

Mat2 Mat2::inverse_unimodular() const { return Mat2{d, -b, -c, a}; }

Mat2 identity(const FieldPtr& field) {
  return Mat2{FFElem::one(field), FFElem::zero(field), FFElem::zero(field),
              FFElem::one(field)};
}

Mat2 make_mat2(const FFElem& a, const FFElem& b, const FFElem& c,
               const FFElem& d) {
  return Mat2{a, b, c, d};
}

namespace {

// Validates that q = p^k with p an odd prime, returns (p, k).
std::pair<std::uint64_t, int> odd_prime_power(std::uint64_t q) {
  if (q < 3) throw std::invalid_argument("q must be an odd prime power");
  auto factors = nt::factorize(q);
  for (std::uint64_t f : factors) {
    if (f != factors[0])
      throw std::invalid_argument("q must be an odd prime power");
  }
  if (factors[0] == 2) throw std::invalid_argument("q must be odd");
  return {factors[0], static_cast<int>(factors.size())};
}

std::uint64_t checked_order(unsigned __int128 v, const char* what) {
  if (v > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error(what);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t group_order(GroupKind kind, std::uint64_t q) {
  odd_prime_power(q);
  unsigned __int128 qq = q;
  switch (kind) {
    case GroupKind::PSL2:
      return checked_order(qq * (qq * qq - 1) / 2, "group_order overflow");
    case GroupKind::SL2:
      return checked_order(qq * (qq * qq - 1), "group_order overflow");
    case GroupKind::Borel:
      return checked_order(qq * (qq - 1) / 2, "group_order overflow");
    case GroupKind::BorelOfQuadExt: {
      unsigned __int128 q2 = qq * qq;
      return checked_order(q2 * (q2 - 1) / 2, "group_order overflow");
    }
  }
  throw std::invalid_argument("group_order: bad kind");
}

namespace {

// Element of the quadratic extension F_q(sqrt(b)) as x + y*sqrt(b).
struct Ext2 {
  FFElem x, y;
};

Ext2 ext2_mul(const Ext2& u, const Ext2& v, const FFElem& b) {
  return Ext2{u.x * v.x + b * (u.y * v.y), u.x * v.y + u.y * v.x};
}

bool ext2_is_one(const Ext2& u) { return u.x.is_one() && u.y.is_zero(); }

Ext2 ext2_pow(Ext2 base, std::uint64_t e, const FFElem& b,
              const FieldPtr& field) {
  Ext2 result{FFElem::one(field), FFElem::zero(field)};
  while (e > 0) {
    if (e & 1) result = ext2_mul(result, base, b);
    base = ext2_mul(base, base, b);
    e >>= 1;
  }
  return result;
}

// Lexicographically smallest generator of F_q(sqrt(b))^x, order q^2-1.
Ext2 ext2_primitive(const FieldPtr& field, const FFElem& b) {
  std::uint64_t q = field->order;
  std::uint64_t n = q * q - 1;
  auto primes = nt::prime_divisors(n);
  for (const FFElem& x : ff::all_elements(field)) {
    // (0 + y*sqrt(b))^2 lies in F_q, so pure sqrt(b) multiples have order
    // dividing 2(q-1) and are never generators.
    if (x.is_zero()) continue;
    for (const FFElem& y : ff::all_elements(field)) {
      Ext2 cand{x, y};
      bool primitive = true;
      for (std::uint64_t r : primes) {
        if (ext2_is_one(ext2_pow(cand, n / r, b, field))) {
          primitive = false;
          break;
        }
      }
      if (primitive) return cand;
    }
  }
  throw std::logic_error("ext2_primitive: none found");  // unreachable
}

}  // namespace

Mat2 element_of_order(const FieldPtr& field, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("element_of_order: m = 0");
  std::uint64_t q = field->order;
  if ((q - 1) % m == 0) {
    FFElem g = ff::primitive_element(field);
    FFElem alpha = g.pow((q - 1) / m);
    return Mat2{alpha, FFElem::zero(field), FFElem::zero(field),
                alpha.inverse()};
  }
  if ((q + 1) % m == 0) {
    FFElem b = ff::nonsquare(field);
    Ext2 gamma = ext2_primitive(field, b);
    // gamma^((q^2-1)/m) has norm 1 and exact order m.
    Ext2 delta = ext2_pow(gamma, (q * q - 1) / m, b, field);
    return Mat2{delta.x, delta.y, b * delta.y, delta.x};
  }
  throw std::invalid_argument(
      "element_of_order: m divides neither q-1 nor q+1");
}

std::uint64_t element_order(const Mat2& g) {
  if (!g.det().is_one())
    throw std::invalid_argument("element_order: det must be 1");
  std::uint64_t q = g.field()->order;
  std::uint64_t cap = 2 * (q + 1) + 2;
  Mat2 power = g;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (power.is_identity()) return n;
    power = power * g;
  }
  throw std::logic_error("element_order: exceeded cap");  // unreachable
}

std::uint64_t element_order(const PSL2Elem& g) {
  const Mat2& m = g.rep;
  std::uint64_t q = m.field()->order;
  std::uint64_t cap = 2 * (q + 1) + 2;
  Mat2 power = m;
  Mat2 neg_id = identity(m.field()).negated();
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (power.is_identity() || power == neg_id) return n;
    power = power * m;
  }
  throw std::logic_error("element_order: exceeded cap");  // unreachable
}

FFElem char_trace(const Mat2& g) {
  if (!g.det().is_one())
    throw std::invalid_argument("char_trace: det must be 1");
  return g.trace();
}

PSL2Elem PSL2Elem::canonical(const Mat2& g) {
  if (!g.det().is_one())
    throw std::invalid_argument("PSL2Elem: det must be 1");
  for (const FFElem* entry : {&g.a, &g.b, &g.c, &g.d}) {
    if (!entry->is_zero()) {
      FFElem neg = -*entry;
      return (neg < *entry) ? PSL2Elem{g.negated()} : PSL2Elem{g};
    }
  }
  throw std::invalid_argument("PSL2Elem: zero matrix");  // det 0, unreachable
}

bool PSL2Elem::operator<(const PSL2Elem& rhs) const {
  for (auto [l, r] : {std::pair{&rep.a, &rhs.rep.a}, {&rep.b, &rhs.rep.b},
                      {&rep.c, &rhs.rep.c}, {&rep.d, &rhs.rep.d}}) {
    if (*l < *r) return true;
    if (*r < *l) return false;
  }
  return false;
}

std::vector<PSL2Elem> enumerate_psl2(const FieldPtr& field) {
  if (field->order > 13)
    throw std::invalid_argument("enumerate_psl2: q > 13 enumeration cap");
  auto elems = ff::all_elements(field);
  std::set<PSL2Elem> out;
  for (const FFElem& a : elems) {
    for (const FFElem& b : elems) {
      for (const FFElem& c : elems) {
        for (const FFElem& d : elems) {
          Mat2 g{a, b, c, d};
          if (g.det().is_one()) out.insert(PSL2Elem::canonical(g));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<PSL2Elem> borel_subgroup(const FieldPtr& field) {
  std::set<PSL2Elem> out;
  for (const FFElem& alpha : ff::all_elements(field)) {
    if (alpha.is_zero()) continue;
    for (const FFElem& beta : ff::all_elements(field)) {
      Mat2 g{alpha, beta, FFElem::zero(field), alpha.inverse()};
      out.insert(PSL2Elem::canonical(g));
    }
  }
  return {out.begin(), out.end()};
}

Mat2 subfield_embed(const Mat2& g, const FieldPtr& sup) {
  const FieldPtr& sub = g.field();
  if (sub->p != sup->p)
    throw std::invalid_argument("subfield_embed: characteristic mismatch");
  if (sub->k != 1 || sup->k != 2)
    throw std::invalid_argument(
        "subfield_embed: requires a prime field and its quadratic extension");
  auto lift = [&](const FFElem& x) {
    return FFElem(sup, {x.coeffs()[0], 0});
  };
  return Mat2{lift(g.a), lift(g.b), lift(g.c), lift(g.d)};
}

bool in_any_conjugate(const PSL2Elem& g, const std::set<PSL2Elem>& subgroup,
                      const std::vector<PSL2Elem>& ambient) {
  for (const PSL2Elem& h : ambient) {
    Mat2 conj = h.rep * g.rep * h.rep.inverse_unimodular();
    if (subgroup.count(PSL2Elem::canonical(conj))) return true;
  }
  return false;
}

}  // namespace gs::mat
