#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gs::ff {

// A finite field F_{p^k}, p odd, with a deterministic modulus: the
// lexicographically smallest monic irreducible of degree k over F_p,
// coefficients listed constant term first. For k = 1 this is the
// polynomial t, so the prime field carries the convention "t - 0".
struct FieldDesc {
  std::int64_t p = 0;
  int k = 0;
  std::vector<std::int64_t> modulus;  // length k+1, monic
  std::uint64_t order = 0;            // p^k
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

// p an odd prime, k >= 1, p^k <= 2^31.
FieldPtr make_field(std::int64_t p, int k);

bool same_field(const FieldDesc& a, const FieldDesc& b);

// An element of F_{p^k} as k residues mod p, constant term first.
class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldPtr field, std::vector<std::int64_t> coeffs);

  static FFElem from_int(const FieldPtr& field, std::int64_t value);
  static FFElem zero(const FieldPtr& field) { return from_int(field, 0); }
  static FFElem one(const FieldPtr& field) { return from_int(field, 1); }

  const FieldPtr& field() const { return field_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  FFElem operator+(const FFElem& rhs) const;
  FFElem operator-(const FFElem& rhs) const;
  FFElem operator*(const FFElem& rhs) const;
  FFElem operator/(const FFElem& rhs) const;
  FFElem operator-() const;
  bool operator==(const FFElem& rhs) const;
  bool operator!=(const FFElem& rhs) const { return !(*this == rhs); }

  FFElem pow(std::uint64_t e) const;
  FFElem inverse() const;

  // Coefficient-lexicographic total order (c0 most significant).
  bool operator<(const FFElem& rhs) const { return coeffs_ < rhs.coeffs_; }

  // Debug form "c0+c1*t (mod p, m(t))"; no stability guarantee.
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<std::int64_t> coeffs_;
};

// Least n >= 1 with x^n = 1; divides q-1. Rejects zero.
std::uint64_t mult_order(const FFElem& x);

// The lexicographically smallest element of multiplicative order q-1.
FFElem primitive_element(const FieldPtr& field);

// The lexicographically smallest b with b^((q-1)/2) = -1.
FFElem nonsquare(const FieldPtr& field);

// All field elements in coefficient-lexicographic order.
std::vector<FFElem> all_elements(const FieldPtr& field);

}  // namespace gs::ff
