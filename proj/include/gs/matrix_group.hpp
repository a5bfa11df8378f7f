#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gs/finite_field.hpp"

namespace gs::mat {

// 2x2 matrix (a b; c d) over a finite field.
struct Mat2 {
  ff::FFElem a, b, c, d;

  const ff::FieldPtr& field() const { return a.field(); }

  Mat2 operator*(const Mat2& rhs) const;
  bool operator==(const Mat2& rhs) const;
  bool operator!=(const Mat2& rhs) const { return !(*this == rhs); }

  ff::FFElem det() const;
  ff::FFElem trace() const;
  bool is_identity() const;
  Mat2 negated() const;

  // Inverse of a determinant-1 matrix: (d -b; -c a).
  Mat2 inverse_unimodular() const;
};

Mat2 identity(const ff::FieldPtr& field);
Mat2 make_mat2(const ff::FFElem& a, const ff::FFElem& b, const ff::FFElem& c,
               const ff::FFElem& d);

enum class GroupKind { PSL2, SL2, Borel, BorelOfQuadExt };

// q must be an odd prime power. PSL2: q(q^2-1)/2; SL2: q(q^2-1);
// Borel: q(q-1)/2; BorelOfQuadExt: q^2(q^2-1)/2 with q the base size.
std::uint64_t group_order(GroupKind kind, std::uint64_t q);

// A determinant-1 matrix of exact multiplicative order m, m | q-1 or
// m | q+1. Diagonal for the q-1 branch; for the q+1 branch the image of
// x + y*sqrt(b) -> (x y; by x) of a norm-1 element of order m.
Mat2 element_of_order(const ff::FieldPtr& field, std::uint64_t m);

// Least n >= 1 with g^n = I; requires det(g) = 1.
std::uint64_t element_order(const Mat2& g);

// Trace of a determinant-1 matrix; its characteristic polynomial is
// t^2 - tr*t + 1.
ff::FFElem char_trace(const Mat2& g);

// Canonicalized +-I coset representative: the first nonzero entry in
// scan order (a,b,c,d) is the lex-smaller of {x, -x}.
struct PSL2Elem {
  Mat2 rep;

  static PSL2Elem canonical(const Mat2& g);

  bool operator==(const PSL2Elem& rhs) const { return rep == rhs.rep; }
  bool operator<(const PSL2Elem& rhs) const;
};

std::uint64_t element_order(const PSL2Elem& g);

// The full group as sorted canonical representatives; requires q <= 13.
std::vector<PSL2Elem> enumerate_psl2(const ff::FieldPtr& field);

// Canonical representatives of the Borel subgroup (upper triangular).
std::vector<PSL2Elem> borel_subgroup(const ff::FieldPtr& field);

// Entry-wise image under the prime-field inclusion F_p -> F_{p^2}.
Mat2 subfield_embed(const Mat2& g, const ff::FieldPtr& sup);

// True iff h g h^-1 lies in subgroup_elems for some h in ambient.
bool in_any_conjugate(const PSL2Elem& g, const std::set<PSL2Elem>& subgroup,
                      const std::vector<PSL2Elem>& ambient);

}  // namespace gs::mat
