#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gs/matrix_group.hpp"
#include "gs/number_theory.hpp"

namespace gs::pairs {

// A prime ell certified against the three relevant group orders at an
// inert place, with a witness element of exact order ell in SL2(F_{q_nu}).
struct EllCertificate {
  nt::PlaceData place;
  std::uint64_t ell = 0;
  std::uint64_t psl2_nu_order = 0;
  std::uint64_t psl2_omega_order = 0;
  std::uint64_t borel_ext_order = 0;
  mat::Mat2 witness;
  bool divides_big = false;   // ell | |PSL2(q_nu)|
  bool avoids_small = false;  // ell does not divide |PSL2(q_omega)|
  bool avoids_borel = false;  // ell does not divide |B(F_{q_omega}(sqrt b))|

  bool valid() const { return divides_big && avoids_small && avoids_borel; }
};

// One certificate per odd prime divisor of q_nu + 1, ascending by ell.
// The place must be inert.
std::vector<EllCertificate> find_ell(const nt::PlaceData& place);

// (degree_C, degree_1) = (|PSL2(q_nu)|/ell, |PSL2(q_nu)|).
std::pair<std::uint64_t, std::uint64_t> cover_degrees(std::uint64_t q_nu,
                                                      std::uint64_t ell);

// |PSL2(q1)| * |PSL2(q2)| / ell; ell must divide both group orders.
std::uint64_t isogenus_degree(std::uint64_t q1, std::uint64_t q2,
                              std::uint64_t ell);

// For each inert prime p <= bound, the exact exponent of ell in p^2 + 1,
// listed only when it is at least 1.
std::vector<std::pair<std::uint64_t, int>> exponent_scan(
    const nt::QuadField& field, std::uint64_t ell, std::uint64_t bound);

struct CommonEllResult {
  std::uint64_t ell = 0;
  std::vector<std::uint64_t> residue_classes;  // roots of t^{2j}+1 mod ell
  std::vector<std::uint64_t> matched_primes;   // inert p <= bound, ell | p^{2j}+1
  std::uint64_t class_prime_count = 0;  // primes <= bound in a root class
  std::uint64_t total_primes = 0;       // pi(bound)

  double matched_density() const {
    return total_primes ? static_cast<double>(matched_primes.size()) /
                              static_cast<double>(total_primes)
                        : 0.0;
  }
  double class_density() const {
    return total_primes ? static_cast<double>(class_prime_count) /
                              static_cast<double>(total_primes)
                        : 0.0;
  }
};

// Smallest odd prime ell for which t^{2j}+1 has a root mod ell and at
// least one inert prime p <= prime_bound satisfies ell | p^{2j}+1.
CommonEllResult common_ell_search(const nt::QuadField& field, int j,
                                  std::uint64_t prime_bound);

// One of the two places above a split rational prime.
struct RamPlace {
  std::uint64_t p = 0;
  int index = 0;  // 0 or 1

  bool operator<(const RamPlace& rhs) const {
    return p != rhs.p ? p < rhs.p : index < rhs.index;
  }
  bool operator==(const RamPlace& rhs) const {
    return p == rhs.p && index == rhs.index;
  }
};

// True iff every member lies above a split prime and both places above
// each such prime are present. Even cardinality is required.
bool fuchsian_admissible(const nt::QuadField& field,
                         std::vector<RamPlace> ram);

// Smallest inert primes of the field, usable as parity padding when
// assembling a candidate algebra downstairs.
std::vector<std::uint64_t> inert_padding_candidates(const nt::QuadField& field,
                                                    int count);

}  // namespace gs::pairs
