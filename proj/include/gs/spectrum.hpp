#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gs/matrix_group.hpp"
#include "gs/number_theory.hpp"

namespace gs::spectrum {

// Genus-spectrum multiplicity table: opaque surface label -> multiplicity.
// Zero multiplicities are never stored.
using SpectrumMultiset = std::map<std::string, std::uint64_t>;

SpectrumMultiset scale_spectrum(const SpectrumMultiset& s, std::uint64_t ell);

// True iff scale(s1, ell) == scale(s2, ell); cross-checked against plain
// equality, which it must match by cancellation.
bool isogenus_from_scaled(const SpectrumMultiset& s1,
                          const SpectrumMultiset& s2, std::uint64_t ell);

struct CoverDatum {
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t degree = 0;
  std::string description;
};

// Exhaustive verification at the finite-group level that elements of
// order ell in PSL2(F_{q_omega^2}) avoid every ambient conjugate of the
// embedded PSL2(F_{q_omega}) and of the Borel subgroup.
struct FuchsianPairReport {
  std::uint64_t q_omega = 0;
  std::uint64_t q_nu = 0;
  std::uint64_t ell = 0;
  bool divides_big = false;
  bool avoids_small = false;
  bool avoids_borel = false;
  std::uint64_t order_ell_count = 0;
  std::uint64_t psl2_sub_violations = 0;
  std::uint64_t borel_violations = 0;
  bool pass = false;
};

// q_omega must be 3 (enumeration cap q_nu <= 9); ell must be odd.
FuchsianPairReport verify_fuchsian_pair(std::uint64_t q_omega,
                                        std::uint64_t ell);

// True iff trace(g)^2 != 4, i.e. the characteristic polynomial of g is
// not (t -+ 1)^2.
bool nonisometry_witness(const mat::Mat2& g);

// Odd primes <= bound whose splitting types differ between the fields.
std::vector<std::uint64_t> splitting_compare(const nt::QuadField& f1,
                                             const nt::QuadField& f2,
                                             std::uint64_t bound);

struct PicardClasses {
  int count = 0;                  // 1, 2, or 3 by D mod 4
  std::optional<int> index;       // 3, 2 or 6 when applicable
};

PicardClasses picard_classes(std::uint64_t D);

}  // namespace gs::spectrum
