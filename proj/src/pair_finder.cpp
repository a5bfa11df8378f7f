#include "gs/pair_finder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gs::pairs {

std::vector<EllCertificate> find_ell(const nt::PlaceData& place) {
  if (place.split_type != nt::SplitType::Inert)
    throw std::invalid_argument("find_ell: place must be inert");
  std::uint64_t q_omega = place.q_omega;
  std::uint64_t q_nu = place.q_nu;
  std::uint64_t psl2_nu = mat::group_order(mat::GroupKind::PSL2, q_nu);
  std::uint64_t psl2_omega = mat::group_order(mat::GroupKind::PSL2, q_omega);
  std::uint64_t borel_ext =
      mat::group_order(mat::GroupKind::BorelOfQuadExt, q_omega);
  auto field = ff::make_field(static_cast<std::int64_t>(place.p), 2);

  std::vector<EllCertificate> certs;
  for (std::uint64_t ell : nt::prime_divisors(q_nu + 1)) {
    if (ell == 2) continue;
    EllCertificate cert;
    cert.place = place;
    cert.ell = ell;
    cert.psl2_nu_order = psl2_nu;
    cert.psl2_omega_order = psl2_omega;
    cert.borel_ext_order = borel_ext;
    cert.witness = mat::element_of_order(field, ell);
    cert.divides_big = psl2_nu % ell == 0;
    cert.avoids_small = psl2_omega % ell != 0;
    cert.avoids_borel = borel_ext % ell != 0;
    certs.push_back(std::move(cert));
  }
  return certs;
}

std::pair<std::uint64_t, std::uint64_t> cover_degrees(std::uint64_t q_nu,
                                                      std::uint64_t ell) {
  std::uint64_t degree_1 = mat::group_order(mat::GroupKind::PSL2, q_nu);
  if (ell == 0 || degree_1 % ell != 0)
    throw std::invalid_argument("cover_degrees: ell must divide |PSL2(q_nu)|");
  return {degree_1 / ell, degree_1};
}

std::uint64_t isogenus_degree(std::uint64_t q1, std::uint64_t q2,
                              std::uint64_t ell) {
  std::uint64_t o1 = mat::group_order(mat::GroupKind::PSL2, q1);
  std::uint64_t o2 = mat::group_order(mat::GroupKind::PSL2, q2);
  if (ell == 0 || o1 % ell != 0 || o2 % ell != 0)
    throw std::invalid_argument(
        "isogenus_degree: ell must divide both group orders");
  unsigned __int128 degree =
      static_cast<unsigned __int128>(o1) * o2 / ell;
  if (degree > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error("isogenus_degree: overflow");
  return static_cast<std::uint64_t>(degree);
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return primes;
}

bool is_inert(std::uint64_t p, const nt::QuadField& field) {
  return p != 2 &&
         nt::splitting_type(p, field).split_type == nt::SplitType::Inert;
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> exponent_scan(
    const nt::QuadField& field, std::uint64_t ell, std::uint64_t bound) {
  if (bound < 3) throw std::invalid_argument("exponent_scan: bound < 3");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (!is_inert(p, field)) continue;
    std::uint64_t n = p * p + 1;
    int alpha = 0;
    while (n % ell == 0) {
      n /= ell;
      ++alpha;
    }
    if (alpha >= 1) out.emplace_back(p, alpha);
  }
  return out;
}

CommonEllResult common_ell_search(const nt::QuadField& field, int j,
                                  std::uint64_t prime_bound) {
  if (j < 1) throw std::invalid_argument("common_ell_search: j must be >= 1");
  if (prime_bound < 100)
    throw std::invalid_argument("common_ell_search: prime_bound < 100");
  constexpr std::uint64_t kSearchCeiling = 10000;

  auto primes = primes_up_to(prime_bound);
  std::uint64_t exponent = 2 * static_cast<std::uint64_t>(j);

  for (std::uint64_t ell = 3; ell <= kSearchCeiling; ell += 2) {
    if (!nt::is_prime(ell)) continue;
    // Roots of t^{2j} + 1 mod ell.
    std::vector<std::uint64_t> roots;
    for (std::uint64_t t = 0; t < ell; ++t) {
      if ((nt::powmod(t, exponent, ell) + 1) % ell == 0) roots.push_back(t);
    }
    if (roots.empty()) continue;

    CommonEllResult result;
    result.ell = ell;
    result.residue_classes = roots;
    result.total_primes = primes.size();
    for (std::uint64_t p : primes) {
      bool in_class =
          std::binary_search(roots.begin(), roots.end(), p % ell);
      if (in_class) ++result.class_prime_count;
      if (in_class && is_inert(p, field)) {
        // ell | p^{2j}+1 by construction; recompute directly anyway.
        if ((nt::powmod(p, exponent, ell) + 1) % ell == 0)
          result.matched_primes.push_back(p);
      }
    }
    if (!result.matched_primes.empty()) return result;
  }
  throw std::runtime_error(
      "common_ell_search: no qualifying ell below the search ceiling");
}

bool fuchsian_admissible(const nt::QuadField& field,
                         std::vector<RamPlace> ram) {
  if (ram.size() % 2 != 0)
    throw std::invalid_argument(
        "fuchsian_admissible: ramification set must have even cardinality");
  std::sort(ram.begin(), ram.end());
  ram.erase(std::unique(ram.begin(), ram.end()), ram.end());
  for (const RamPlace& place : ram) {
    if (place.index < 0 || place.index > 1)
      throw std::invalid_argument("fuchsian_admissible: bad place index");
    if (place.p == 2 ||
        nt::splitting_type(place.p, field).split_type !=
            nt::SplitType::Split) {
      return false;
    }
  }
  // Both places above each prime must be present.
  for (std::size_t i = 0; i < ram.size(); i += 2) {
    if (i + 1 >= ram.size() || ram[i].p != ram[i + 1].p) return false;
  }
  return true;
}

std::vector<std::uint64_t> inert_padding_candidates(const nt::QuadField& field,
                                                    int count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; static_cast<int>(out.size()) < count; p += 2) {
    if (nt::is_prime(p) && is_inert(p, field)) out.push_back(p);
  }
  return out;
}

}  // namespace gs::pairs
