#include "gs/spectrum.hpp"

#include <stdexcept>

namespace gs::spectrum {

SpectrumMultiset scale_spectrum(const SpectrumMultiset& s, std::uint64_t ell) {
  if (ell < 1) throw std::invalid_argument("scale_spectrum: ell must be >= 1");
  SpectrumMultiset out;
  for (const auto& [label, mult] : s) out.emplace(label, mult * ell);
  return out;
}

bool isogenus_from_scaled(const SpectrumMultiset& s1,
                          const SpectrumMultiset& s2, std::uint64_t ell) {
  bool scaled = scale_spectrum(s1, ell) == scale_spectrum(s2, ell);
  bool plain = s1 == s2;
  if (scaled != plain)
    throw std::logic_error("isogenus_from_scaled: cancellation violated");
  return scaled;
}

FuchsianPairReport verify_fuchsian_pair(std::uint64_t q_omega,
                                        std::uint64_t ell) {
  if (ell % 2 == 0)
    throw std::invalid_argument("verify_fuchsian_pair: ell must be odd");
  if (q_omega != 3)
    throw std::invalid_argument(
        "verify_fuchsian_pair: enumeration cap allows only q_omega = 3");

  FuchsianPairReport report;
  report.q_omega = q_omega;
  report.q_nu = q_omega * q_omega;
  report.ell = ell;
  report.divides_big =
      mat::group_order(mat::GroupKind::PSL2, report.q_nu) % ell == 0;
  report.avoids_small =
      mat::group_order(mat::GroupKind::PSL2, q_omega) % ell != 0;
  report.avoids_borel =
      mat::group_order(mat::GroupKind::BorelOfQuadExt, q_omega) % ell != 0;

  auto sub_field = ff::make_field(static_cast<std::int64_t>(q_omega), 1);
  auto big_field = ff::make_field(static_cast<std::int64_t>(q_omega), 2);
  auto ambient = mat::enumerate_psl2(big_field);

  std::set<mat::PSL2Elem> embedded;
  for (const auto& g : mat::enumerate_psl2(sub_field)) {
    embedded.insert(
        mat::PSL2Elem::canonical(mat::subfield_embed(g.rep, big_field)));
  }
  auto borel_vec = mat::borel_subgroup(big_field);
  std::set<mat::PSL2Elem> borel(borel_vec.begin(), borel_vec.end());

  for (const auto& g : ambient) {
    if (mat::element_order(g) != ell) continue;
    ++report.order_ell_count;
    if (mat::in_any_conjugate(g, embedded, ambient))
      ++report.psl2_sub_violations;
    if (mat::in_any_conjugate(g, borel, ambient)) ++report.borel_violations;
  }
  report.pass = report.divides_big && report.avoids_small &&
                report.avoids_borel && report.order_ell_count > 0 &&
                report.psl2_sub_violations == 0 &&
                report.borel_violations == 0;
  return report;
}

bool nonisometry_witness(const mat::Mat2& g) {
  ff::FFElem tau = mat::char_trace(g);
  ff::FFElem four = ff::FFElem::from_int(g.field(), 4);
  return tau * tau != four;
}

std::vector<std::uint64_t> splitting_compare(const nt::QuadField& f1,
                                             const nt::QuadField& f2,
                                             std::uint64_t bound) {
  if (bound < 3) throw std::invalid_argument("splitting_compare: bound < 3");
  std::vector<std::uint64_t> disagreements;
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    if (!nt::is_prime(p)) continue;
    if (nt::splitting_type(p, f1).split_type !=
        nt::splitting_type(p, f2).split_type) {
      disagreements.push_back(p);
    }
  }
  return disagreements;
}

PicardClasses picard_classes(std::uint64_t D) {
  if (D < 1) throw std::invalid_argument("picard_classes: D must be >= 1");
  PicardClasses out;
  switch (D % 4) {
    case 0:
    case 3:
      out.count = 1;
      break;
    case 2:
      out.count = 2;
      out.index = (D % 8 == 2) ? 2 : 6;
      break;
    case 1:
      out.count = 3;
      out.index = 3;
      break;
  }
  return out;
}

}  // namespace gs::spectrum
