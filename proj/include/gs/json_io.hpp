#pragma once

#include <string>

#include <json.hpp>

#include "gs/nonarithmetic.hpp"
#include "gs/pair_finder.hpp"
#include "gs/spectrum.hpp"

namespace gs::io {

using nlohmann::json;

// Integers above 2^53 are serialized as decimal strings so every
// consumer language stays exact.
inline json exact_int(std::uint64_t v) {
  constexpr std::uint64_t kSafe = 1ull << 53;
  if (v <= kSafe) return json(v);
  return json(std::to_string(v));
}

inline json to_json(const ff::FieldDesc& f) {
  return json{{"p", f.p}, {"k", f.k}, {"modulus", f.modulus}};
}

inline json to_json(const mat::Mat2& g) {
  return json{{"field", to_json(*g.field())},
              {"a", g.a.coeffs()},
              {"b", g.b.coeffs()},
              {"c", g.c.coeffs()},
              {"d", g.d.coeffs()}};
}

inline json to_json(const nt::PlaceData& place) {
  return json{{"p", place.p},
              {"split_type", nt::to_string(place.split_type)},
              {"f", place.f},
              {"q_omega", exact_int(place.q_omega)},
              {"q_nu", exact_int(place.q_nu)}};
}

inline json to_json(const nt::RamSet& ram) {
  return json{{"finite_primes", ram.finite_primes},
              {"at_infinity", ram.at_infinity}};
}

inline json to_json(const pairs::EllCertificate& cert) {
  return json{{"place", to_json(cert.place)},
              {"ell", cert.ell},
              {"psl2_nu_order", exact_int(cert.psl2_nu_order)},
              {"psl2_omega_order", exact_int(cert.psl2_omega_order)},
              {"borel_ext_order", exact_int(cert.borel_ext_order)},
              {"witness", to_json(cert.witness)},
              {"checks",
               {{"divides_big", cert.divides_big},
                {"avoids_small", cert.avoids_small},
                {"avoids_borel", cert.avoids_borel}}}};
}

inline json to_json(const pairs::CommonEllResult& result) {
  return json{{"ell", result.ell},
              {"residue_classes", result.residue_classes},
              {"matched_primes", result.matched_primes},
              {"empirical_density",
               {{"num", result.matched_primes.size()},
                {"den", result.total_primes}}},
              {"class_prime_count", result.class_prime_count},
              {"total_primes", result.total_primes}};
}

inline json to_json(const spectrum::FuchsianPairReport& report) {
  return json{{"q_omega", report.q_omega},
              {"q_nu", report.q_nu},
              {"ell", report.ell},
              {"divides_big", report.divides_big},
              {"avoids_small", report.avoids_small},
              {"avoids_borel", report.avoids_borel},
              {"order_ell_count", report.order_ell_count},
              {"psl2_sub_violations", report.psl2_sub_violations},
              {"borel_violations", report.borel_violations},
              {"pass", report.pass}};
}

inline json to_json(const nonarith::RFactors& r) {
  return json{{"q", r.q},
              {"p_prime", r.p_prime},
              {"r_plus", exact_int(r.r_plus)},
              {"r_minus", exact_int(r.r_minus)}};
}

inline json to_json(const nonarith::OddEllRecord& rec) {
  return json{{"ell", rec.ell},
              {"source",
               rec.source == nonarith::EllSource::RPlus ? "r_plus" : "r_minus"},
              {"factors", to_json(rec.factors)}};
}

inline json to_json(const nonarith::ZsigmondyResult& z) {
  json out{{"exception", z.exception}};
  if (!z.exception) out["prime"] = exact_int(z.prime);
  return out;
}

inline json to_json(const spectrum::PicardClasses& p) {
  json out{{"count", p.count}};
  if (p.index) out["index"] = *p.index;
  return out;
}

}  // namespace gs::io
