#include "gs/nonarithmetic.hpp"

#include <numeric>
#include <stdexcept>

#include "gs/number_theory.hpp"

namespace gs::nonarith {

namespace {

void check_odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("q must be an odd prime power");
  auto factors = nt::factorize(q);
  for (std::uint64_t f : factors) {
    if (f != factors[0])
      throw std::invalid_argument("q must be an odd prime power");
  }
}

// q^e with rejection above 2^63.
std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
  unsigned __int128 v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    v *= q;
    if (v >= (static_cast<unsigned __int128>(1) << 63))
      throw std::overflow_error("q^p' exceeds 2^63");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

RFactors r_factors(std::uint64_t q, std::uint64_t p_prime) {
  check_odd_prime_power(q);
  if (p_prime != 1 && (p_prime % 2 == 0 || !nt::is_prime(p_prime)))
    throw std::invalid_argument("p' must be an odd prime (or 1)");
  std::uint64_t qp = checked_pow(q, p_prime);
  RFactors r;
  r.q = q;
  r.p_prime = p_prime;
  r.r_plus = (qp + 1) / (q + 1);
  r.r_minus = (qp - 1) / (q - 1);
  return r;
}

DivProperties div_properties(std::uint64_t q, std::uint64_t p_prime) {
  RFactors r = r_factors(q, p_prime);
  DivProperties d;
  d.cross_coprime =
      std::gcd(q + 1, r.r_minus) == 1 && std::gcd(q - 1, r.r_plus) == 1;
  d.coprime_to_q =
      std::gcd(r.r_plus, q) == 1 && std::gcd(r.r_minus, q) == 1;
  d.factors_coprime = std::gcd(r.r_plus, r.r_minus) == 1;
  d.matched_divides_p = p_prime % std::gcd(r.r_plus, q + 1) == 0 &&
                        p_prime % std::gcd(r.r_minus, q - 1) == 0;
  return d;
}

bool inductive_div_check(std::uint64_t ell, std::uint64_t q,
                         std::uint64_t p_prime, std::uint64_t m, char sign) {
  if (sign != '+' && sign != '-')
    throw std::invalid_argument("inductive_div_check: sign must be + or -");
  if (m < 2 || m + 1 > p_prime)
    throw std::invalid_argument("inductive_div_check: m out of [2, p'-1]");
  // Work mod ell throughout.
  std::uint64_t value = 0;
  if (sign == '-') {
    value = nt::mulmod(m % ell, nt::powmod(q, m - 1, ell), ell);
    for (std::uint64_t j = m; j <= p_prime - 1; ++j) {
      value = (value + nt::powmod(q, j, ell)) % ell;
    }
  } else {
    bool negative = (p_prime - m) % 2 == 1;
    std::uint64_t lead = nt::mulmod(m % ell, nt::powmod(q, m - 1, ell), ell);
    value = negative ? (ell - lead) % ell : lead;
    for (std::uint64_t j = m + 1; j <= p_prime; ++j) {
      std::uint64_t term = nt::powmod(q, j - 1, ell);
      if ((p_prime - j) % 2 == 1) term = (ell - term) % ell;
      value = (value + term) % ell;
    }
  }
  return value == 0;
}

OddEllRecord find_ell_odd(std::uint64_t q, std::uint64_t p_prime) {
  RFactors r = r_factors(q, p_prime);
  unsigned __int128 avoid =
      static_cast<unsigned __int128>(q) * (q - 1) * (q + 1);
  OddEllRecord best;
  for (EllSource src : {EllSource::RPlus, EllSource::RMinus}) {
    std::uint64_t value = src == EllSource::RPlus ? r.r_plus : r.r_minus;
    for (std::uint64_t ell : nt::prime_divisors(value)) {
      if (ell == 2 || ell == p_prime || avoid % ell == 0) continue;
      if (best.ell == 0 || ell < best.ell) {
        best.ell = ell;
        best.source = src;
      }
    }
  }
  if (best.ell == 0)
    throw std::logic_error("find_ell_odd: no qualifying prime found");
  best.factors = r;
  return best;
}

ZsigmondyResult zsigmondy(std::uint64_t q, std::uint64_t n) {
  if (q < 2) throw std::invalid_argument("zsigmondy: q must be >= 2");
  if (n < 1) throw std::invalid_argument("zsigmondy: n must be >= 1");
  std::uint64_t qn = checked_pow(q, n);
  ZsigmondyResult result;
  for (std::uint64_t ell : nt::prime_divisors(qn - 1)) {
    bool primitive = true;
    for (std::uint64_t k = 1; k < n; ++k) {
      if ((nt::powmod(q, k, ell) + ell - 1) % ell == 0) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      result.prime = ell;
      return result;
    }
  }
  result.exception = true;
  return result;
}

}  // namespace gs::nonarith
