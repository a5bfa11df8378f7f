#pragma once

#include <cstdint>

namespace gs::nonarith {

// The cyclotomic-style factors of |PSL2(F_{q^p'})| for odd prime p':
// r_plus = (q^p' + 1)/(q + 1), r_minus = (q^p' - 1)/(q - 1).
struct RFactors {
  std::uint64_t q = 0;
  std::uint64_t p_prime = 0;
  std::uint64_t r_plus = 0;
  std::uint64_t r_minus = 0;
};

// q an odd prime power, p_prime an odd prime (or 1, accepted as a
// degenerate test hook), q^p_prime < 2^63.
RFactors r_factors(std::uint64_t q, std::uint64_t p_prime);

// The four gcd statements; a correct r_factors makes all of them true.
struct DivProperties {
  bool cross_coprime = false;      // (q+1, r_minus) = (q-1, r_plus) = 1
  bool coprime_to_q = false;       // (r_plus, q) = (r_minus, q) = 1
  bool factors_coprime = false;    // (r_plus, r_minus) = 1
  bool matched_divides_p = false;  // (r_plus, q+1) | p', (r_minus, q-1) | p'

  bool all() const {
    return cross_coprime && coprime_to_q && factors_coprime &&
           matched_divides_p;
  }
};

DivProperties div_properties(std::uint64_t q, std::uint64_t p_prime);

// The inductive divisibility statement at step m, 2 <= m <= p'-1.
// sign '-': ell | m q^{m-1} + sum_{j=m}^{p'-1} q^j
// sign '+': ell | (-1)^{p'-m} m q^{m-1} + sum_{j=m+1}^{p'} (-1)^{p'-j} q^{j-1}
bool inductive_div_check(std::uint64_t ell, std::uint64_t q,
                         std::uint64_t p_prime, std::uint64_t m, char sign);

enum class EllSource { RPlus, RMinus };

struct OddEllRecord {
  std::uint64_t ell = 0;
  EllSource source = EllSource::RPlus;
  RFactors factors;
};

// Smallest odd prime dividing r_plus or r_minus that divides neither
// q(q^2-1) nor equals p'.
OddEllRecord find_ell_odd(std::uint64_t q, std::uint64_t p_prime);

struct ZsigmondyResult {
  bool exception = false;
  std::uint64_t prime = 0;  // smallest primitive prime divisor when found
};

// Smallest prime dividing q^n - 1 but no q^k - 1 for k < n, or the
// exception marker when no such prime exists.
ZsigmondyResult zsigmondy(std::uint64_t q, std::uint64_t n);

}  // namespace gs::nonarith
