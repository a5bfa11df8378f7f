#include "gs/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace gs::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::uint64_t c = 1;
  while (true) {
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero input");
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  }
  factor_into(n, factors);
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  auto factors = factorize(n);
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return factors;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker: n = 0");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int t = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++t;
    }
    std::int64_t am8 = ((a % 8) + 8) % 8;
    if (t % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
  }
  // n is now odd and positive; finish with the Jacobi reduction.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

QuadField::QuadField(std::int64_t d_) : d(d_) {
  if (d >= 0) throw std::invalid_argument("QuadField: d must be negative");
  auto factors = factorize(static_cast<std::uint64_t>(-d));
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] == factors[i - 1])
      throw std::invalid_argument("QuadField: d must be squarefree");
  }
  disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::Split:
      return "split";
    case SplitType::Inert:
      return "inert";
    case SplitType::Ramified:
      return "ramified";
  }
  return "?";
}

PlaceData splitting_type(std::uint64_t p, const QuadField& field) {
  if (p == 2) throw std::invalid_argument("splitting_type: dyadic place");
  if (!is_prime(p)) throw std::invalid_argument("splitting_type: p not prime");
  PlaceData place;
  place.p = p;
  std::int64_t sp = static_cast<std::int64_t>(p);
  if (field.disc % sp == 0) {
    place.split_type = SplitType::Ramified;
    place.f = 1;
  } else if (kronecker(field.disc, sp) == 1) {
    place.split_type = SplitType::Split;
    place.f = 1;
  } else {
    place.split_type = SplitType::Inert;
    place.f = 2;
  }
  place.q_omega = p;
  place.q_nu = place.f == 2 ? p * p : p;
  return place;
}

namespace {

// (u-1)/2 mod 2 for odd u, i.e. 1 iff u = 3 mod 4.
int eps2(std::int64_t u) { return ((u % 4) + 4) % 4 == 3 ? 1 : 0; }

// (u^2-1)/8 mod 2 for odd u, i.e. 1 iff u = +-3 mod 8.
int omega2(std::int64_t u) {
  std::int64_t m = ((u % 8) + 8) % 8;
  return (m == 3 || m == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(std::int64_t a, std::int64_t b, std::uint64_t v) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("hilbert_symbol: zero argument");
  if (v == place_infinity) return (a < 0 && b < 0) ? -1 : 1;
  if (!is_prime(v)) throw std::invalid_argument("hilbert_symbol: v not prime");
  std::int64_t p = static_cast<std::int64_t>(v);
  int alpha = 0, beta = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  while (b % p == 0) {
    b /= p;
    ++beta;
  }
  if (p == 2) {
    int e = eps2(a) * eps2(b) + alpha * omega2(b) + beta * omega2(a);
    return e % 2 ? -1 : 1;
  }
  int result = 1;
  if ((alpha % 2) && (beta % 2) && p % 4 == 3) result = -result;
  if (beta % 2) result *= kronecker(a, p);
  if (alpha % 2) result *= kronecker(b, p);
  return result;
}

RamSet quaternion_ram_set(std::int64_t a, std::int64_t b) {
  RamSet ram;
  ram.at_infinity = hilbert_symbol(a, b, place_infinity) == -1;
  std::vector<std::uint64_t> candidates = {2};
  for (std::int64_t x : {a, b}) {
    for (std::uint64_t p : prime_divisors(static_cast<std::uint64_t>(
             x < 0 ? -x : x))) {
      if (p > 2) candidates.push_back(p);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (std::uint64_t p : candidates) {
    if (hilbert_symbol(a, b, p) == -1) ram.finite_primes.push_back(p);
  }
  return ram;
}

}  // namespace gs::nt
