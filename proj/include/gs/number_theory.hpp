#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gs::nt {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Complete prime factorization of n >= 1, returned as a sorted multiset.
// Trial division up to 10^6, then Pollard rho with certified primality.
std::vector<std::uint64_t> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Kronecker symbol (a|n), n != 0, with the standard 2-adic and sign rules.
int kronecker(std::int64_t a, std::int64_t n);

// Imaginary quadratic field Q(sqrt(d)), d squarefree and negative.
struct QuadField {
  std::int64_t d;
  std::int64_t disc;  // d if d = 1 mod 4, else 4d

  explicit QuadField(std::int64_t d_);
};

enum class SplitType { Split, Inert, Ramified };

std::string to_string(SplitType t);

// A rational prime together with its behavior in k = Q(sqrt(d)).
// With L = Q the lower residue field is always the prime field.
struct PlaceData {
  std::uint64_t p = 0;
  SplitType split_type = SplitType::Split;
  int f = 1;                 // residue degree of a place above p; 2 iff inert
  std::uint64_t q_omega = 0; // residue size downstairs (= p)
  std::uint64_t q_nu = 0;    // residue size upstairs (= p^f)
};

// p must be an odd prime; dyadic places are rejected outright.
PlaceData splitting_type(std::uint64_t p, const QuadField& field);

// Place marker for the infinite place in Hilbert-symbol queries.
inline constexpr std::uint64_t place_infinity = 0;

// Hilbert symbol (a,b)_v over Q_v; v is a prime or place_infinity.
int hilbert_symbol(std::int64_t a, std::int64_t b, std::uint64_t v);

struct RamSet {
  std::vector<std::uint64_t> finite_primes;  // sorted ascending
  bool at_infinity = false;

  std::size_t total_cardinality() const {
    return finite_primes.size() + (at_infinity ? 1 : 0);
  }
};

// Ramification set of the quaternion algebra (a,b) over Q.
RamSet quaternion_ram_set(std::int64_t a, std::int64_t b);

}  // namespace gs::nt
