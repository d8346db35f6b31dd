#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ordersum/numeric.hpp"

namespace ordersum {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization with strictly ascending primes.  factorize(1) yields
// an empty pair list.
struct Factorization {
  std::vector<PrimePower> pairs;

  std::uint64_t value() const;
  std::uint64_t largest_prime() const;  // DomainError when empty (n = 1)
  bool has_prime(std::uint64_t p) const;
};

// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime(std::uint64_t n);

// Trial division up to 2^31 with a primality certificate for the leftover
// cofactor.  Inputs whose cofactor is composite with no factor below the
// limit are rejected with DomainError; catalog-scale numbers never hit this.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// p = 2^(2^k) + 1 for some k >= 0, and prime.
bool is_fermat_prime(std::uint64_t p);

// Sum of element orders of the cyclic group of order p^r:
// (p^(2r+1) + 1) / (p + 1), always an exact integer.
BigInt psi_cyclic_prime_power(std::uint64_t p, unsigned r);

// Sum of element orders of C_n, as the product over the Sylow factors.
BigInt psi_cyclic(std::uint64_t n);

enum class CyclicBound {
  General,           // psi(C_n) >= 2 n^2 / (p+1), p the largest prime of n
  P13,               // psi(C_n) >= (5005/1152) n^2 / (p+1) when p >= 13
  SmallPrimeSquare,  // p^(2a) > (13/12) psi(C_{p^a}) for p in {2,3,5}
  SmallPiSquare,     // m^2 > (13/12) psi(C_m) when every prime of m is in {2,3,5}
  Superadditive,     // psi(C_{p^(a+b)}) > psi(C_{p^a}) psi(C_{p^b})
};

// Each returns whether the inequality holds, evaluated exactly.  A violated
// hypothesis raises PreconditionError rather than returning false, so
// property suites cannot silently skip cases.
bool cyclic_bound_general(std::uint64_t n);
bool cyclic_bound_p13(std::uint64_t n);
bool cyclic_bound_small_prime_square(std::uint64_t p, unsigned a);
bool cyclic_bound_small_pi_square(std::uint64_t m);
bool cyclic_bound_superadditive(std::uint64_t p, unsigned a, unsigned b);

// Dispatching form; args arity is General/P13/SmallPiSquare: {n},
// SmallPrimeSquare: {p, a}, Superadditive: {p, a, b}.
bool check_cyclic_bound(CyclicBound kind, std::span<const std::uint64_t> args);

}  // namespace ordersum
