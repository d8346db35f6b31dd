#include "ordersum/exactnum.hpp"

#include <algorithm>
#include <numeric>

#include "ordersum/errors.hpp"

namespace ordersum {

namespace {

constexpr std::uint64_t kTrialLimit = std::uint64_t{1} << 31;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t u64_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization f;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.pairs.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::uint64_t d = 5; d <= kTrialLimit && d * d <= n; d += 6) {
    take(d);
    take(d + 2);
  }
  if (n > 1) {
    if (!is_prime(n))
      throw DomainError("factorize: cofactor " + std::to_string(n) +
                        " is composite beyond the 2^31 trial-division limit");
    f.pairs.push_back({n, 1});
  }
  return f;
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& pp : pairs) n *= u64_pow(pp.prime, pp.exponent);
  return n;
}

std::uint64_t Factorization::largest_prime() const {
  if (pairs.empty()) throw DomainError("largest_prime: 1 has no prime factors");
  return pairs.back().prime;
}

bool Factorization::has_prime(std::uint64_t p) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const PrimePower& pp) { return pp.prime == p; });
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  std::uint64_t phi = 1;
  for (const auto& pp : factorize(n).pairs)
    phi *= u64_pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

bool is_fermat_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) return false;
  std::uint64_t q = p - 1;
  if ((q & (q - 1)) != 0) return false;  // not a power of two
  unsigned e = static_cast<unsigned>(std::countr_zero(q));
  return (e & (e - 1)) == 0;  // exponent itself a power of two
}

BigInt psi_cyclic_prime_power(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw DomainError("psi_cyclic_prime_power: p not prime");
  if (r == 0) throw DomainError("psi_cyclic_prime_power: r must be >= 1");
  BigInt num = int_pow(p, 2 * r + 1) + 1;
  BigInt den = BigInt(p) + 1;
  BigInt q, rem;
  divide_qr(num, den, q, rem);
  if (rem != 0) throw Error("psi_cyclic_prime_power: non-integral result");
  return q;
}

BigInt psi_cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("psi_cyclic: n must be positive");
  BigInt psi = 1;
  for (const auto& pp : factorize(n).pairs)
    psi *= psi_cyclic_prime_power(pp.prime, pp.exponent);
  return psi;
}

bool cyclic_bound_general(std::uint64_t n) {
  if (n < 2) throw PreconditionError("cyclic_bound_general: requires n >= 2");
  std::uint64_t p = factorize(n).largest_prime();
  BigInt n2 = BigInt(n) * n;
  return (BigInt(p) + 1) * psi_cyclic(n) >= 2 * n2;
}

bool cyclic_bound_p13(std::uint64_t n) {
  if (n < 2) throw PreconditionError("cyclic_bound_p13: requires n >= 2");
  std::uint64_t p = factorize(n).largest_prime();
  if (p < 13)
    throw PreconditionError("cyclic_bound_p13: largest prime of n must be >= 13");
  BigInt n2 = BigInt(n) * n;
  return BigInt(1152) * (BigInt(p) + 1) * psi_cyclic(n) >= 5005 * n2;
}

bool cyclic_bound_small_prime_square(std::uint64_t p, unsigned a) {
  if (p != 2 && p != 3 && p != 5)
    throw PreconditionError("cyclic_bound_small_prime_square: p must be 2, 3 or 5");
  if (a == 0)
    throw PreconditionError("cyclic_bound_small_prime_square: a must be > 0");
  return 12 * int_pow(p, 2 * a) > 13 * psi_cyclic_prime_power(p, a);
}

bool cyclic_bound_small_pi_square(std::uint64_t m) {
  if (m < 2) throw PreconditionError("cyclic_bound_small_pi_square: requires m >= 2");
  for (const auto& pp : factorize(m).pairs)
    if (pp.prime != 2 && pp.prime != 3 && pp.prime != 5)
      throw PreconditionError(
          "cyclic_bound_small_pi_square: prime divisors of m must lie in {2,3,5}");
  return 12 * BigInt(m) * m > 13 * psi_cyclic(m);
}

bool cyclic_bound_superadditive(std::uint64_t p, unsigned a, unsigned b) {
  if (!is_prime(p))
    throw PreconditionError("cyclic_bound_superadditive: p must be prime");
  if (a == 0 || b == 0)
    throw PreconditionError("cyclic_bound_superadditive: a and b must be > 0");
  return psi_cyclic_prime_power(p, a + b) >
         psi_cyclic_prime_power(p, a) * psi_cyclic_prime_power(p, b);
}

bool check_cyclic_bound(CyclicBound kind, std::span<const std::uint64_t> args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw PreconditionError("check_cyclic_bound: wrong argument count");
  };
  switch (kind) {
    case CyclicBound::General:
      need(1);
      return cyclic_bound_general(args[0]);
    case CyclicBound::P13:
      need(1);
      return cyclic_bound_p13(args[0]);
    case CyclicBound::SmallPrimeSquare:
      need(2);
      return cyclic_bound_small_prime_square(args[0],
                                             static_cast<unsigned>(args[1]));
    case CyclicBound::SmallPiSquare:
      need(1);
      return cyclic_bound_small_pi_square(args[0]);
    case CyclicBound::Superadditive:
      need(3);
      return cyclic_bound_superadditive(args[0], static_cast<unsigned>(args[1]),
                                        static_cast<unsigned>(args[2]));
  }
  throw PreconditionError("check_cyclic_bound: unknown kind");
}

}  // namespace ordersum
