#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ordersum/errors.hpp"
#include "ordersum/exactnum.hpp"
#include "oracles.hpp"

using namespace ordersum;

TEST_CASE("factorize basics") {
  CHECK(factorize(1).pairs.empty());
  CHECK(factorize(60).pairs == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factorize(1617).pairs == std::vector<PrimePower>{{3, 1}, {7, 2}, {11, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK(factorize(2).largest_prime() == 2);
  CHECK_THROWS_AS(factorize(1).largest_prime(), DomainError);
}

TEST_CASE("factorize invariants over a range") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    auto f = factorize(n);
    CHECK(f.value() == n);
    std::uint64_t prev = 0;
    for (const auto& pp : f.pairs) {
      CHECK(pp.prime > prev);
      CHECK(pp.exponent >= 1);
      CHECK(is_prime(pp.prime));
      prev = pp.prime;
    }
  }
}

TEST_CASE("factorize large inputs") {
  auto f = factorize(std::uint64_t{1} << 62);
  CHECK(f.pairs == std::vector<PrimePower>{{2, 62}});
  // Prime cofactor past the trial limit is certified, not guessed.
  CHECK(factorize(std::uint64_t{1000000007} * 4).pairs ==
        std::vector<PrimePower>{{2, 2}, {1000000007, 1}});
}

TEST_CASE("is_prime matches trial division") {
  auto naive = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(is_prime(n) == naive(n));
  CHECK(is_prime(2147483647));          // 2^31 - 1
  CHECK_FALSE(is_prime(4294967297ull)); // 2^32 + 1 = 641 * 6700417
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) CHECK(euler_phi(p) == p - 1);
  for (std::uint64_t n = 1; n <= 500; ++n)
    CHECK(euler_phi(n) == oracles::phi_bruteforce(n));
  CHECK_THROWS_AS(euler_phi(0), DomainError);
}

TEST_CASE("is_fermat_prime") {
  CHECK(is_fermat_prime(3));
  CHECK(is_fermat_prime(5));
  CHECK(is_fermat_prime(17));
  CHECK(is_fermat_prime(257));
  CHECK(is_fermat_prime(65537));
  CHECK_FALSE(is_fermat_prime(2));
  CHECK_FALSE(is_fermat_prime(7));
  CHECK_FALSE(is_fermat_prime(13));
  CHECK_FALSE(is_fermat_prime(4294967297ull));  // composite Fermat number
  CHECK_FALSE(is_fermat_prime(11));             // 10 = 2 * 5 not a 2-power
}

TEST_CASE("psi of cyclic prime powers") {
  CHECK(psi_cyclic_prime_power(2, 2) == 11);  // 1 + 2 + 4 + 4 over Z/4
  CHECK(psi_cyclic_prime_power(5, 1) == 21);
  CHECK(psi_cyclic_prime_power(3, 1) == 7);
  CHECK_THROWS_AS(psi_cyclic_prime_power(6, 1), DomainError);
  CHECK_THROWS_AS(psi_cyclic_prime_power(5, 0), DomainError);
}

TEST_CASE("psi_cyclic anchors") {
  CHECK(psi_cyclic(1) == 1);
  CHECK(psi_cyclic(60) == 1617);
  CHECK(psi_cyclic(120) == 6321);
  CHECK(psi_cyclic(168) == 12943);
  CHECK(psi_cyclic(420) == 69531);
  CHECK_THROWS_AS(psi_cyclic(0), DomainError);
}

TEST_CASE("psi_cyclic equals the additive-order sum for all n <= 5000") {
  for (std::uint64_t n = 1; n <= 5000; ++n)
    CHECK(psi_cyclic(n) == oracles::psi_cyclic_bruteforce(n));
}

TEST_CASE("psi_cyclic is multiplicative on coprime parts") {
  for (std::uint64_t a = 1; a <= 120; ++a)
    for (std::uint64_t b = a; b <= 120; ++b)
      if (std::gcd(a, b) == 1)
        CHECK(psi_cyclic(a * b) == psi_cyclic(a) * psi_cyclic(b));
}

TEST_CASE("psi_cyclic is strictly super-multiplicative on equal primes") {
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned a = 1; a <= 5; ++a)
      for (unsigned b = 1; b <= 5; ++b)
        CHECK(cyclic_bound_superadditive(p, a, b));
  }
  CHECK(psi_cyclic_prime_power(2, 2) > psi_cyclic_prime_power(2, 1) *
                                           psi_cyclic_prime_power(2, 1));  // 11 > 9
}

TEST_CASE("general lower bound on psi(C_n)") {
  CHECK(cyclic_bound_general(12));  // 77 >= 72 exactly
  CHECK((BigInt(3) + 1) * psi_cyclic(12) == 4 * 77);
  for (std::uint64_t n = 2; n <= 5000; ++n) CHECK(cyclic_bound_general(n));
  CHECK_THROWS_AS(cyclic_bound_general(1), PreconditionError);
}

TEST_CASE("p >= 13 lower bound on psi(C_n)") {
  CHECK(cyclic_bound_p13(13));  // 157 >= 845845/16128
  for (std::uint64_t n = 2; n <= 5000; ++n)
    if (factorize(n).largest_prime() >= 13) CHECK(cyclic_bound_p13(n));
  CHECK_THROWS_AS(cyclic_bound_p13(12), PreconditionError);
  CHECK_THROWS_AS(cyclic_bound_p13(1), PreconditionError);
}

TEST_CASE("13/12 square bounds on {2,3,5}-numbers") {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned a = 1; a <= 5; ++a) CHECK(cyclic_bound_small_prime_square(p, a));
  CHECK_THROWS_AS(cyclic_bound_small_prime_square(7, 1), PreconditionError);
  CHECK_THROWS_AS(cyclic_bound_small_prime_square(2, 0), PreconditionError);

  for (std::uint64_t m = 2; m <= 5000; ++m) {
    bool small_pi = true;
    for (const auto& pp : factorize(m).pairs)
      if (pp.prime > 5) small_pi = false;
    if (small_pi) CHECK(cyclic_bound_small_pi_square(m));
  }
  CHECK_THROWS_AS(cyclic_bound_small_pi_square(7), PreconditionError);
  CHECK_THROWS_AS(cyclic_bound_small_pi_square(1), PreconditionError);
}

TEST_CASE("superadditive preconditions") {
  CHECK_THROWS_AS(cyclic_bound_superadditive(4, 1, 1), PreconditionError);
  CHECK_THROWS_AS(cyclic_bound_superadditive(2, 0, 1), PreconditionError);
}

TEST_CASE("check_cyclic_bound dispatcher") {
  const std::uint64_t n12[] = {12};
  const std::uint64_t n13[] = {13};
  const std::uint64_t ps[] = {2, 3};
  const std::uint64_t sup[] = {2, 1, 1};
  CHECK(check_cyclic_bound(CyclicBound::General, n12));
  CHECK(check_cyclic_bound(CyclicBound::P13, n13));
  CHECK(check_cyclic_bound(CyclicBound::SmallPrimeSquare, ps));
  CHECK(check_cyclic_bound(CyclicBound::SmallPiSquare, n12));
  CHECK(check_cyclic_bound(CyclicBound::Superadditive, sup));
  CHECK_THROWS_AS(check_cyclic_bound(CyclicBound::General, ps), PreconditionError);
}
