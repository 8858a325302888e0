#include <doctest.h>

#include "maxips/exactmath.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace maxips;

namespace {

// Plain integer Newton iteration, independent of GMP's sqrt.
Int newton_isqrt(const Int& n) {
  if (n < 2) return n;
  Int x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

Int random_int(std::mt19937_64& rng, int bits) {
  Int r = 0;
  for (int b = 0; b < bits; b += 32) r = (r << 32) + Int(static_cast<unsigned long>(rng() & 0xffffffffULL));
  return r;
}

bool squarefree_by_trial(const Int& n) {
  for (Int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("isqrt on small and huge values") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(24) == 4);
  CHECK(isqrt(25) == 5);
  CHECK(isqrt(Int("1000000000000000000000000000000")) == Int("1000000000000000"));
  CHECK_THROWS_AS(isqrt(-1), DomainError);
}

TEST_CASE("isqrt agrees with a Newton oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Int n = random_int(rng, 32 * (1 + i % 8));
    const Int r = isqrt(n);
    CHECK(r == newton_isqrt(n));
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  for (std::uint64_t n = 0; n < 100000; ++n) {
    const std::uint64_t r = isqrt_u64(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  const std::uint64_t top = ~std::uint64_t{0};
  CHECK(isqrt_u64(top) == 4294967295ULL);
}

TEST_CASE("perfect squares") {
  CHECK(is_perfect_square(576));
  CHECK_FALSE(is_perfect_square(63));
  CHECK_FALSE(is_perfect_square(360));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK(perfect_square_root(Int("152415787532388367501905199875019052100")) ==
        Int("12345678901234567890"));
  CHECK_FALSE(perfect_square_root(Int("152415787532388367501905199875019052101")));
  CHECK(rational_square_root(Rat(9, 16)) == Rat(3, 4));
  CHECK_FALSE(rational_square_root(Rat(2, 9)));
  CHECK_FALSE(rational_square_root(Rat(-1, 4)));
}

TEST_CASE("square-free part") {
  CHECK(squarefree_part(576) == 1);
  CHECK(squarefree_part(63) == 7);
  CHECK(squarefree_part(12) == 3);
  CHECK(squarefree_part(-12) == 3);
  CHECK_THROWS_AS(squarefree_part(0), DomainError);
  for (long n = 1; n <= 3000; ++n) {
    const Int k = squarefree_part(n);
    REQUIRE(n % k == 0);
    REQUIRE(is_perfect_square(Int(n) / k));
    REQUIRE(squarefree_by_trial(k));
  }
}

TEST_CASE("factorization and divisors") {
  using F = std::vector<std::pair<Int, unsigned>>;
  CHECK(factorize(672) == F{{2, 5}, {3, 1}, {7, 1}});
  CHECK(factorize(451584) == F{{2, 10}, {3, 2}, {7, 2}});
  CHECK(factorize(1).empty());
  CHECK_THROWS_AS(factorize(0), DomainError);
  const Int semiprime = Int(1000003) * Int(1000033);
  CHECK(factorize(semiprime) == F{{1000003, 1}, {1000033, 1}});
  const Int big = Int("1000000000000000003") * Int("1000000000000000003") * 12;
  CHECK(factorize(big) == F{{2, 2}, {3, 1}, {Int("1000000000000000003"), 2}});

  CHECK(divisors(900).size() == 27);
  CHECK(divisors(65) == std::vector<Int>{1, 5, 13, 65});
  CHECK(divisors(1) == std::vector<Int>{1});
  for (long n = 1; n <= 2000; ++n) {
    Int prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      REQUIRE(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    REQUIRE(prod == n);
    std::vector<Int> ds;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) ds.push_back(d);
    REQUIRE(divisors(n) == ds);
    REQUIRE(tau(n) == Int(static_cast<unsigned long>(ds.size())));
  }
}

TEST_CASE("sum of two squares examples") {
  auto reps = sum_of_two_squares(25);
  CHECK(reps.size() == 12);
  CHECK(reps.front() == std::pair<Int, Int>{0, -5});
  CHECK(sum_of_two_squares(2).size() == 4);
  CHECK(sum_of_two_squares(3).empty());
  CHECK(sum_of_two_squares(0).size() == 1);
  CHECK(sum_of_two_squares(-5).empty());
  const auto r = sum_of_two_squares(4225);
  CHECK(std::find(r.begin(), r.end(), std::pair<Int, Int>{16, 63}) != r.end());
  CHECK(r.size() == 36);
}

TEST_CASE("sum of two squares matches a direct count for n <= 200000") {
  const long N = 200000;
  std::vector<int> count(N + 1, 0);
  for (long x = -448; x <= 448; ++x)
    for (long y = -448; y <= 448; ++y)
      if (x * x + y * y <= N) ++count[x * x + y * y];
  for (long n = 0; n <= N; ++n) {
    const auto reps = sum_of_two_squares(n);
    REQUIRE(static_cast<int>(reps.size()) == count[n]);
    for (const auto& [x, y] : reps) REQUIRE(x * x + y * y == n);
  }
}

TEST_CASE("Gaussian path equals brute force") {
  for (long n = 1; n <= 20000; ++n)
    REQUIRE(sum_of_two_squares_gaussian(n) == sum_of_two_squares_brute(n));
  for (const char* s : {"1221025", "4225", "31250", "4060225", "1185665625"})
    CHECK(sum_of_two_squares_gaussian(Int(s)) == sum_of_two_squares_brute(Int(s)));
  // Above the brute-force limit the dispatcher uses the Gaussian path.
  const Int big = Int(5 * 5 * 13 * 13) * Int(17 * 29) * 1009 * 1013;
  const auto reps = sum_of_two_squares(big);
  CHECK(!reps.empty());
  for (const auto& [x, y] : reps) CHECK(x * x + y * y == big);
}

TEST_CASE("Gaussian prime factors") {
  CHECK(gaussian_prime_factor(5) == GaussInt{2, 1});
  CHECK(gaussian_prime_factor(13) == GaussInt{3, 2});
  CHECK(gaussian_prime_factor(17) == GaussInt{4, 1});
  CHECK_THROWS_AS(gaussian_prime_factor(7), DomainError);
  CHECK_THROWS_AS(gaussian_prime_factor(21), DomainError);
  CHECK_THROWS_AS(gaussian_prime_factor(4), DomainError);
  for (long p = 5; p < 5000; p += 4)
    if (is_prime(p)) {
      const GaussInt w = gaussian_prime_factor(p);
      REQUIRE(w.norm() == p);
      REQUIRE(w.re >= w.im);
    }
}

TEST_CASE("canonical lattice order") {
  // (0,0) < (0,-1) < (0,1) < (-1,0) < (1,0)
  const std::vector<std::pair<long, long>> chain{{0, 0}, {0, -1}, {0, 1}, {-1, 0},
                                                 {-1, 5}, {1, -2}, {1, 2}, {-3, 0}};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& [x1, y1] = chain[i];
    const auto& [x2, y2] = chain[i + 1];
    CHECK(lattice_order_less(x1, y1, x2, y2));
    CHECK_FALSE(lattice_order_less(x2, y2, x1, y1));
  }
  CHECK_FALSE(lattice_order_less(3, 4, 3, 4));
}

TEST_CASE("integer parsing") {
  CHECK(parse_int("42") == 42);
  CHECK(parse_int("-17") == -17);
  CHECK(parse_int("+5") == 5);
  CHECK(to_string(Int(-9)) == "-9");
  for (const char* bad : {"", "-", "1.5", "abc", "12x", " 3"})
    CHECK_THROWS_AS(parse_int(bad), DomainError);
}
