#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxips {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct GaussInt {
  Int re;
  Int im;

  Int norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt gauss_pow(GaussInt base, unsigned e);

// floor(sqrt(n)); throws DomainError for n < 0.
Int isqrt(const Int& n);
std::uint64_t isqrt_u64(std::uint64_t n);

bool is_perfect_square(const Int& n);
// Root of n when n is a perfect square.
std::optional<Int> perfect_square_root(const Int& n);
// Same for a rational: both reduced numerator and denominator must be squares.
std::optional<Rat> rational_square_root(const Rat& q);

Int squarefree_part(const Int& n);

bool is_prime(const Int& n);
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);
std::vector<Int> divisors(const Int& n);
// Number of positive divisors.
Int tau(const Int& n);

// Integer pairs (x, y) with x^2 + y^2 = n, sorted by the canonical point order.
std::vector<std::pair<Int, Int>> sum_of_two_squares(const Int& n);
std::vector<std::pair<Int, Int>> sum_of_two_squares_brute(const Int& n);
std::vector<std::pair<Int, Int>> sum_of_two_squares_gaussian(const Int& n);
// Inputs below this value use the direct scan.
inline constexpr std::uint64_t kSumOfSquaresBruteLimit = 100000000ULL;

GaussInt gaussian_prime_factor(const Int& p);

// Canonical point order on Z^2: key (|x|, x>0, |y|, y>0), false before true.
bool lattice_order_less(const Int& x1, const Int& y1, const Int& x2,
                        const Int& y2);

std::string to_string(const Int& n);
Int parse_int(const std::string& s);

}  // namespace maxips
