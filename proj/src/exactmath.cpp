#include "maxips/exactmath.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maxips {

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt operator+(const GaussInt& a, const GaussInt& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussInt operator-(const GaussInt& a, const GaussInt& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussInt gauss_pow(GaussInt base, unsigned e) {
  GaussInt r{1, 0};
  while (e) {
    if (e & 1U) r = r * base;
    base = base * base;
    e >>= 1U;
  }
  return r;
}

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  // Integer Newton from an upper bound; converges monotonically downwards.
  std::uint64_t x = std::uint64_t{1} << ((64 - __builtin_clzll(n) + 1) / 2);
  while (true) {
    std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool is_perfect_square(const Int& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> perfect_square_root(const Int& n) {
  if (!is_perfect_square(n)) return std::nullopt;
  return isqrt(n);
}

std::optional<Rat> rational_square_root(const Rat& q) {
  auto num = perfect_square_root(q.get_num());
  if (!num) return std::nullopt;
  auto den = perfect_square_root(q.get_den());
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Int& v) { return Int((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Rho is hopeless on prime powers; split those off by root extraction.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
      Int r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Int, unsigned> sub;
        factor_rec(r, sub);
        for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  Int d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
  if (n < 1) throw DomainError("factorize needs n >= 1");
  std::map<Int, unsigned> found;
  Int m = n;
  const unsigned long kTrialLimit = 1000000;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) found[Int(p)] += e;
  }
  factor_rec(m, found);
  return {found.begin(), found.end()};
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw DomainError("squarefree_part of zero");
  Int k = 1;
  for (const auto& [p, e] : factorize(abs(n)))
    if (e % 2) k *= p;
  return k;
}

std::vector<Int> divisors(const Int& n) {
  if (n < 1) throw DomainError("divisors needs n >= 1");
  std::vector<Int> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Int tau(const Int& n) {
  Int t = 1;
  for (const auto& [p, e] : factorize(n)) t *= e + 1;
  return t;
}

bool lattice_order_less(const Int& x1, const Int& y1, const Int& x2,
                        const Int& y2) {
  int c = mpz_cmpabs(x1.get_mpz_t(), x2.get_mpz_t());
  if (c != 0) return c < 0;
  bool p1 = sgn(x1) > 0, p2 = sgn(x2) > 0;
  if (p1 != p2) return !p1;
  c = mpz_cmpabs(y1.get_mpz_t(), y2.get_mpz_t());
  if (c != 0) return c < 0;
  return sgn(y1) <= 0 && sgn(y2) > 0;
}

namespace {

using PairList = std::vector<std::pair<Int, Int>>;

void sort_pairs(PairList& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return lattice_order_less(a.first, a.second, b.first, b.second);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Expands first-octant representatives 0 <= x <= y into all sign/order variants.
void add_symmetric(PairList& out, const Int& x, const Int& y) {
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      out.emplace_back(sx * x, sy * y);
      out.emplace_back(sx * y, sy * x);
    }
}

}  // namespace

std::vector<std::pair<Int, Int>> sum_of_two_squares_brute(const Int& n) {
  if (sgn(n) < 0) return {};
  PairList out;
  if (n == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  if (n.fits_ulong_p() && n < Int("4000000000000000000")) {
    const std::uint64_t nn = n.get_ui();
    // Two-pointer walk over x <= y.
    std::uint64_t x = 0, y = isqrt_u64(nn);
    while (x <= y) {
      const std::uint64_t s = x * x + y * y;
      if (s == nn) {
        add_symmetric(out, Int(static_cast<unsigned long>(x)),
                      Int(static_cast<unsigned long>(y)));
        ++x;
      } else if (s < nn) {
        ++x;
      } else {
        --y;
      }
    }
  } else {
    for (Int x = 0; 2 * x * x <= n; ++x) {
      Int rest = n - x * x;
      if (auto y = perfect_square_root(rest)) add_symmetric(out, x, *y);
    }
  }
  sort_pairs(out);
  return out;
}

std::vector<std::pair<Int, Int>> sum_of_two_squares_gaussian(const Int& n) {
  if (sgn(n) < 0) return {};
  PairList out;
  if (n == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  std::vector<GaussInt> acc{{1, 0}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<GaussInt> opts;
    if (p == 2) {
      opts.push_back(gauss_pow({1, 1}, e));
    } else if (p % 4 == 3) {
      if (e % 2) return {};
      Int pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
      opts.push_back({pk, 0});
    } else {
      const GaussInt w = gaussian_prime_factor(p);
      for (unsigned j = 0; j <= e; ++j)
        opts.push_back(gauss_pow(w, j) * gauss_pow(w.conj(), e - j));
    }
    std::vector<GaussInt> next;
    for (const auto& a : acc)
      for (const auto& o : opts) next.push_back(a * o);
    acc = std::move(next);
  }
  for (const auto& z : acc) {
    GaussInt u = z;
    for (int k = 0; k < 4; ++k) {
      out.emplace_back(u.re, u.im);
      out.emplace_back(u.im, u.re);
      u = u * GaussInt{0, 1};
    }
  }
  sort_pairs(out);
  return out;
}

std::vector<std::pair<Int, Int>> sum_of_two_squares(const Int& n) {
  if (n < Int(static_cast<unsigned long>(kSumOfSquaresBruteLimit)))
    return sum_of_two_squares_brute(n);
  return sum_of_two_squares_gaussian(n);
}

namespace {

Int round_div(const Int& a, const Int& b) {
  // Nearest integer to a/b for b > 0.
  Int q;
  Int num = 2 * a + b;
  Int den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (b.re != 0 || b.im != 0) {
    const Int nb = b.norm();
    const GaussInt t = a * b.conj();
    const GaussInt q{round_div(t.re, nb), round_div(t.im, nb)};
    GaussInt r = a - q * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

GaussInt gaussian_prime_factor(const Int& p) {
  if (p % 4 != 1 || !is_prime(p))
    throw DomainError("gaussian_prime_factor needs a prime p = 1 mod 4");
  const Int e = (p - 1) / 4;
  Int r;
  for (unsigned long x = 2;; ++x) {
    Int base(x);
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((r * r + 1) % p == 0) break;
  }
  const GaussInt g = gauss_gcd({p, 0}, {r, 1});
  Int a = abs(g.re), b = abs(g.im);
  if (a < b) swap(a, b);
  return {a, b};
}

std::string to_string(const Int& n) { return n.get_str(); }

Int parse_int(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = s.size() > start;
  for (std::size_t i = start; i < s.size() && ok; ++i)
    ok = s[i] >= '0' && s[i] <= '9';
  if (!ok) throw DomainError("malformed integer '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace maxips
