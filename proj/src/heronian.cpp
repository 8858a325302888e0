#include "maxips/heronian.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace maxips {

namespace {

bool heron_ok(const Int& a, const Int& b, const Int& c) {
  if (a >= b + c || b >= a + c || c >= a + b) return false;
  Int p = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
  auto s = perfect_square_root(p);
  return s && mpz_divisible_ui_p(s->get_mpz_t(), 4);
}

// Squares modulo 64, 63, 65 and 11 as bit tables.
struct SquareResidues {
  bool m64[64]{}, m63[63]{}, m65[65]{}, m11[11]{};
  SquareResidues() {
    for (unsigned i = 0; i < 64; ++i) m64[(i * i) % 64] = true;
    for (unsigned i = 0; i < 63; ++i) m63[(i * i) % 63] = true;
    for (unsigned i = 0; i < 65; ++i) m65[(i * i) % 65] = true;
    for (unsigned i = 0; i < 11; ++i) m11[(i * i) % 11] = true;
  }
};

const SquareResidues kSq;

bool heron_ok_u64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const std::uint64_t p = (a + b + c) * (a + b - c) * (a - b + c) * (b + c - a);
  if (p % 16) return false;
  if (!kSq.m64[p % 64] || !kSq.m63[p % 63] || !kSq.m65[p % 65] ||
      !kSq.m11[p % 11])
    return false;
  const std::uint64_t s = isqrt_u64(p);
  return s * s == p && s % 4 == 0;
}

}  // namespace

bool is_heronian(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1) return false;
  return heron_ok(a, b, c);
}

HeronTriangle HeronTriangle::make(Int x, Int y, Int z) {
  std::array<Int, 3> s{std::move(x), std::move(y), std::move(z)};
  std::sort(s.begin(), s.end(), [](const Int& p, const Int& q) { return p > q; });
  if (!is_heronian(s[0], s[1], s[2]))
    throw DomainError("(" + s[0].get_str() + "," + s[1].get_str() + "," +
                      s[2].get_str() + ") is not a Heronian triangle");
  return {s[0], s[1], s[2]};
}

std::vector<HeronTriangle> heronian_triangles(unsigned long d) {
  std::vector<HeronTriangle> out;
  if (d < 1) return out;
  if (d < 16384) {
    const std::uint64_t a = d;
    for (std::uint64_t b = (a + 2) / 2; b <= a; ++b)
      for (std::uint64_t c = a + 1 - b; c <= b; ++c)
        if (heron_ok_u64(a, b, c))
          out.push_back({Int(d), Int(static_cast<unsigned long>(b)),
                         Int(static_cast<unsigned long>(c))});
    return out;
  }
  return heronian_triangles(Int(d));
}

std::vector<HeronTriangle> heronian_triangles(const Int& d) {
  if (d < 1) return {};
  if (d < 16384) return heronian_triangles(d.get_ui());
  std::vector<HeronTriangle> out;
  Int b;
  mpz_fdiv_q_ui(b.get_mpz_t(), Int(d + 2).get_mpz_t(), 2);
  for (; b <= d; ++b)
    for (Int c = d + 1 - b; c <= b; ++c)
      if (heron_ok(d, b, c)) out.push_back({d, b, c});
  return out;
}

bool is_right_triangle(const HeronTriangle& t) {
  return t.a * t.a == t.b * t.b + t.c * t.c;
}

std::vector<EmbeddedTriangle> embed_sides(const Int& a, const Int& b,
                                          const Int& c) {
  std::vector<EmbeddedTriangle> out;
  const Int a2 = a * a;
  Int twice_m = a2 + c * c - b * b;
  if (!mpz_even_p(twice_m.get_mpz_t())) return out;
  const Int m = twice_m / 2;
  auto t = perfect_square_root(a2 * c * c - m * m);
  if (!t) return out;
  if (*t == 0) throw DomainError("degenerate triangle has no embedding");
  for (const auto& [xc, yc] : sum_of_two_squares(a2)) {
    for (int sign : {1, -1}) {
      const Int ts = sign * *t;
      Int nx = m * xc - ts * yc, ny = m * yc + ts * xc;
      if (!mpz_divisible_p(nx.get_mpz_t(), a2.get_mpz_t()) ||
          !mpz_divisible_p(ny.get_mpz_t(), a2.get_mpz_t()))
        continue;
      out.push_back({{nx / a2, ny / a2}, {0, 0}, {xc, yc}});
    }
  }
  return out;
}

std::vector<EmbeddedTriangle> embeddings(const HeronTriangle& t, bool dedup) {
  auto all = embed_sides(t.a, t.b, t.c);
  if (!dedup) return all;
  std::vector<EmbeddedTriangle> out;
  std::set<std::string> seen;
  for (auto& e : all)
    if (seen.insert(normal_form(e.points()).serialize()).second)
      out.push_back(std::move(e));
  return out;
}

}  // namespace maxips
