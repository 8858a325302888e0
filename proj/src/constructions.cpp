#include "maxips/constructions.hpp"

#include "maxips/cliques.hpp"
#include "maxips/heronian.hpp"

#include <algorithm>
#include <set>

namespace maxips {

PythagoreanPair PythagoreanPair::make(const Int& a, const Int& b) {
  if (a < 1 || b < 1) throw DomainError("Pythagorean pair needs a, b >= 1");
  auto c = perfect_square_root(a * a + b * b);
  if (!c)
    throw DomainError("(" + a.get_str() + "," + b.get_str() +
                      ") is not a Pythagorean pair");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {a, b, *c, g == 1};
}

PointSet rectangle(const PythagoreanPair& p) {
  return PointSet(std::vector<GridPoint>{{0, 0}, {p.a, 0}, {0, p.b}, {p.a, p.b}});
}

PointSet rhombus(const PythagoreanPair& p) {
  return PointSet(
      std::vector<GridPoint>{{0, 0}, {p.a, 0}, {-p.a, 0}, {0, p.b}, {0, -p.b}});
}

PointSet crab(const Int& a, const std::vector<Int>& arms) {
  if (arms.empty()) throw DomainError("crab needs at least one arm");
  std::vector<GridPoint> v{{0, 0}, {0, a}, {0, -a}};
  for (const auto& b : arms) {
    PythagoreanPair::make(a, b);
    v.push_back({b, 0});
    v.push_back({-b, 0});
  }
  return PointSet(std::move(v));
}

namespace {

Int heron_product(const Int& a, const Int& b, const Int& c) {
  Int p = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
  if (sgn(p) <= 0 || a < 1 || b < 1 || c < 1)
    throw DomainError("degenerate triangle");
  return p;
}

}  // namespace

Int decomposition_number(const Int& a, const Int& b, const Int& c) {
  const Int p = heron_product(a, b, c);
  const Int g = gcd(b * b - c * c + a * a, 2 * a);
  return p / (g * g);
}

Int decomposition_g(const Int& a, const Int& b, const Int& c) {
  heron_product(a, b, c);
  return 2 * a / gcd(b * b - c * c + a * a, 2 * a);
}

std::vector<Int> crab_arms(const Int& h) {
  if (h < 1) throw DomainError("h must be positive");
  const Int D = h * h;
  std::vector<Int> arms;
  for (const auto& f2 : divisors(D)) {
    const Int f1 = D / f2;
    if (f1 <= f2) break;
    if (mpz_even_p(f1.get_mpz_t()) != mpz_even_p(f2.get_mpz_t())) continue;
    arms.push_back((f1 - f2) / 2);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

PointSet decompose_crab(const Int& h) {
  auto arms = crab_arms(h);
  if (arms.empty())
    throw DomainError("no crab for h=" + h.get_str() + ": no valid factor pair");
  return crab(h, arms);
}

Int crab_order(const Int& h) {
  if (h < 1) throw DomainError("h must be positive");
  Int prod = 1;
  for (const auto& [p, e] : factorize(h)) {
    const unsigned ee = (p == 2) ? (e > 0 ? e - 1 : 0) : e;
    prod *= 2 * ee + 1;
  }
  return (prod - 1) / 2;
}

namespace {

std::optional<Int> rat_distance(const RatPoint& p, const RatPoint& q) {
  const Rat d2 = dist2(p, q);
  if (d2.get_den() != 1) return std::nullopt;
  return perfect_square_root(d2.get_num());
}

}  // namespace

std::optional<CanonicalForm> realize_on_grid(const std::vector<RatPoint>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) throw DomainError("realization needs at least three points");
  // Anchor: non-collinear triple with integral sides and smallest longest side.
  std::optional<Int> best;
  std::size_t i0 = 0, i1 = 0, i2 = 0;
  Int s01, s02, s12;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto dij = rat_distance(pts[i], pts[j]);
      if (!dij) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear(pts[i], pts[j], pts[k])) continue;
        auto dik = rat_distance(pts[i], pts[k]);
        auto djk = rat_distance(pts[j], pts[k]);
        if (!dik || !djk) continue;
        const Int m = std::max({*dij, *dik, *djk});
        if (!best || m < *best) {
          best = m;
          i0 = i, i1 = j, i2 = k;
          s01 = *dij, s02 = *dik, s12 = *djk;
        }
      }
    }
  if (!best) throw DomainError("no non-collinear integral anchor triple");

  const RatPoint& p0 = pts[i0];
  const Rat s1x = pts[i1].x - p0.x, s1y = pts[i1].y - p0.y;
  const Rat s2x = pts[i2].x - p0.x, s2y = pts[i2].y - p0.y;
  const Rat det = s1x * s2y - s2x * s1y;
  // Inverse of [[s1x, s2x], [s1y, s2y]].
  const Rat i11 = s2y / det, i12 = -s2x / det, i21 = -s1y / det, i22 = s1x / det;

  std::optional<CanonicalForm> result;
  // embed_sides places p1 at the origin, p2 at distance |p1p2|, p0 elsewhere.
  for (const auto& e : embed_sides(s12, s02, s01)) {
    const Rat t1x = Rat(e.B.x - e.A.x), t1y = Rat(e.B.y - e.A.y);
    const Rat t2x = Rat(e.C.x - e.A.x), t2y = Rat(e.C.y - e.A.y);
    const Rat m11 = t1x * i11 + t2x * i21, m12 = t1x * i12 + t2x * i22;
    const Rat m21 = t1y * i11 + t2y * i21, m22 = t1y * i12 + t2y * i22;
    std::vector<GridPoint> img;
    img.reserve(n);
    bool ok = true;
    for (const auto& p : pts) {
      const Rat dx = p.x - p0.x, dy = p.y - p0.y;
      const Rat x = m11 * dx + m12 * dy + e.A.x;
      const Rat y = m21 * dx + m22 * dy + e.A.y;
      if (x.get_den() != 1 || y.get_den() != 1) {
        ok = false;
        break;
      }
      img.push_back({x.get_num(), y.get_num()});
    }
    if (!ok) continue;
    CanonicalForm f = normal_form(PointSet(std::move(img)));
    if (!result || f < *result) result = std::move(f);
  }
  return result;
}

SemiCrab semi_crab_details(const Int& gh, const Int& g, std::optional<Int> m) {
  if (g < 2) throw DomainError("semi-crab needs g >= 2");
  if (gh < 1) throw DomainError("semi-crab needs gh >= 1");
  if (mpz_divisible_p(gh.get_mpz_t(), g.get_mpz_t()))
    throw DomainError("height gh/g is integral; use decompose_crab");
  SemiCrab s;
  s.gh = gh;
  s.g = g;
  const Int D = gh * gh;
  for (const auto& f2 : divisors(D)) {
    const Int f1 = D / f2;
    if (f1 <= f2) break;
    if (mpz_even_p(f1.get_mpz_t()) != mpz_even_p(f2.get_mpz_t())) continue;
    const Int half_sum = (f1 + f2) / 2;
    if (!mpz_divisible_p(half_sum.get_mpz_t(), g.get_mpz_t())) continue;
    s.factor_pairs.emplace_back(f1, f2);
  }
  std::sort(s.factor_pairs.begin(), s.factor_pairs.end());
  for (const auto& [f1, f2] : s.factor_pairs) {
    s.b_list.push_back((f1 + f2) / 2 / g);
    s.gc_list.push_back((f1 - f2) / 2);
  }
  if (s.factor_pairs.empty())
    throw DomainError("no factor pair of (gh)^2 meets the semi-crab conditions");

  auto residue = [&](const Int& x) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
  };
  auto count_for = [&](const Int& mm) {
    std::size_t c = 0;
    const Int lm = residue(mm), rm = residue(-mm);
    for (const auto& gc : s.gc_list) {
      const Int r = residue(gc);
      if (r == lm) ++c;
      if (r == rm) ++c;
    }
    return c;
  };
  if (m) {
    if (*m < 1 || *m >= g) throw DomainError("residue m must lie in [1, g-1]");
    s.m = *m;
  } else {
    std::size_t best = 0;
    s.m = 1;
    for (Int mm = 1; mm < g; ++mm) {
      const std::size_t c = count_for(mm);
      if (c > best) {
        best = c;
        s.m = mm;
      }
    }
  }
  s.rational_points.push_back({Rat(0), Rat(gh, g)});
  s.rational_points.back().y.canonicalize();
  const Int lm = residue(s.m), rm = residue(-s.m);
  for (const auto& gc : s.gc_list) {
    const Int r = residue(gc);
    if (r == lm) {
      Rat x(-gc, g);
      x.canonicalize();
      s.rational_points.push_back({x, Rat(0)});
    }
    if (r == rm) {
      Rat x(gc, g);
      x.canonicalize();
      s.rational_points.push_back({x, Rat(0)});
    }
  }
  if (s.rational_points.size() < 3)
    throw DomainError("semi-crab with residue " + s.m.get_str() +
                      " has fewer than two base points");
  s.realized = realize_on_grid(s.rational_points);
  return s;
}

PointSet semi_crab(const Int& gh, const Int& g, std::optional<Int> m) {
  SemiCrab s = semi_crab_details(gh, g, std::move(m));
  if (!s.realized)
    throw RealizationError("semi-crab has no integral embedding",
                           s.rational_points);
  return s.realized->as_set();
}

namespace {

void check_circle_radius(const Int& R) {
  if (R < 2) throw DomainError("circle radius must be at least 2");
  for (const auto& [p, e] : factorize(R))
    if (p % 4 != 1)
      throw DomainError("prime factor " + p.get_str() + " of R is not 1 mod 4");
}

}  // namespace

std::vector<GaussInt> circle_etas(const Int& R) {
  check_circle_radius(R);
  const auto fac = factorize(R);
  std::vector<GaussInt> omegas;
  for (const auto& [p, e] : fac) omegas.push_back(gaussian_prime_factor(p));
  std::vector<GaussInt> etas;
  for (const auto& div : divisors(R)) {
    GaussInt eta{1, 0};
    for (std::size_t j = 0; j < fac.size(); ++j) {
      unsigned u = 0;
      Int rest = div;
      while (mpz_divisible_p(rest.get_mpz_t(), fac[j].first.get_mpz_t())) {
        rest /= fac[j].first;
        ++u;
      }
      const unsigned v = fac[j].second;
      eta = eta * gauss_pow(omegas[j], v + u) * gauss_pow(omegas[j].conj(), v - u);
    }
    etas.push_back(GaussInt{0, 1} * eta);
    etas.push_back(eta);
  }
  return etas;
}

std::vector<RatPoint> circle_points(const Int& R) {
  std::vector<RatPoint> out;
  for (const auto& e : circle_etas(R)) {
    const GaussInt sq = e * e;
    RatPoint p{Rat(sq.re, R), Rat(sq.im, R)};
    p.x.canonicalize();
    p.y.canonicalize();
    out.push_back(p);
  }
  return out;
}

namespace {

std::vector<RatPoint> scaled(std::vector<RatPoint> pts, const Int& t) {
  for (auto& p : pts) {
    p.x /= t;
    p.y /= t;
  }
  return pts;
}

PointSet realize_or_throw(const std::vector<RatPoint>& pts) {
  auto f = realize_on_grid(pts);
  if (!f) throw RealizationError("no integral embedding found", pts);
  return f->as_set();
}

}  // namespace

PointSet circle_set(const Int& R) {
  auto pts = circle_points(R);
  pts.push_back({Rat(0), Rat(0)});
  return realize_or_throw(pts);
}

PointSet circle_tilde(const Int& R) {
  return realize_or_throw(scaled(circle_points(R), 2));
}

std::vector<PointSet> circle_scaled(const Int& R, const Int& t) {
  if (t < 1) throw DomainError("scaling divisor t must be >= 1");
  const auto pts = scaled(circle_points(R), t);
  const std::size_t n = pts.size();
  std::vector<Bits> adj(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rat d2 = dist2(pts[i], pts[j]);
      if (d2.get_den() == 1 && sgn(d2) > 0 && is_perfect_square(d2.get_num()))
        adj[i].set(j);
    }
  std::vector<CanonicalForm> forms;
  for (const auto& c : bron_kerbosch(adj)) {
    if (c.size() < 3) continue;
    std::vector<RatPoint> sub;
    for (auto i : c) sub.push_back(pts[i]);
    auto f = realize_on_grid(sub);
    if (!f) throw RealizationError("no integral embedding found", sub);
    forms.push_back(std::move(*f));
  }
  std::sort(forms.begin(), forms.end(), [](const auto& a, const auto& b) {
    if (a.repr.size() != b.repr.size()) return a.repr.size() > b.repr.size();
    return a < b;
  });
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<PointSet> out;
  for (const auto& f : forms) out.push_back(f.as_set());
  return out;
}

}  // namespace maxips
