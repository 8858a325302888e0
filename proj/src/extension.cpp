#include "maxips/extension.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace maxips {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

Int to_int(i128 v) {
  const bool neg = v < 0;
  const u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  Int r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  return neg ? Int(-r) : r;
}

Int to_int(const Int& v) { return v; }

std::uint64_t mod_small(i128 v, std::uint32_t m) {
  const u128 u = v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v);
  const std::uint64_t hi = static_cast<std::uint64_t>(u >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(u);
  const std::uint64_t two64 = static_cast<std::uint64_t>((u128{1} << 64) % m);
  const std::uint64_t r = ((hi % m) * two64 + lo % m) % m;
  return (v < 0 && r) ? m - r : r;
}

struct SquareTables {
  bool m63[63]{}, m65[65]{}, m11[11]{};
  SquareTables() {
    for (unsigned i = 0; i < 63; ++i) m63[(i * i) % 63] = true;
    for (unsigned i = 0; i < 65; ++i) m65[(i * i) % 65] = true;
    for (unsigned i = 0; i < 11; ++i) m11[(i * i) % 11] = true;
  }
};

const SquareTables kSquares;

// Cheap necessary condition for qb^2 - 4 qa qc to be a perfect square.
bool disc_may_be_square(i128 qa, i128 qb, i128 qc) {
  const auto a = static_cast<std::uint64_t>(qa);
  const auto b = static_cast<std::uint64_t>(qb);
  const auto c = static_cast<std::uint64_t>(qc);
  const std::uint64_t v = b * b - 4 * a * c;  // exact modulo 2^64
  if (v != 0) {
    const int tz = __builtin_ctzll(v);
    if (tz & 1) return false;
    if (tz <= 61 && ((v >> tz) & 7) != 1) return false;
  }
  constexpr std::uint32_t M = 63 * 65 * 11;
  const std::uint64_t am = mod_small(qa, M), bm = mod_small(qb, M),
                      cm = mod_small(qc, M);
  const std::uint64_t r = (bm * bm + 4 * (M - am) % M * cm) % M;
  return kSquares.m63[r % 63] && kSquares.m65[r % 65] && kSquares.m11[r % 11];
}

template <class T>
struct Frame {
  T ax, ay, bx, by;  // A - C and B - C
  T n1, n2;          // squared lengths of the above
};

template <class T>
struct Quad {
  T qa, qb, qc;
  bool param_x;  // true: parameter is x, else y
};

template <class T>
bool all_zero(const Quad<T>& q) {
  return q.qa == 0 && q.qb == 0 && q.qc == 0;
}

// Substitutes the line c into (K + u.P)^2 = 4 d^2 |P|^2.
template <class T>
Quad<T> square_on_line(const T& c1, const T& c2, const T& c3, const T& K,
                       const T& ux, const T& uy, const T& d) {
  const T D4 = 4 * d * d;
  if (c2 != 0) {
    const T al = ux * c2 - uy * c1;
    const T be = c2 * K - uy * c3;
    return {al * al - D4 * (c1 * c1 + c2 * c2), 2 * al * be - 2 * D4 * c1 * c3,
            be * be - D4 * c3 * c3, true};
  }
  const T al = uy * c1;
  const T be = c1 * K - ux * c3;
  return {al * al - D4 * c1 * c1, 2 * al * be, be * be - D4 * c3 * c3, false};
}

// Checks P' (relative to C) against the unsquared system.
bool verify(const Rat& x, const Rat& y, long d1, long d2, const Frame<Int>& f) {
  const Rat n = x * x + y * y;
  Rat r;
  if (d1 != 0) {
    r = Rat(f.n1 - Int(d1) * d1) - 2 * (f.ax * x + f.ay * y);
    r /= 2 * d1;
  } else if (d2 != 0) {
    r = Rat(f.n2 - Int(d2) * d2) - 2 * (f.bx * x + f.by * y);
    r /= 2 * d2;
  } else {
    auto s = rational_square_root(n);
    if (!s) return false;
    r = *s;
  }
  if (r.get_den() != 1 || sgn(r) < 0 || r * r != n) return false;
  const Rat ra = r + d1, rb = r + d2;
  if (sgn(ra) < 0 || sgn(rb) < 0) return false;
  const Rat dxa = x - f.ax, dya = y - f.ay, dxb = x - f.bx, dyb = y - f.by;
  return dxa * dxa + dya * dya == ra * ra && dxb * dxb + dyb * dyb == rb * rb;
}

template <class T>
void solve_cell(const Frame<T>& f, const Frame<Int>& fi, long d1, long d2,
                SolveMode mode, std::vector<RatPoint>& out) {
  const T D1 = d1, D2 = d2;
  const T u1x = -2 * f.ax, u1y = -2 * f.ay, u2x = -2 * f.bx, u2y = -2 * f.by;
  const T K1 = f.n1 - D1 * D1, K2 = f.n2 - D2 * D2;
  T c1, c2, c3;
  if (d1 == 0) {
    c1 = u1x, c2 = u1y, c3 = K1;
  } else if (d2 == 0) {
    c1 = u2x, c2 = u2y, c3 = K2;
  } else {
    c1 = D2 * u1x - D1 * u2x;
    c2 = D2 * u1y - D1 * u2y;
    c3 = D2 * K1 - D1 * K2;
  }
  if (c1 == 0 && c2 == 0)
    throw std::logic_error("degenerate linear form for a non-collinear triangle");
  Quad<T> q = square_on_line(c1, c2, c3, K1, u1x, u1y, D1);
  if (all_zero(q)) {
    q = square_on_line(c1, c2, c3, K2, u2x, u2y, D2);
    if (all_zero(q))
      throw std::logic_error("both squared equations vanish on the line");
  }

  Rat roots[2];
  int nroots = 0;
  if (q.qa == 0) {
    if (q.qb == 0) return;
    roots[nroots++] = Rat(to_int(-q.qc), to_int(q.qb));
  } else {
    if constexpr (std::is_same_v<T, i128>) {
      if (!disc_may_be_square(q.qa, q.qb, q.qc)) return;
    }
    const Int A = to_int(q.qa), B = to_int(q.qb), C = to_int(q.qc);
    const Int disc = B * B - 4 * A * C;
    auto s = perfect_square_root(disc);
    if (!s) return;
    roots[nroots++] = Rat(-B + *s, 2 * A);
    if (*s != 0) roots[nroots++] = Rat(-B - *s, 2 * A);
  }

  const Int C1 = to_int(c1), C2 = to_int(c2), C3 = to_int(c3);
  for (int i = 0; i < nroots; ++i) {
    Rat& t = roots[i];
    t.canonicalize();
    Rat x, y;
    if (q.param_x) {
      x = t;
      y = -(C1 * t + C3) / C2;
    } else {
      x = Rat(-C3, C1);
      x.canonicalize();
      y = t;
    }
    if (mode == SolveMode::integral &&
        (x.get_den() != 1 || y.get_den() != 1))
      continue;
    if (verify(x, y, d1, d2, fi)) out.push_back({x, y});
  }
}

bool fits_i64(const Int& v) { return v.fits_slong_p(); }

i128 to_i128(const Int& v) { return static_cast<i128>(v.get_si()); }

struct Prepared {
  GridPoint A, B, C;
  long ac = 0, bc = 0;
  bool fast = false;
  Frame<i128> f128{};
  Frame<Int> fi;
};

Int side_length(const GridPoint& p, const GridPoint& q) {
  auto d = integral_distance(p, q);
  if (!d) throw DomainError("extension needs a triangle with integral sides");
  return *d;
}

// Relabels so that C is opposite the longest side, then chooses the kernel.
Prepared prepare(const GridPoint& A0, const GridPoint& B0, const GridPoint& C0) {
  if (collinear(A0, B0, C0)) throw DomainError("collinear seed triangle");
  const Int ab = side_length(A0, B0), bc = side_length(B0, C0),
            ca = side_length(C0, A0);
  Prepared p;
  if (ab >= bc && ab >= ca) {
    p.A = A0, p.B = B0, p.C = C0;
  } else if (bc >= ca) {
    p.A = B0, p.B = C0, p.C = A0;
  } else {
    p.A = C0, p.B = A0, p.C = B0;
  }
  const Int sac = side_length(p.A, p.C), sbc = side_length(p.B, p.C);
  if (!sac.fits_slong_p() || !sbc.fits_slong_p())
    throw DomainError("triangle too large for a (d1,d2) sweep");
  p.ac = sac.get_si();
  p.bc = sbc.get_si();
  const GridPoint va = p.A - p.C, vb = p.B - p.C;
  p.fi = {va.x, va.y, vb.x, vb.y, va.x * va.x + va.y * va.y,
          vb.x * vb.x + vb.y * vb.y};

  Int X = 0;
  for (const Int* v : {&va.x, &va.y, &vb.x, &vb.y})
    if (abs(*v) > X) X = abs(*v);
  const Int D = std::max(sac, sbc);
  const Int U = 2 * X, KB = 2 * X * X + D * D, CB = 2 * D * U,
            C3B = 2 * D * KB;
  const Int alB = 2 * U * CB, beB = CB * KB + U * C3B;
  const Int qaB = alB * alB + 8 * D * D * CB * CB;
  const Int qbB = 2 * alB * beB + 8 * D * D * CB * C3B;
  const Int qcB = beB * beB + 4 * D * D * C3B * C3B;
  Int limit = 1;
  limit <<= 125;
  p.fast = fits_i64(X) && qaB < limit && qbB < limit && qcB < limit &&
           C3B < limit && KB < limit;
  if (p.fast)
    p.f128 = {to_i128(va.x), to_i128(va.y), to_i128(vb.x),
              to_i128(vb.y), to_i128(p.fi.n1), to_i128(p.fi.n2)};
  return p;
}

Prepared prepare(const EmbeddedTriangle& E) { return prepare(E.A, E.B, E.C); }

long row_step(SolveMode mode) { return mode == SolveMode::integral ? 2 : 1; }

// In integral mode |PA|^2 - |PC|^2 = |A-C|^2 - 2(A-C).(P-C), so d1 = |AC| mod 2.
long row_count(long side, SolveMode mode) {
  return mode == SolveMode::integral ? side + 1 : 2 * side + 1;
}

long row_value(long side, long idx, SolveMode mode) {
  return -side + idx * row_step(mode);
}

void sweep_row(const Prepared& p, long d1, SolveMode mode,
               std::vector<RatPoint>& rel) {
  const long step = row_step(mode);
  for (long d2 = -p.bc; d2 <= p.bc; d2 += step) {
    if (p.fast)
      solve_cell(p.f128, p.fi, d1, d2, mode, rel);
    else
      solve_cell(p.fi, p.fi, d1, d2, mode, rel);
  }
}

RatPoint absolute(const RatPoint& rel, const GridPoint& C) {
  return {rel.x + C.x, rel.y + C.y};
}

std::vector<RatPoint> finish(const Prepared& p, std::vector<RatPoint> rel) {
  std::vector<RatPoint> out;
  out.reserve(rel.size());
  const RatPoint a = to_rat(p.A), b = to_rat(p.B), c = to_rat(p.C);
  for (const auto& r : rel) {
    RatPoint q = absolute(r, p.C);
    if (q == a || q == b || q == c) continue;
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), rat_point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void sort_unique(std::vector<RatPoint>& v) {
  std::sort(v.begin(), v.end(), rat_point_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool is_integral(const RatPoint& p) {
  return p.x.get_den() == 1 && p.y.get_den() == 1;
}

GridPoint to_grid(const RatPoint& p) {
  if (!is_integral(p)) throw DomainError("point is not integral");
  return {p.x.get_num(), p.y.get_num()};
}

RatPoint to_rat(const GridPoint& p) { return {Rat(p.x), Rat(p.y)}; }

LinearForm linear_form(const HyperbolaSystem& s) {
  const GridPoint va = s.A - s.C, vb = s.B - s.C;
  const Int u1x = -2 * va.x, u1y = -2 * va.y, u2x = -2 * vb.x, u2y = -2 * vb.y;
  const Int K1 = va.x * va.x + va.y * va.y - s.d1 * s.d1;
  const Int K2 = vb.x * vb.x + vb.y * vb.y - s.d2 * s.d2;
  if (s.d1 == 0) return {u1x, u1y, K1};
  if (s.d2 == 0) return {u2x, u2y, K2};
  return {s.d2 * u1x - s.d1 * u2x, s.d2 * u1y - s.d1 * u2y,
          s.d2 * K1 - s.d1 * K2};
}

std::vector<RatPoint> solve_system(const HyperbolaSystem& s, SolveMode mode) {
  if (collinear(s.A, s.B, s.C)) throw DomainError("collinear hyperbola system");
  if (!s.d1.fits_slong_p() || !s.d2.fits_slong_p())
    throw DomainError("distance difference out of range");
  const GridPoint va = s.A - s.C, vb = s.B - s.C;
  const Frame<Int> f{va.x, va.y, vb.x, vb.y, va.x * va.x + va.y * va.y,
                     vb.x * vb.x + vb.y * vb.y};
  std::vector<RatPoint> rel;
  solve_cell(f, f, s.d1.get_si(), s.d2.get_si(), mode, rel);
  std::vector<RatPoint> out;
  for (const auto& r : rel) out.push_back(absolute(r, s.C));
  sort_unique(out);
  return out;
}

std::vector<RatPoint> extension_points_serial(const EmbeddedTriangle& E,
                                              SolveMode mode) {
  const Prepared p = prepare(E);
  std::vector<RatPoint> rel;
  const long rows = row_count(p.ac, mode);
  for (long i = 0; i < rows; ++i)
    sweep_row(p, row_value(p.ac, i, mode), mode, rel);
  return finish(p, std::move(rel));
}

std::vector<RatPoint> extension_points(const EmbeddedTriangle& E,
                                       SolveMode mode) {
  const Prepared p = prepare(E);
  const long rows = row_count(p.ac, mode);
  std::vector<RatPoint> rel;
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::vector<RatPoint> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < rows; ++i) {
      try {
        sweep_row(p, row_value(p.ac, i, mode), mode, local);
      } catch (...) {
#pragma omp critical(maxips_ext_fail)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(maxips_ext_merge)
    rel.insert(rel.end(), local.begin(), local.end());
  }
  if (failure) std::rethrow_exception(failure);
  return finish(p, std::move(rel));
}

std::vector<GridPoint> integral_extension_points(const EmbeddedTriangle& E) {
  std::vector<GridPoint> out;
  for (const auto& q : extension_points(E, SolveMode::integral))
    out.push_back(to_grid(q));
  return out;
}

std::optional<RatPoint> first_extension_point(const EmbeddedTriangle& E,
                                              SolveMode mode) {
  const Prepared p = prepare(E);
  const long rows = row_count(p.ac, mode);
  std::vector<RatPoint> rel;
  for (long i = 0; i < rows; ++i) {
    sweep_row(p, row_value(p.ac, i, mode), mode, rel);
    if (rel.empty()) continue;
    auto pts = finish(p, rel);
    if (!pts.empty()) return pts.front();
    rel.clear();
  }
  return std::nullopt;
}

EmbeddedTriangle seed_triangle(const PointSet& P) {
  const auto& v = P.points();
  const std::size_t n = v.size();
  if (n < 3) throw DomainError("seed triangle needs at least three points");
  std::vector<std::optional<Int>> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d[i * n + j] = d[j * n + i] = integral_distance(v[i], v[j]);
  std::optional<Int> best;
  std::size_t bi = 0, bj = 0, bk = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!d[i * n + j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!d[i * n + k] || !d[j * n + k]) continue;
        if (collinear(v[i], v[j], v[k])) continue;
        Int m = std::max({*d[i * n + j], *d[i * n + k], *d[j * n + k]});
        if (!best || m < *best) {
          best = m;
          bi = i, bj = j, bk = k;
        }
      }
    }
  if (!best) throw DomainError("no non-collinear integral triple");
  return {v[bi], v[bj], v[bk]};
}

namespace {

bool integral_to_all(const RatPoint& q, const PointSet& P) {
  for (const auto& p : P) {
    const Rat dx = q.x - p.x, dy = q.y - p.y;
    const Rat d2 = dx * dx + dy * dy;
    if (d2.get_den() != 1 || !is_perfect_square(d2.get_num())) return false;
  }
  return true;
}

}  // namespace

std::vector<RatPoint> find_extensions(const PointSet& P, SolveMode mode,
                                      bool stop_at_first) {
  if (all_collinear(P)) throw DomainError("collinear point set");
  const EmbeddedTriangle seed = seed_triangle(P);
  if (stop_at_first && P.size() == 3) {
    auto q = first_extension_point(seed, mode);
    if (q) return {*q};
    return {};
  }
  std::vector<RatPoint> out;
  for (const auto& q : extension_points(seed, mode)) {
    if (is_integral(q) && P.contains(to_grid(q))) continue;
    if (!integral_to_all(q, P)) continue;
    out.push_back(q);
    if (stop_at_first) break;
  }
  return out;
}

bool is_maximal(const PointSet& P) {
  return find_extensions(P, SolveMode::integral, true).empty();
}

bool is_strongly_maximal(const PointSet& P) {
  return find_extensions(P, SolveMode::rational, true).empty();
}

}  // namespace maxips
