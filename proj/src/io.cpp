#include "maxips/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace maxips {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

PointSetFile parse_pointset_file(const std::string& text) {
  PointSetFile f;
  std::vector<GridPoint> pts;
  std::vector<std::size_t> origin;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool in_meta = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "---") {
      in_meta = true;
      continue;
    }
    if (in_meta) {
      const auto eq = line.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError(lineno, "expected key=value in metadata");
      f.metadata[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
      continue;
    }
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs >> ys) || (ls >> extra))
      throw ParseError(lineno, "expected two integers 'x y'");
    try {
      pts.push_back({parse_int(xs), parse_int(ys)});
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
    origin.push_back(lineno);
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pts[i] == pts[j])
        throw ParseError(origin[i], "duplicate point " + pts[i].x.get_str() +
                                        " " + pts[i].y.get_str());
  f.points = PointSet(std::move(pts));
  return f;
}

PointSet parse_pointset(const std::string& text) {
  return parse_pointset_file(text).points;
}

std::string serialize_pointset(const PointSet& P,
                               const std::map<std::string, std::string>& meta) {
  std::string out;
  for (const auto& p : P) out += p.x.get_str() + " " + p.y.get_str() + "\n";
  if (!meta.empty()) {
    out += "---\n";
    for (const auto& [k, v] : meta) out += k + "=" + v + "\n";
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PointSet& P, const RenderOptions& opts) {
  const auto& v = P.points();
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      minx = maxx = x, miny = maxy = y, first = false;
      return;
    }
    minx = std::min(minx, x), maxx = std::max(maxx, x);
    miny = std::min(miny, y), maxy = std::max(maxy, y);
  };
  for (const auto& p : v) grow(p.x.get_d(), p.y.get_d());
  for (const auto& c : opts.circles) {
    const double r = c.r.get_d();
    grow(c.cx.get_d() - r, c.cy.get_d() - r);
    grow(c.cx.get_d() + r, c.cy.get_d() + r);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1.0});
  const double inner = opts.size - 2.0 * opts.margin;
  const double s = inner / span;
  auto sx = [&](double x) { return opts.margin + (x - minx) * s; };
  // Flipped so that larger y is drawn higher.
  auto sy = [&](double y) { return opts.size - opts.margin - (y - miny) * s; };
  const double dot = std::max(2.0, opts.size / 150.0);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size
     << "\" height=\"" << opts.size << "\" viewBox=\"0 0 " << opts.size << ' '
     << opts.size << "\">\n";
  for (const auto& c : opts.circles)
    os << "  <circle class=\"arc\" cx=\"" << fmt(sx(c.cx.get_d())) << "\" cy=\""
       << fmt(sy(c.cy.get_d())) << "\" r=\"" << fmt(c.r.get_d() * s)
       << "\" fill=\"none\" stroke=\"gray\" data-cx=\"" << c.cx.get_str()
       << "\" data-cy=\"" << c.cy.get_str() << "\" data-r=\"" << c.r.get_str()
       << "\"/>\n";
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      auto d = integral_distance(v[i], v[j]);
      if (!d) continue;
      os << "  <line x1=\"" << fmt(sx(v[i].x.get_d())) << "\" y1=\""
         << fmt(sy(v[i].y.get_d())) << "\" x2=\"" << fmt(sx(v[j].x.get_d()))
         << "\" y2=\"" << fmt(sy(v[j].y.get_d()))
         << "\" stroke=\"black\" stroke-width=\"0.5\" data-length=\""
         << d->get_str() << "\"/>\n";
    }
  for (const auto& p : v)
    os << "  <circle class=\"point\" cx=\"" << fmt(sx(p.x.get_d())) << "\" cy=\""
       << fmt(sy(p.y.get_d())) << "\" r=\"" << fmt(dot)
       << "\" fill=\"black\" data-x=\"" << p.x.get_str() << "\" data-y=\""
       << p.y.get_str() << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace maxips
