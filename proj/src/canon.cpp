#include "maxips/canon.hpp"

#include <algorithm>
#include <sstream>

namespace maxips {

GridPoint OrthoMatrix::apply(const GridPoint& p) const {
  return {a * p.x + b * p.y, c * p.x + d * p.y};
}

const std::array<OrthoMatrix, 8>& ortho_matrices() {
  static const std::array<OrthoMatrix, 8> ms{{{1, 0, 0, 1},
                                              {-1, 0, 0, 1},
                                              {1, 0, 0, -1},
                                              {-1, 0, 0, -1},
                                              {0, 1, 1, 0},
                                              {0, -1, 1, 0},
                                              {0, 1, -1, 0},
                                              {0, -1, -1, 0}}};
  return ms;
}

std::vector<GridPoint> list_repr(const PointSet& P) { return P.points(); }

bool list_less(const std::vector<GridPoint>& a,
               const std::vector<GridPoint>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      point_less);
}

std::string CanonicalForm::serialize() const {
  std::string s;
  for (std::size_t i = 0; i < repr.size(); ++i) {
    if (i) s += ';';
    s += repr[i].x.get_str();
    s += ',';
    s += repr[i].y.get_str();
  }
  return s;
}

CanonicalForm parse_canonical(const std::string& s) {
  CanonicalForm f;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos)
      throw DomainError("malformed canonical point '" + item + "'");
    f.repr.push_back(
        {parse_int(item.substr(0, comma)), parse_int(item.substr(comma + 1))});
  }
  return f;
}

CanonicalForm normal_form(const PointSet& P) {
  if (P.empty()) throw DomainError("normal form of an empty set");
  const auto& pts = P.points();
  std::vector<GridPoint> best, cur(pts.size());
  bool have = false;
  for (const auto& M : ortho_matrices()) {
    std::vector<GridPoint> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) img[i] = M.apply(pts[i]);
    for (const auto& t : img) {
      for (std::size_t i = 0; i < img.size(); ++i) cur[i] = img[i] - t;
      std::sort(cur.begin(), cur.end(), point_less);
      if (!have || list_less(cur, best)) {
        best = cur;
        have = true;
      }
    }
  }
  return CanonicalForm{std::move(best)};
}

bool isomorphic(const PointSet& P, const PointSet& Q) {
  if (P.size() != Q.size()) return false;
  return normal_form(P) == normal_form(Q);
}

}  // namespace maxips
