#pragma once

#include "maxips/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace maxips {

class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : DomainError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct PointSetFile {
  PointSet points;
  std::map<std::string, std::string> metadata;
};

// "x y" per line, '#' comments, optional "---" block of key=value lines.
PointSetFile parse_pointset_file(const std::string& text);
PointSet parse_pointset(const std::string& text);
std::string serialize_pointset(const PointSet& P,
                               const std::map<std::string, std::string>& meta = {});

struct SvgCircle {
  Rat cx, cy, r;
};

struct RenderOptions {
  int size = 600;
  int margin = 20;
  std::vector<SvgCircle> circles;
};

std::string render_svg(const PointSet& P, const RenderOptions& opts = {});

}  // namespace maxips
