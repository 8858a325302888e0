#include "cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maxips/canon.hpp"
#include "maxips/cliques.hpp"
#include "maxips/constructions.hpp"
#include "maxips/extension.hpp"
#include "maxips/heronian.hpp"
#include "maxips/io.hpp"
#include "maxips/search.hpp"

namespace maxips {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw DomainError("cannot write " + path);
  o << text;
}

std::vector<Int> parse_list(const std::string& s) {
  std::vector<Int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_int(item));
  return v;
}

HeronTriangle parse_triangle(const std::string& s) {
  auto v = parse_list(s);
  if (v.size() != 3) throw DomainError("triangle must be given as a,b,c");
  return HeronTriangle::make(v[0], v[1], v[2]);
}

Position parse_filter(const std::string& s) {
  if (s == "arbitrary") return Position::arbitrary;
  if (s == "semi" || s == "semi_general") return Position::semi_general;
  if (s == "general") return Position::general;
  throw DomainError("unknown filter '" + s + "'");
}

std::string rat_str(const Rat& q) { return q.get_str(); }

void apply_thread_cap() {
  if (const char* env = std::getenv("MAXIPS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  apply_thread_cap();
  CLI::App app{"Maximal integral point sets over the integer grid"};
  app.name("maxips");
  app.require_subcommand(1);

  // gen-triangles
  auto* gen = app.add_subcommand("gen-triangles",
                                 "List Heronian triangles with a given longest side");
  unsigned long gen_d = 0, gen_max = 0;
  gen->add_option("--diameter", gen_d, "Longest side");
  gen->add_option("--max-diameter", gen_max, "List all longest sides up to this bound");
  bool gen_no_right = false;
  gen->add_flag("--no-right", gen_no_right, "Skip right-angled triangles");

  // embed
  auto* emb = app.add_subcommand("embed", "Embed a Heronian triangle in Z^2");
  std::string emb_tri;
  bool emb_raw = false;
  emb->add_option("--triangle", emb_tri, "Sides a,b,c")->required();
  emb->add_flag("--raw", emb_raw,
                "Every embedding as A;B;C instead of one canonical form per class");

  // extend
  auto* ext = app.add_subcommand(
      "extend", "Points at integral distance to every point of a set");
  std::string ext_file, ext_mode = "integral";
  ext->add_option("--points", ext_file, "Point file ('-' for stdin)")->required();
  ext->add_option("--mode", ext_mode, "integral|rational")
      ->check(CLI::IsMember({"integral", "rational"}));

  // check-maximal
  auto* chk = app.add_subcommand("check-maximal", "Decide maximality of a point set");
  std::string chk_file;
  bool chk_strong = false;
  chk->add_option("--points", chk_file, "Point file ('-' for stdin)")->required();
  chk->add_flag("--strong", chk_strong, "Also exclude rational extension points");

  // normalize
  auto* nrm = app.add_subcommand("normalize", "Print the canonical form of a point set");
  std::string nrm_file;
  nrm->add_option("--points", nrm_file, "Point file ('-' for stdin)")->required();

  // construct
  auto* con = app.add_subcommand("construct", "Direct constructions");
  std::string con_kind;
  con->add_option("kind", con_kind,
                  "rect|rhombus|crab|decompose|semicrab|circle|circle-tilde|circle-scaled")
      ->required()
      ->check(CLI::IsMember({"rect", "rhombus", "crab", "decompose", "semicrab",
                             "circle", "circle-tilde", "circle-scaled"}));
  std::string con_a, con_b, con_arms, con_h, con_gh, con_g, con_m, con_R, con_t;
  std::string con_svg;
  bool con_raw = false;
  con->add_option("--a", con_a, "First leg / crab height");
  con->add_option("--b", con_b, "Second leg");
  con->add_option("--arms", con_arms, "Crab arms b1,b2,...");
  con->add_option("--height", con_h, "Height h for decompose");
  con->add_option("--gh", con_gh, "Product g*h for semicrab");
  con->add_option("--g", con_g, "Denominator g for semicrab");
  con->add_option("--m", con_m, "Residue class for semicrab (default: largest)");
  con->add_option("--R", con_R, "Circle radius");
  con->add_option("--t", con_t, "Scaling divisor for circle-scaled");
  con->add_flag("--raw", con_raw, "Keep construction coordinates where integral");
  con->add_option("--svg", con_svg, "Also write an SVG drawing to this file");

  // enumerate
  auto* enm = app.add_subcommand(
      "enumerate", "Maximal sets containing a Heronian triangle");
  std::string enm_tri, enm_filter = "arbitrary";
  enm->add_option("--triangle", enm_tri, "Sides a,b,c")->required();
  enm->add_option("--filter", enm_filter, "arbitrary|semi|general");

  // search
  auto* sea = app.add_subcommand("search", "Exhaustive minimum-diameter search");
  unsigned long sea_max = 0, sea_min = 1;
  std::string sea_filter = "arbitrary", sea_resume, sea_records;
  bool sea_tri = false, sea_quiet = false;
  sea->add_option("--max-diameter", sea_max, "Largest longest side to enumerate")
      ->required();
  sea->add_option("--min-diameter", sea_min, "Smallest longest side (--triangles-only)");
  sea->add_option("--filter", sea_filter, "arbitrary|semi|general");
  sea->add_flag("--triangles-only", sea_tri,
                "List triangles without rational extension points");
  sea->add_option("--resume", sea_resume, "Checkpoint file to continue");
  sea->add_option("--records", sea_records, "Write a checkpoint/record file");
  sea->add_flag("--quiet", sea_quiet, "No progress on stderr");

  // render
  auto* ren = app.add_subcommand("render", "Draw a point set as SVG");
  std::string ren_file, ren_out;
  std::vector<std::string> ren_circles;
  int ren_size = 600;
  ren->add_option("--points", ren_file, "Point file ('-' for stdin)")->required();
  ren->add_option("--out", ren_out, "Output file (default stdout)");
  ren->add_option("--circle", ren_circles, "Circle cx,cy,r to draw (repeatable)");
  ren->add_option("--size", ren_size, "Viewport size in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      if (!gen_d && !gen_max) {
        err << "gen-triangles: give --diameter or --max-diameter\n";
        return 2;
      }
      const unsigned long lo = gen_d ? gen_d : 1, hi = gen_d ? gen_d : gen_max;
      for (unsigned long d = lo; d <= hi; ++d)
        for (const auto& t : heronian_triangles(d)) {
          if (gen_no_right && is_right_triangle(t)) continue;
          out << t.a << ' ' << t.b << ' ' << t.c << '\n';
        }
    } else if (emb->parsed()) {
      const auto t = parse_triangle(emb_tri);
      if (emb_raw) {
        for (const auto& e : embeddings(t, false))
          out << e.A.x << ',' << e.A.y << ';' << e.B.x << ',' << e.B.y << ';'
              << e.C.x << ',' << e.C.y << '\n';
      } else {
        std::vector<CanonicalForm> forms;
        for (const auto& e : embeddings(t, true))
          forms.push_back(normal_form(e.points()));
        std::sort(forms.begin(), forms.end());
        for (const auto& f : forms) out << f.serialize() << '\n';
      }
    } else if (ext->parsed()) {
      const PointSet P = parse_pointset(read_input(ext_file));
      const SolveMode mode =
          ext_mode == "rational" ? SolveMode::rational : SolveMode::integral;
      for (const auto& q : find_extensions(P, mode))
        out << rat_str(q.x) << ' ' << rat_str(q.y) << '\n';
    } else if (chk->parsed()) {
      const PointSet P = parse_pointset(read_input(chk_file));
      if (!is_integral_set(P)) throw DomainError("input is not an integral point set");
      auto ext_pts = find_extensions(P, SolveMode::integral);
      if (!ext_pts.empty()) {
        out << "not maximal\n";
        for (const auto& q : ext_pts)
          out << "extension " << rat_str(q.x) << ' ' << rat_str(q.y) << '\n';
      } else if (chk_strong) {
        auto rat = find_extensions(P, SolveMode::rational, true);
        if (rat.empty()) {
          out << "strongly maximal\n";
        } else {
          out << "maximal\n";
          out << "rational extension " << rat_str(rat[0].x) << ' '
              << rat_str(rat[0].y) << '\n';
        }
      } else {
        out << "maximal\n";
      }
    } else if (nrm->parsed()) {
      const PointSet P = parse_pointset(read_input(nrm_file));
      out << normal_form(P).serialize() << '\n';
    } else if (con->parsed()) {
      auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw CLI::RequiredError(flag);
        return parse_int(v);
      };
      std::vector<PointSet> sets;
      if (con_kind == "rect" || con_kind == "rhombus") {
        const auto p = PythagoreanPair::make(need(con_a, "--a"), need(con_b, "--b"));
        sets.push_back(con_kind == "rect" ? rectangle(p) : rhombus(p));
      } else if (con_kind == "crab") {
        if (con_arms.empty()) throw CLI::RequiredError("--arms");
        sets.push_back(crab(need(con_a, "--a"), parse_list(con_arms)));
      } else if (con_kind == "decompose") {
        sets.push_back(decompose_crab(need(con_h, "--height")));
      } else if (con_kind == "semicrab") {
        std::optional<Int> m;
        if (!con_m.empty()) m = parse_int(con_m);
        sets.push_back(semi_crab(need(con_gh, "--gh"), need(con_g, "--g"), m));
      } else if (con_kind == "circle") {
        sets.push_back(circle_set(need(con_R, "--R")));
      } else if (con_kind == "circle-tilde") {
        sets.push_back(circle_tilde(need(con_R, "--R")));
      } else {
        sets = circle_scaled(need(con_R, "--R"), need(con_t, "--t"));
      }
      for (const auto& s : sets) {
        if (con_raw)
          out << serialize_pointset(s) << '\n';
        else
          out << normal_form(s).serialize() << '\n';
      }
      if (!con_svg.empty()) write_file(con_svg, render_svg(sets.front()));
    } else if (enm->parsed()) {
      const auto t = parse_triangle(enm_tri);
      for (const auto& r : enumerate_triangle(t, parse_filter(enm_filter)))
        out << r.serialize() << '\n';
    } else if (sea->parsed()) {
      if (sea_tri) {
        for (const auto& m : search_maximal_triangles(sea_max, sea_min))
          out << m.triangle.a << ',' << m.triangle.b << ',' << m.triangle.c
              << '\t' << m.canonical.serialize() << '\n';
      } else {
        SearchConfig cfg;
        cfg.max_diameter = sea_max;
        cfg.position_filter = parse_filter(sea_filter);
        if (!sea_resume.empty()) {
          cfg.records_path = sea_resume;
          cfg.resume = true;
        } else {
          cfg.records_path = sea_records;
        }
        if (!sea_quiet)
          cfg.on_diameter_done = [&err, sea_max](unsigned long d) {
            if (d % 10 == 0 || d == sea_max) err << "done diameter " << d << '\n';
          };
        const auto res = search_maximal_sets(cfg);
        out << res.table.to_tsv();
      }
    } else if (ren->parsed()) {
      const PointSet P = parse_pointset(read_input(ren_file));
      RenderOptions opts;
      opts.size = ren_size;
      for (const auto& c : ren_circles) {
        std::vector<std::string> parts;
        std::stringstream ss(c);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        if (parts.size() != 3) throw DomainError("circle must be cx,cy,r");
        opts.circles.push_back({Rat(parts[0]), Rat(parts[1]), Rat(parts[2])});
      }
      const std::string svg = render_svg(P, opts);
      if (ren_out.empty())
        out << svg;
      else
        write_file(ren_out, svg);
    }
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const RealizationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace maxips
