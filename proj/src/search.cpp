#include "maxips/search.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace maxips {

namespace {

Position parse_position(const std::string& s) {
  if (s == "arbitrary") return Position::arbitrary;
  if (s == "semi_general") return Position::semi_general;
  if (s == "general") return Position::general;
  throw DomainError("unknown position class '" + s + "'");
}

std::string field(const std::string& kv, const std::string& key) {
  if (kv.rfind(key + "=", 0) != 0)
    throw DomainError("expected field '" + key + "' in record");
  return kv.substr(key.size() + 1);
}

}  // namespace

std::string SetRecord::serialize() const {
  std::ostringstream os;
  os << canonical.serialize() << "\tcardinality=" << cardinality
     << "\tdiameter=" << diameter.get_str()
     << "\tposition=" << to_string(position) << "\tmaximal=" << maximal
     << "\tfilter_maximal=" << filter_maximal;
  return os.str();
}

SetRecord SetRecord::parse(const std::string& line) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, '\t')) parts.push_back(item);
  if (parts.size() != 6) throw DomainError("malformed record line");
  SetRecord r;
  r.canonical = parse_canonical(parts[0]);
  r.cardinality = std::stoul(field(parts[1], "cardinality"));
  r.diameter = parse_int(field(parts[2], "diameter"));
  r.position = parse_position(field(parts[3], "position"));
  r.maximal = field(parts[4], "maximal") == "1";
  r.filter_maximal = field(parts[5], "filter_maximal") == "1";
  return r;
}

std::string DiameterTable::to_tsv() const {
  std::ostringstream os;
  for (const auto& [k, row] : rows) {
    os << k << '\t' << row.min_diameter.get_str() << '\t' << exhaustive_up_to
       << '\t' << row.witnesses.front().serialize() << '\n';
  }
  return os.str();
}

namespace {

SetRecord to_record(const FilteredSet& f) {
  SetRecord r;
  r.canonical = f.set.canonical;
  r.cardinality = f.set.cardinality;
  r.diameter = f.set.diameter;
  r.position = position_class(f.set.points);
  r.maximal = f.maximal;
  r.filter_maximal = f.maximal_within_filter;
  return r;
}

std::vector<SetRecord> records_for_seed(const EmbeddedTriangle& E,
                                        Position filter) {
  const ExtensionGraph G = build_graph(E);
  std::vector<SetRecord> out;
  if (filter == Position::arbitrary) {
    for (auto& m : maximal_cliques(G)) {
      FilteredSet f{std::move(m), true, true};
      out.push_back(to_record(f));
    }
  } else {
    for (const auto& f : constrained_maximal_cliques(G, filter))
      out.push_back(to_record(f));
  }
  return out;
}

struct Store {
  std::map<std::string, SetRecord> by_key;

  // First writer wins; returns true when the key is new.
  bool insert(SetRecord r) {
    auto key = r.canonical.serialize();
    return by_key.emplace(std::move(key), std::move(r)).second;
  }
};

struct Checkpoint {
  unsigned long last_done = 0;
  std::vector<SetRecord> records;
};

std::string header_line(Position filter) {
  return "#maxips-records filter=" + to_string(filter);
}

Checkpoint read_checkpoint(const std::string& path, Position filter) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  std::string line;
  std::vector<SetRecord> pending;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line != header_line(filter))
        throw DomainError("checkpoint " + path + " was written for another filter");
      continue;
    }
    if (line.empty()) continue;
    if (line.rfind("#done ", 0) == 0) {
      cp.last_done = std::stoul(line.substr(6));
      for (auto& r : pending) cp.records.push_back(std::move(r));
      pending.clear();
      continue;
    }
    if (line[0] == '#') continue;
    pending.push_back(SetRecord::parse(line));
  }
  return cp;
}

}  // namespace

DiameterTable build_table(const std::vector<SetRecord>& records,
                          const SearchConfig& cfg) {
  DiameterTable t;
  t.filter = cfg.position_filter;
  t.exhaustive_up_to = cfg.max_diameter;
  for (const auto& r : records) {
    if (!r.maximal || !satisfies(r.position, cfg.position_filter)) continue;
    if (r.cardinality < cfg.min_cardinality) continue;
    auto [it, fresh] = t.rows.try_emplace(r.cardinality);
    TableRow& row = it->second;
    if (fresh || r.diameter < row.min_diameter) {
      row.k = r.cardinality;
      row.min_diameter = r.diameter;
      row.witnesses = {r.canonical};
    } else if (r.diameter == row.min_diameter) {
      row.witnesses.push_back(r.canonical);
    }
  }
  for (auto& [k, row] : t.rows) {
    std::sort(row.witnesses.begin(), row.witnesses.end(),
              [](const auto& a, const auto& b) {
                return a.serialize() < b.serialize();
              });
    row.proven = row.min_diameter <= Int(cfg.max_diameter);
  }
  return t;
}

SearchResult search_maximal_sets(const SearchConfig& cfg) {
  if (cfg.max_diameter < 1) throw DomainError("max_diameter must be >= 1");
  Store store;
  unsigned long start = 1;
  std::ofstream log;
  if (!cfg.records_path.empty()) {
    if (cfg.resume) {
      Checkpoint cp = read_checkpoint(cfg.records_path, cfg.position_filter);
      for (auto& r : cp.records) store.insert(std::move(r));
      start = cp.last_done + 1;
      log.open(cfg.records_path, std::ios::app);
      if (cp.last_done == 0 && store.by_key.empty()) {
        std::ifstream probe(cfg.records_path);
        if (probe.peek() == std::ifstream::traits_type::eof())
          log << header_line(cfg.position_filter) << '\n';
      }
    } else {
      log.open(cfg.records_path, std::ios::trunc);
      log << header_line(cfg.position_filter) << '\n';
    }
    if (!log) throw DomainError("cannot write records file " + cfg.records_path);
  }

  for (unsigned long d = start; d <= cfg.max_diameter; ++d) {
    std::vector<EmbeddedTriangle> units;
    for (const auto& t : heronian_triangles(d))
      for (auto& e : embeddings(t, true)) units.push_back(std::move(e));

    std::vector<std::vector<SetRecord>> found(units.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < units.size(); ++i) {
      try {
        found[i] = records_for_seed(units[i], cfg.position_filter);
      } catch (...) {
#pragma omp critical(maxips_search_fail)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    // Deterministic merge in unit order.
    std::vector<const SetRecord*> fresh;
    for (auto& list : found)
      for (auto& r : list) {
        auto key = r.canonical.serialize();
        if (store.by_key.count(key)) continue;
        auto it = store.by_key.emplace(std::move(key), std::move(r)).first;
        fresh.push_back(&it->second);
      }
    if (log.is_open()) {
      std::sort(fresh.begin(), fresh.end(), [](const auto* a, const auto* b) {
        return a->canonical.serialize() < b->canonical.serialize();
      });
      for (const auto* r : fresh) log << r->serialize() << '\n';
      log << "#done " << d << '\n';
      log.flush();
    }
    if (cfg.on_diameter_done) cfg.on_diameter_done(d);
  }

  SearchResult res;
  for (auto& [key, r] : store.by_key) res.records.push_back(r);
  res.table = build_table(res.records, cfg);
  if (cfg.verify_witnesses) {
    for (const auto& [k, row] : res.table.rows)
      for (const auto& w : row.witnesses) {
        const PointSet P = w.as_set();
        if (!is_maximal(P) ||
            !satisfies(position_class(P), cfg.position_filter) ||
            diameter(P) != row.min_diameter || P.size() != k)
          throw std::logic_error("witness " + w.serialize() +
                                 " failed re-verification");
      }
  }
  return res;
}

std::vector<SetRecord> enumerate_triangle(const HeronTriangle& t,
                                          Position filter) {
  std::map<std::string, SetRecord> seen;
  for (const auto& e : embeddings(t, true))
    for (auto& r : records_for_seed(e, filter))
      seen.emplace(r.canonical.serialize(), std::move(r));
  std::vector<SetRecord> out;
  for (auto& [k, r] : seen) out.push_back(std::move(r));
  return out;
}

std::vector<MaximalTriangle> search_maximal_triangles(
    unsigned long max_diameter, unsigned long min_diameter) {
  std::vector<HeronTriangle> tris;
  for (unsigned long d = std::max(min_diameter, 1UL); d <= max_diameter; ++d)
    for (auto& t : heronian_triangles(d))
      if (!is_right_triangle(t)) tris.push_back(std::move(t));

  std::vector<char> hit(tris.size(), 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < tris.size(); ++i) {
    try {
      const auto embs = embed_sides(tris[i].a, tris[i].b, tris[i].c);
      hit[i] = !first_extension_point(embs.front(), SolveMode::rational);
    } catch (...) {
#pragma omp critical(maxips_tri_fail)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<MaximalTriangle> out;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (!hit[i]) continue;
    std::optional<CanonicalForm> best;
    for (const auto& e : embeddings(tris[i], true)) {
      CanonicalForm f = normal_form(e.points());
      if (!best || f < *best) best = std::move(f);
    }
    out.push_back({tris[i], std::move(*best)});
  }
  return out;
}

}  // namespace maxips
