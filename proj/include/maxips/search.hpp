#pragma once

#include "maxips/cliques.hpp"
#include "maxips/heronian.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace maxips {

struct SearchConfig {
  unsigned long max_diameter = 1;
  Position position_filter = Position::arbitrary;
  std::size_t min_cardinality = 3;
  // Re-check every table witness with is_maximal and the position filter.
  bool verify_witnesses = true;
  // Append-only checkpoint file; empty disables checkpointing.
  std::string records_path;
  // Continue from the last completed diameter recorded in records_path.
  bool resume = false;
  // Called after each completed diameter (progress reporting).
  std::function<void(unsigned long)> on_diameter_done;
};

// One discovered set; flags refer to the configured position filter.
struct SetRecord {
  CanonicalForm canonical;
  std::size_t cardinality = 0;
  Int diameter;
  Position position = Position::arbitrary;
  bool maximal = false;
  bool filter_maximal = false;

  std::string serialize() const;
  static SetRecord parse(const std::string& line);
};

struct TableRow {
  std::size_t k = 0;
  Int min_diameter;
  std::vector<CanonicalForm> witnesses;  // every set reaching min_diameter
  bool proven = false;                   // min_diameter <= exhaustive bound
};

struct DiameterTable {
  Position filter = Position::arbitrary;
  unsigned long exhaustive_up_to = 0;
  std::map<std::size_t, TableRow> rows;

  // "k\td\tproven_bound\twitness" lines.
  std::string to_tsv() const;
};

struct SearchResult {
  DiameterTable table;
  std::vector<SetRecord> records;  // sorted by canonical serialization
};

SearchResult search_maximal_sets(const SearchConfig& cfg);

// Table rows derived from records (unconditional maximality, filter satisfied).
DiameterTable build_table(const std::vector<SetRecord>& records,
                          const SearchConfig& cfg);

struct MaximalTriangle {
  HeronTriangle triangle;
  CanonicalForm canonical;  // smallest over all embeddings
};

// Non-right Heronian triangles with longest side in [min_diameter, max_diameter]
// that admit no rational extension point, ordered by (a, b, c).
std::vector<MaximalTriangle> search_maximal_triangles(
    unsigned long max_diameter, unsigned long min_diameter = 1);

// All maximal sets (and filter flags) containing some embedding of t.
std::vector<SetRecord> enumerate_triangle(const HeronTriangle& t,
                                          Position filter);

}  // namespace maxips
