// Census of manifold side-pairings of the 24-cell up to its 1152 symmetries:
// canonical forms, and a sharded, resumable backtracking enumeration that
// prunes on ridge cycles and edge classes as soon as they are determined.
#ifndef C24_SEARCH_HPP
#define C24_SEARCH_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "c24/pairing.hpp"

namespace c24 {

/// Minimum key over all conjugates phi p phi^{-1}.
PairingKey canonical_key(const SidePairing& p);
SidePairing canonicalize(const SidePairing& p);
/// The same minimum computed by conjugating with every symmetry; kept as an
/// independent reference for canonical_key.
PairingKey canonical_key_exhaustive(const SidePairing& p);

/// One assigned row of a partial pairing: side -> partner via symmetry.
struct PairingRow {
  int side = 0;
  int partner = 0;
  int symmetry = 0;  // index into standard_cell().symmetries
};

/// Reads rows from pairing-format text that may list fewer than 12 rows.
std::vector<PairingRow> parse_prefix(std::string_view text);

struct SearchCounters {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;                 // complete pairings passing the incremental checks
  std::uint64_t prune_ridge_length = 0;     // chain longer than 4
  std::uint64_t prune_ridge_short = 0;      // cycle closed with fewer than 4 ridges
  std::uint64_t prune_ridge_holonomy = 0;   // closed 4-cycle with nontrivial holonomy
  std::uint64_t prune_edge_size = 0;        // edge class with more than 8 edges
  std::uint64_t prune_edge_flip = 0;        // edge class containing both orientations of an edge
  std::uint64_t prune_edge_closed = 0;      // closed edge class of the wrong size
  std::uint64_t prune_canonicity = 0;       // a conjugate has a smaller first row
  std::uint64_t rejected_noncanonical = 0;  // leaves dropped as non-canonical
  std::uint64_t recheck_failures = 0;       // leaves failing the full exact check

  void add(const SearchCounters& o);
};

struct CensusEntry {
  PairingKey key{};  // canonical
  int cusps = 0;
};

struct SearchOptions {
  int shards = 1;
  int shard_index = 0;
  bool one_cusped = false;
  int workers = 1;
  /// Stop after this many work units of the shard (0 = no limit).
  std::uint64_t unit_limit = 0;
  /// Fixed rows.  Empty: full census with symmetry-reduced first rows.
  /// Non-empty: every completion of the prefix, canonicalised and deduplicated.
  std::vector<PairingRow> prefix;
  std::optional<std::filesystem::path> checkpoint;
  /// Re-run the exact manifold check on every emitted pairing.
  bool recheck = true;
  /// Called (serially) after each finished unit: id, units done, units total.
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> progress;
};

struct CensusResult {
  std::vector<CensusEntry> entries;  // sorted by key, distinct
  SearchCounters counters;
  std::uint64_t units_total = 0;     // units in this shard
  std::uint64_t units_done = 0;
  std::uint64_t units_resumed = 0;   // taken from the checkpoint
  bool complete() const { return units_done == units_total; }
};

/// Representatives of the first rows (side 0) up to the stabiliser of side 0,
/// each the least row of its orbit.
std::vector<PairingRow> first_row_representatives();

CensusResult enumerate(const SearchOptions& options);

/// Text of a census: a header line then one record per entry.
std::string census_to_text(const CensusResult& r);

/// Checkpoint file: a versioned header naming the search options, then one
/// line per completed unit.
inline constexpr const char* kCheckpointVersion = "c24-checkpoint/1";

}  // namespace c24

#endif  // C24_SEARCH_HPP
