#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "thmc/design.hpp"
#include "thmc/types.hpp"

namespace thmc {

struct Marginal {
  IntVec b;
  std::int64_t degree = 0;

  // Degree is sum(b) / column sum; throws invalid_argument if that is not a positive integer.
  static Marginal of(Model model, int T, IntVec b);
};

// Word-level fiber: data vectors u >= 0 (indexed by words in lexicographic order) with A u = b.
struct Fiber {
  Model model = Model::D;
  int S = 0;
  int T = 0;
  Marginal marginal;
  std::vector<IntVec> elements;  // sorted
};

struct Move {
  IntVec z;
  std::int64_t degree = 0;  // ||z+||_1
  friend bool operator==(const Move&, const Move&) = default;
};

struct MarkovCaps {
  std::int64_t max_degree = 4;
  std::size_t max_words = 4096;
  std::size_t max_moves = 2'000'000;
};

Fiber enumerate_fiber(Model model, int S, int T, const Marginal& b, const MarkovCaps& caps = {});

// All u - v over same-fiber pairs of degree <= k, one representative per sign class, sorted.
std::vector<Move> moves_up_to_degree(Model model, int S, int T, std::int64_t k, const MarkovCaps& caps = {});

struct FiberConnectivity {
  bool connected = false;
  std::vector<std::vector<std::size_t>> components;  // indices into fiber.elements
};

// Graph on fiber elements with u ~ u + z whenever u + z >= 0 for a move z (either sign).
FiberConnectivity fiber_connected(const Fiber& fiber, const std::vector<Move>& moves);

struct FiberRecord {
  IntVec b;
  std::int64_t degree = 0;
  std::size_t size = 0;              // distinct column multisets in the fiber
  std::int64_t connected_at_k = 0;   // smallest k connecting it
};

struct ConnectivityReport {
  Model model = Model::D;
  int S = 0;
  int T = 0;
  std::int64_t D = 0;
  std::int64_t minimal_k = 0;
  std::size_t fibers_checked = 0;
  std::vector<FiberRecord> fibers;   // only fibers with more than one element
  // Explicit word-level check of the moves along each fiber's spanning tree.
  std::size_t moves_verified = 0;
  std::size_t kernel_violations = 0;
  std::size_t balance_violations = 0;
  std::size_t walk_violations = 0;
  bool moves_sound() const { return kernel_violations == 0 && balance_violations == 0 && walk_violations == 0; }
  // Fibers not connected by moves of degree <= k.
  std::vector<IntVec> disconnected_at(std::int64_t k) const;
};

// Smallest k such that moves of degree <= k connect every fiber of degree <= D.
// Words sharing a column are joined by degree-one moves, so the search runs
// over multisets of distinct columns; each spanning-tree edge is then
// replayed as an explicit word-level move and checked.
ConnectivityReport minimal_connecting_degree(Model model, int S, int T, std::int64_t D, const MarkovCaps& caps = {});

// Experimental: normalizes a word-level move by removing the longest prefix
// shared by all of its words and counts the resulting classes.
std::size_t shift_orbit_count(Model model, int S, int T, const std::vector<Move>& moves);

nlohmann::ordered_json connectivity_to_json(const ConnectivityReport& r);
std::string moves_to_text(const std::vector<Move>& moves);

}  // namespace thmc
