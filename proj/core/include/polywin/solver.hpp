#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polywin/bounds.hpp"
#include "polywin/polyform.hpp"

namespace polywin {

// Exhaustive alternating search on a bounded window, used as an independent
// maker-win oracle.  A MakerWins answer is sound for the infinite board:
// the maker only ever uses window cells, and breaker turns include every
// smaller mark count, which models her marks landing outside the window.
// Unknown proves nothing.
struct SolveConfig {
  Window window;
  GameSpec game;
  Polyform goal;
  int max_turns = 6;
  bool exact_breaker_only = false;  // regression knob: breaker always marks min(b, empties)
  uint64_t node_cap = 2'000'000'000;
};

struct SolveResult {
  Status status = Status::Unknown;
  bool aborted = false;
  uint64_t nodes = 0;
  int winning_turns = 0;  // shallowest win found, in maker turns
};

SolveResult solve(const SolveConfig& cfg);

// 7x7 for the square board; five columns of six rows for the triangular.
Window default_window(BoardKind board);

}  // namespace polywin
