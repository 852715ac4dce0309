#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "polywin/bounds.hpp"
#include "polywin/polyform.hpp"

namespace polywin {

// Priority strategies: an ordered rulebook for the breaker.  Every maker
// mark selects the first rule whose parity matches the mark and whose
// required history cells are maker-marked; the rule's response lists give
// the cells the breaker tries to take, highest priority first.
enum class RuleParity { Even, Odd, Any };

// A cell relative to the current maker mark; `t` is the orientation of the
// target cell on the triangular board and ignored on the square board.
struct Offset {
  int dx = 0;
  int dy = 0;
  int8_t t = 0;

  friend auto operator<=>(const Offset&, const Offset&) = default;
};

Cell offset_from(BoardKind board, const Cell& anchor, const Offset& o);

struct PriorityRule {
  RuleParity parity = RuleParity::Any;
  std::vector<Offset> require;               // history cells that must be maker-marked
  std::vector<std::vector<Offset>> respond;  // one list per mark index; a single list is shared
};

struct PriorityStrategy {
  BoardKind board = BoardKind::Square;
  int a = 1;
  int b = 1;
  int per_set = 1;  // breaker marks spent per response set
  std::vector<PriorityRule> rules;
  // history cell generators, keyed by the parity of the goal cell
  std::vector<std::pair<RuleParity, std::vector<Offset>>> history;
};

void validate(const PriorityStrategy& s);

bool parity_matches(RuleParity rp, BoardKind board, const Cell& c);

// Game simulation of one breaker turn: cycle over the response sets of the
// ordered maker marks, marking the first open candidate of the appropriate
// list on each visit, until b marks are used or every set is exhausted.
// Leftover marks land far away and are not reported.
std::vector<Cell> breaker_response(const PriorityStrategy& strat,
                                   const std::set<Cell>& maker_marked,
                                   const std::set<Cell>& breaker_marked,
                                   const std::vector<Cell>& turn_marks, int b);

// A tracked position: empty cells the maker may still want, maker marks,
// breaker marks.  Always pairwise disjoint.
struct TrackedPosition {
  std::vector<Cell> E, M, B;

  friend auto operator<=>(const TrackedPosition&, const TrackedPosition&) = default;
};

TrackedPosition canonical_position(BoardKind board, const TrackedPosition& p);

struct PriorityVerifyOptions {
  int aux_level = 0;              // 1 adds the response cells of goal cells to E
  uint64_t position_cap = 10'000'000;
};

struct PriorityVerifyResult {
  Status status = Status::Unknown;
  bool aborted = false;
  uint64_t positions = 0;
  int placements = 0;
  std::vector<TrackedPosition> terminals;  // canonical, deduplicated, sorted
  std::vector<std::vector<Cell>> surviving_line;  // maker turns that defeat the rulebook
  std::string message;
};

// Backtracking analysis of the rulebook against every placement of the
// goal.  BreakerWins is sound: the maker model is optimistic (history-cell
// marks draw no breaker response, and any non-contradicted rule may apply),
// so a surviving maker line only yields Unknown, never a breaker proof.
PriorityVerifyResult verify_breaker(const Polyform& goal, const PriorityStrategy& strat, int a,
                                    int b, const PriorityVerifyOptions& opts = {});

// Replay of one maker line through the same analysis logic, for inspection.
struct TraceAction {
  Cell mark;
  bool is_goal = false;
  int rule_index = -1;              // matched rule, -1 when none fits
  std::vector<Cell> breaker_marks;  // defensive marks added (goal-cell marks only)
  bool ruined = false;
};

struct TraceTurn {
  std::vector<Cell> marks;
  std::vector<TraceAction> actions;
};

struct TraceResult {
  bool ruined = false;
  int ruin_turn = -1;  // 1-based turn index
  std::vector<TraceTurn> turns;
  std::string error;  // illegal move reports
};

TraceResult trace_sequence(const Polyform& goal_placement, const PriorityStrategy& strat, int a,
                           int b, const std::vector<std::vector<Cell>>& moves,
                           const PriorityVerifyOptions& opts = {});

// The tracked cells (goal plus generated history cells) of one placement.
std::vector<Cell> history_cells(const Polyform& goal_placement, const PriorityStrategy& strat);

// All placements the verifier scans: distinct congruence images, doubled by
// a parity shift when the rulebook is parity dependent on the square board.
std::vector<std::vector<Cell>> strategy_placements(const Polyform& goal,
                                                   const PriorityStrategy& strat);

}  // namespace polywin
