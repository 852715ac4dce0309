#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polywin/bounds.hpp"
#include "polywin/polyform.hpp"

namespace polywin {

// A periodic b-paving: a symmetric irreflexive relation on cells given by a
// list of base pairs that repeats along two independent translation vectors.
// The breaker answers each maker mark with the related cells, so she wins
// the (1,b) game whenever every placement of the goal contains a related
// pair.
struct Paving {
  BoardKind board = BoardKind::Square;
  std::pair<int, int> period1{1, 0};
  std::pair<int, int> period2{0, 1};
  std::vector<std::pair<Cell, Cell>> pairs;
};

void validate(const Paving& p);  // throws on dependent periods or reflexive pairs

// True when c and d are related under the periodic extension.
bool related(const Paving& p, const Cell& c, const Cell& d);

// Max number of related cells over one fundamental domain.
int paving_degree(const Paving& p);

struct PavingResult {
  Verdict verdict;
  int degree = 0;
  std::optional<Placement> counterexample;  // lexicographically least pair-free placement
};

// BreakerWins(1, degree) when every placement contains a related pair;
// placements are scanned up to the paving's translations.
PavingResult defeats(const Paving& p, const Polyform& goal, int periods = 1);

}  // namespace polywin
