#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polywin/bounds.hpp"
#include "polywin/polyform.hpp"

namespace polywin {

// Maker certificates.  A situation is a list of components, each a pair of
// disjoint cell sets: the core (cells the maker has marked) and the open
// neighborhood (cells the breaker must not hold).  Components are placed
// independently, far apart; repeating a component encodes multiplicity.
struct SituationComponent {
  std::vector<Cell> core;
  std::vector<Cell> open;
};

struct Situation {
  std::vector<SituationComponent> components;

  int total_core() const;
};

// Situations are listed s0 first: s0 is the goal with an empty neighborhood
// and the last situation is what the maker creates in his first turn.
struct ProofSequence {
  BoardKind board = BoardKind::Square;
  GameSpec game;
  Polyform goal;
  std::vector<Situation> situations;
};

void validate(const ProofSequence& seq);  // shape checks, throws on malformed input

// A cell of the step's breaker universe, tagged with its component.
struct TaggedCell {
  int component = 0;
  Cell cell;
};

// Pre-computed descent options for one step: each descent is the set of
// neighborhood indices it needs untouched; the step holds for a breaker set
// X exactly when some descent mask avoids X.
struct StepAnalysis {
  std::vector<TaggedCell> neighborhood;
  std::vector<std::vector<uint64_t>> descents;  // bitmask over neighborhood indices
  int x_size = 0;                               // min(b, |neighborhood|)

  bool holds_for(const std::vector<int>& x_indices) const;
};

StepAnalysis analyze_step(const ProofSequence& seq, int i);

struct StepReport {
  bool ok = false;
  std::vector<TaggedCell> violating;  // first violating breaker set in index order
  std::string message;
};

StepReport verify_step(const ProofSequence& seq, int i);

struct SequenceReport {
  Verdict verdict;
  int failing_step = -1;
  std::vector<TaggedCell> violating;
  std::string message;
};

SequenceReport verify_sequence(const ProofSequence& seq);

// Implication onto a plain (a,b) game: a verified (1 -> c0, b0) certificate
// reduces to an (a,b) win when c0 <= a and floor(b/a) <= b0; a plain
// certificate carries over when its breaker count dominates.
bool implies_plain_win(const GameSpec& premise, int a, int b);

}  // namespace polywin
