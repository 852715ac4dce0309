#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polywin/polyform.hpp"

namespace polywin {

enum class Status { MakerWins, BreakerWins, Unknown };

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::string witness;  // rule name or certificate reference; required for decided verdicts
};

// Game parameters: the maker marks a cells per turn, the breaker b; when c
// is set the maker may mark c cells on his final turn instead.
struct GameSpec {
  int a = 1;
  int b = 0;
  std::optional<int> c;
};

// Surrounding rule: if a < |A| and a*delta <= b the breaker wins by marking
// the whole site-perimeter of the maker's marks every turn.
Verdict surround_loser(int a, int b, const Polyform& goal);

struct TwoStepResult {
  Verdict verdict;
  int k = 0;                          // largest pairwise-compatible family found
  Cell common;                        // the shared cell x
  std::vector<Placement> placements;  // a witness family of size k
};

// Two-step rule for goals of size a+1: k placements pairwise meeting in one
// common cell x give a win when a*k > b (mark x in a far-apart copies, then
// finish in the copy the breaker failed to touch).
TwoStepResult twostep_winner(int a, int b, const Polyform& goal);

// Win for free when the goal fits into one turn; holds for every b.
bool single_turn_winner(int a, const Polyform& goal);

// Trivial rule: with b < a the maker outpaces the breaker.
bool blea_winner(int a, int b);

// Monotone closure over a bounded (a,b) grid: a maker win propagates to
// more maker marks and fewer breaker marks, a breaker win the other way.
struct EvidenceGrid {
  int max_a = 6;
  int max_b = 16;
  std::set<std::pair<int, int>> maker;    // (a,b) known maker wins
  std::set<std::pair<int, int>> breaker;  // (a,b) known breaker wins

  void add(Status s, int a, int b);
  void close();
  bool maker_at(int a, int b) const { return maker.count({a, b}) != 0; }
  bool breaker_at(int a, int b) const { return breaker.count({a, b}) != 0; }
  // cells claimed both ways after closure; empty for a consistent catalog
  std::vector<std::pair<int, int>> conflicts() const;
};

// Threshold sequence: entries b_1 < b_2 < ... for n = 1,2,... with a finite
// strictly increasing prefix and infinity afterwards.
struct ThresholdSequence {
  std::vector<int> finite;  // finite prefix; entry n = finite[n-1]
  int first_infinite() const { return static_cast<int>(finite.size()) + 1; }
};

struct ThresholdIssue {
  std::string message;
  bool fatal = true;
};

// Structural checks plus witness coverage against an evidence grid.
std::vector<ThresholdIssue> check_threshold(const ThresholdSequence& t, const Polyform& goal,
                                            const EvidenceGrid& evidence);

}  // namespace polywin
