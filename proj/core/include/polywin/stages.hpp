#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polywin/bounds.hpp"

namespace polywin {

// Stage diagram for composing per-part strategies into one biased game.
// A vertex is a progress vector p (how many moves each part strategy has
// advanced); its supply vector q says how many alive subboards of each type
// the maker must hold when entering that stage, and n is the number of
// turns spent before one coordinate can be advanced.
struct StageVertex {
  std::vector<int> p;
  std::vector<long long> q;
  long long n = 0;         // turns per outgoing edge; 0 at winning vertices
  bool winning = false;    // some p(i) reached l_i
  bool win_adjacent = false;  // some p(i) == l_i - 1: one dashed turn finishes
};

struct StageParams {
  std::vector<int> b;  // breaker marks per part
  std::vector<int> l;  // strategy length per part
};

struct StageDiagram {
  StageParams params;
  std::map<std::vector<int>, StageVertex> vertices;  // keyed by p, root included
  long long total_bound = 0;  // max turn count over root-to-win paths
};

StageDiagram build_diagram(const StageParams& params);

long long total_turn_bound(const StageDiagram& d);

// The counting inequality behind stage feasibility:
// sum_i k_i * (b_i + 1) >= n.
bool stage_feasibility(long long n, const std::vector<long long>& k, const std::vector<int>& b);

// Strategy composition: bounded (a_i -> a, b_i) wins in l_i turns combine
// into an (a, b + s - 1) win with a = sum a_i and b = sum b_i; the turn
// bound comes from the stage diagram.
struct CompositionPart {
  int a = 1;  // maker marks per turn in the part strategy
  int b = 0;  // breaker marks the part tolerates
  int l = 1;  // turns the part strategy needs
};

struct CompositionResult {
  int a = 0;
  int b = 0;  // breaker marks of the implied plain game
  long long turns = 0;
};

CompositionResult compose_winner(const std::vector<CompositionPart>& parts);

}  // namespace polywin
