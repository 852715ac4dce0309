#include "polywin/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace polywin {

std::string to_string(Status s) {
  switch (s) {
    case Status::MakerWins: return "MakerWins";
    case Status::BreakerWins: return "BreakerWins";
    default: return "Unknown";
  }
}

Verdict surround_loser(int a, int b, const Polyform& goal) {
  if (a < goal.size() && a * delta(goal.board) <= b)
    return {Status::BreakerWins, "surround"};
  return {Status::Unknown, ""};
}

namespace {

// all placements of the goal that contain the anchor cell
std::vector<Placement> placements_through(const Polyform& goal, const Cell& anchor) {
  std::set<Placement> out;
  for (const auto& shape : distinct_images(goal)) {
    for (size_t i = 0; i < shape.size(); ++i) {
      if (goal.board == BoardKind::Triangular && shape[i].t != anchor.t) continue;
      int dx = anchor.x - shape[i].x;
      int dy = anchor.y - shape[i].y;
      Placement placed;
      placed.reserve(shape.size());
      for (const Cell& c : shape) placed.push_back({c.x + dx, c.y + dy, c.t});
      out.insert(placed);
    }
  }
  return {out.begin(), out.end()};
}

// exhaustive max clique on a small compatibility graph
void max_clique(const std::vector<std::vector<char>>& adj, std::vector<int>& cur,
                std::vector<int>& cand, std::vector<int>& best) {
  if (cur.size() + cand.size() <= best.size()) return;
  if (cand.empty()) {
    if (cur.size() > best.size()) best = cur;
    return;
  }
  std::vector<int> rest = cand;
  while (!rest.empty()) {
    if (cur.size() + rest.size() <= best.size()) return;
    int v = rest.back();
    rest.pop_back();
    cur.push_back(v);
    std::vector<int> next;
    for (int u : rest)
      if (adj[v][u]) next.push_back(u);
    max_clique(adj, cur, next, best);
    cur.pop_back();
  }
}

}  // namespace

TwoStepResult twostep_winner(int a, int b, const Polyform& goal) {
  TwoStepResult res;
  if (goal.size() != a + 1) {
    res.verdict = {Status::Unknown, ""};
    return res;
  }
  // by translation (and for triangular boards, point) symmetry the common
  // cell can be fixed at the origin
  Cell anchor{0, 0, 0};
  res.common = anchor;
  std::vector<Placement> ps = placements_through(goal, anchor);
  size_t n = ps.size();
  std::vector<std::set<Cell>> sets;
  sets.reserve(n);
  for (const auto& p : ps) sets.emplace_back(p.begin(), p.end());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      int common = 0;
      for (const Cell& c : ps[i])
        if (sets[j].count(c)) ++common;
      adj[i][j] = adj[j][i] = (common == 1);  // the shared cell is the anchor
    }
  std::vector<int> cur, best, cand(n);
  for (size_t i = 0; i < n; ++i) cand[i] = static_cast<int>(i);
  max_clique(adj, cur, cand, best);
  res.k = static_cast<int>(best.size());
  std::sort(best.begin(), best.end());
  for (int i : best) res.placements.push_back(ps[i]);
  if (res.k >= 1 && static_cast<long long>(a) * res.k > b)
    res.verdict = {Status::MakerWins, "twostep k=" + std::to_string(res.k)};
  else
    res.verdict = {Status::Unknown, ""};
  return res;
}

bool single_turn_winner(int a, const Polyform& goal) { return goal.size() <= a; }

bool blea_winner(int a, int b) { return b < a; }

void EvidenceGrid::add(Status s, int a, int b) {
  if (a < 1 || a > max_a || b < 0 || b > max_b) return;
  if (s == Status::MakerWins) maker.insert({a, b});
  if (s == Status::BreakerWins) breaker.insert({a, b});
}

void EvidenceGrid::close() {
  for (int a = 1; a <= max_a; ++a)
    for (int b = max_b; b >= 0; --b)
      if (maker.count({a, b})) {
        for (int a2 = a; a2 <= max_a; ++a2)
          for (int b2 = b; b2 >= 0; --b2) maker.insert({a2, b2});
      }
  for (int a = max_a; a >= 1; --a)
    for (int b = 0; b <= max_b; ++b)
      if (breaker.count({a, b})) {
        for (int a2 = a; a2 >= 1; --a2)
          for (int b2 = b; b2 <= max_b; ++b2) breaker.insert({a2, b2});
      }
}

std::vector<std::pair<int, int>> EvidenceGrid::conflicts() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& mb : maker)
    if (breaker.count(mb)) out.push_back(mb);
  return out;
}

std::vector<ThresholdIssue> check_threshold(const ThresholdSequence& t, const Polyform& goal,
                                            const EvidenceGrid& evidence) {
  std::vector<ThresholdIssue> issues;
  auto fail = [&](const std::string& m) { issues.push_back({m, true}); };
  auto info = [&](const std::string& m) { issues.push_back({m, false}); };

  for (size_t i = 0; i < t.finite.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    int bn = t.finite[i];
    if (bn < n - 1) fail("entry " + std::to_string(n) + " below n-1");
    if (i + 1 < t.finite.size() && !(t.finite[i] < t.finite[i + 1]))
      fail("entries not strictly increasing at n=" + std::to_string(n));
    if (!evidence.maker_at(n, bn))
      fail("missing maker witness at (" + std::to_string(n) + "," + std::to_string(bn) + ")");
    if (!evidence.breaker_at(n, bn + 1))
      fail("missing breaker witness at (" + std::to_string(n) + "," + std::to_string(bn + 1) +
           ")");
  }
  // observed on every known sequence; a violation is worth a look but not an error
  std::string divides;
  for (size_t i = 0; i < t.finite.size(); ++i)
    if ((t.finite[i] + 1) % static_cast<int>(i + 1) != 0)
      divides += (divides.empty() ? "" : ",") + std::to_string(i + 1);
  if (!t.finite.empty())
    info(divides.empty() ? "n divides b_n+1 for every finite entry"
                         : "n does not divide b_n+1 at n=" + divides);
  // the infinite tail starts exactly where the goal fits into a single turn:
  // n >= s wins outright, and for n < s the surrounding rule caps b at n*delta
  if (t.first_infinite() != goal.size())
    fail("infinite tail starts at n=" + std::to_string(t.first_infinite()) +
         " but the goal has " + std::to_string(goal.size()) + " cells");
  return issues;
}

}  // namespace polywin
