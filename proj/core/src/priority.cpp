#include "polywin/priority.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace polywin {

Cell offset_from(BoardKind board, const Cell& anchor, const Offset& o) {
  if (board == BoardKind::Square) return {anchor.x + o.dx, anchor.y + o.dy, 0};
  return {anchor.x + o.dx, anchor.y + o.dy, o.t};
}

bool parity_matches(RuleParity rp, BoardKind board, const Cell& c) {
  if (rp == RuleParity::Any) return true;
  Parity p = parity(board, c);
  return (rp == RuleParity::Even) == (p == Parity::Even);
}

void validate(const PriorityStrategy& s) {
  if (s.a < 1 || s.b < 0 || s.per_set < 1) throw std::invalid_argument("bad strategy parameters");
  if (s.rules.empty()) throw std::invalid_argument("strategy has no rules");
  for (const auto& r : s.rules) {
    if (r.respond.empty()) throw std::invalid_argument("rule without response lists");
    for (const auto& list : r.respond)
      if (list.empty()) throw std::invalid_argument("empty response candidate list");
    if (s.board == BoardKind::Triangular && r.parity == RuleParity::Any)
      throw std::invalid_argument("triangular rules must fix the cell orientation");
  }
  // every parity needs a fallback rule with no history condition
  for (RuleParity rp : {RuleParity::Even, RuleParity::Odd}) {
    bool has = false;
    for (const auto& r : s.rules)
      if ((r.parity == rp || r.parity == RuleParity::Any) && r.require.empty()) has = true;
    if (!has) throw std::invalid_argument("no unconditional rule for one parity");
  }
}

namespace {

const PriorityRule* match_rule_determined(const PriorityStrategy& strat, const Cell& f,
                                          const std::set<Cell>& maker_marked) {
  for (const auto& r : strat.rules) {
    if (!parity_matches(r.parity, strat.board, f)) continue;
    bool ok = true;
    for (const Offset& o : r.require)
      if (!maker_marked.count(offset_from(strat.board, f, o))) {
        ok = false;
        break;
      }
    if (ok) return &r;
  }
  return nullptr;
}

// the concrete cells a rule yields for one mark: `visits` passes over the
// per-visit candidate lists, skipping cells that are already marked or
// already chosen this turn
std::vector<Cell> rule_marks(const PriorityStrategy& strat, const PriorityRule& rule,
                             const Cell& f, int visits, const std::set<Cell>& marked,
                             const std::set<Cell>& chosen) {
  std::vector<Cell> out;
  std::set<Cell> taken = chosen;
  for (int v = 0; v < visits; ++v) {
    size_t li = rule.respond.size() == 1 ? 0 : static_cast<size_t>(v);
    if (li >= rule.respond.size()) break;
    bool found = false;
    for (const Offset& o : rule.respond[li]) {
      Cell c = offset_from(strat.board, f, o);
      if (marked.count(c) || taken.count(c)) continue;
      out.push_back(c);
      taken.insert(c);
      found = true;
      break;
    }
    if (!found) break;  // dry visit: later passes cannot do better
  }
  return out;
}

}  // namespace

std::vector<Cell> breaker_response(const PriorityStrategy& strat,
                                   const std::set<Cell>& maker_marked,
                                   const std::set<Cell>& breaker_marked,
                                   const std::vector<Cell>& turn_marks, int b) {
  std::vector<Cell> chosen;
  std::set<Cell> chosen_set;
  size_t n = turn_marks.size();
  std::vector<int> visit(n, 0);
  std::vector<char> done(n, 0);
  auto marked = [&](const Cell& c) {
    return maker_marked.count(c) || breaker_marked.count(c) || chosen_set.count(c);
  };
  while (static_cast<int>(chosen.size()) < b) {
    bool progress = false;
    for (size_t i = 0; i < n && static_cast<int>(chosen.size()) < b; ++i) {
      if (done[i]) continue;
      const PriorityRule* rule = match_rule_determined(strat, turn_marks[i], maker_marked);
      if (!rule) {
        done[i] = 1;
        continue;
      }
      size_t li = rule->respond.size() == 1 ? 0 : static_cast<size_t>(visit[i]);
      if (li >= rule->respond.size()) {
        done[i] = 1;
        continue;
      }
      bool found = false;
      for (const Offset& o : rule->respond[li]) {
        Cell c = offset_from(strat.board, turn_marks[i], o);
        if (marked(c)) continue;
        chosen.push_back(c);
        chosen_set.insert(c);
        ++visit[i];
        found = true;
        progress = true;
        break;
      }
      if (!found) done[i] = 1;  // candidates can only become more marked
    }
    if (!progress) break;
  }
  return chosen;
}

namespace {

struct Pos {
  std::set<Cell> E, M, B;

  TrackedPosition frozen() const {
    return {{E.begin(), E.end()}, {M.begin(), M.end()}, {B.begin(), B.end()}};
  }
};

bool pos_less(const Pos& a, const Pos& b) {
  if (a.E != b.E) return a.E < b.E;
  if (a.M != b.M) return a.M < b.M;
  return a.B < b.B;
}

struct PosCmp {
  bool operator()(const Pos& a, const Pos& b) const { return pos_less(a, b); }
};

// one maker turn processed by the rulebook; returns the updated position or
// nothing when some defensive response would take an unmarked goal cell
std::optional<Pos> add_breaker(const PriorityStrategy& strat, const std::set<Cell>& goal, Pos pos,
                               const std::vector<Cell>& turn, int per_set,
                               std::vector<TraceAction>* trace) {
  for (const Cell& f : turn) {
    TraceAction act;
    act.mark = f;
    act.is_goal = goal.count(f) != 0;
    std::set<Cell> marked;
    marked.insert(pos.M.begin(), pos.M.end());
    marked.insert(pos.B.begin(), pos.B.end());
    if (act.is_goal) {
      // the relevant history cells are tracked, so the rule is determined
      const PriorityRule* rule = match_rule_determined(strat, f, pos.M);
      if (!rule) {
        if (trace) trace->push_back(act);
        return std::nullopt;
      }
      act.rule_index = static_cast<int>(rule - strat.rules.data());
      std::vector<Cell> marks = rule_marks(strat, *rule, f, per_set, marked, {});
      act.breaker_marks = marks;
      for (const Cell& c : marks) {
        if (goal.count(c) && !pos.M.count(c)) {
          act.ruined = true;
          if (trace) trace->push_back(act);
          return std::nullopt;
        }
      }
      for (const Cell& c : marks) {
        pos.B.insert(c);
        pos.E.erase(c);
      }
    } else {
      // history cell: no defensive marks are recorded; the position lives
      // when some rule is consistent with it and harmless to the goal
      bool survived = false;
      for (size_t ri = 0; ri < strat.rules.size(); ++ri) {
        const PriorityRule& rule = strat.rules[ri];
        if (!parity_matches(rule.parity, strat.board, f)) continue;
        bool contradicted = false;
        for (const Offset& o : rule.require)
          if (pos.E.count(offset_from(strat.board, f, o))) {
            contradicted = true;
            break;
          }
        if (contradicted) continue;
        std::vector<Cell> marks = rule_marks(strat, rule, f, per_set, marked, {});
        bool ruins = false;
        for (const Cell& c : marks)
          if (goal.count(c) && !pos.M.count(c)) {
            ruins = true;
            break;
          }
        if (!ruins) {
          act.rule_index = static_cast<int>(ri);
          survived = true;
          break;
        }
      }
      if (!survived) {
        act.ruined = true;
        if (trace) trace->push_back(act);
        return std::nullopt;
      }
    }
    if (trace) trace->push_back(act);
  }
  return pos;
}

}  // namespace

std::vector<Cell> history_cells(const Polyform& goal_placement, const PriorityStrategy& strat) {
  std::set<Cell> goal(goal_placement.cells.begin(), goal_placement.cells.end());
  std::set<Cell> out;
  for (const Cell& g : goal_placement.cells)
    for (const auto& [rp, offsets] : strat.history) {
      if (!parity_matches(rp, strat.board, g)) continue;
      for (const Offset& o : offsets) {
        Cell c = offset_from(strat.board, g, o);
        if (!goal.count(c)) out.insert(c);
      }
    }
  return {out.begin(), out.end()};
}

namespace {

bool parity_dependent(const PriorityStrategy& strat) {
  for (const auto& r : strat.rules)
    if (r.parity != RuleParity::Any) return true;
  return false;
}

}  // namespace

std::vector<std::vector<Cell>> strategy_placements(const Polyform& goal,
                                                   const PriorityStrategy& strat) {
  std::set<std::vector<Cell>> out;
  bool shift = strat.board == BoardKind::Square && parity_dependent(strat);
  for (const auto& shape : distinct_images(goal)) {
    out.insert(shape);
    if (shift) {
      std::vector<Cell> moved;
      moved.reserve(shape.size());
      for (const Cell& c : shape) moved.push_back({c.x + 1, c.y, c.t});
      out.insert(moved);
    }
  }
  return {out.begin(), out.end()};
}

TrackedPosition canonical_position(BoardKind board, const TrackedPosition& p) {
  TrackedPosition best;
  bool first = true;
  for (const Symmetry& s : point_group(board)) {
    std::vector<Cell> all;
    for (const Cell& c : p.E) all.push_back(apply(s, c));
    for (const Cell& c : p.M) all.push_back(apply(s, c));
    for (const Cell& c : p.B) all.push_back(apply(s, c));
    if (all.empty()) return p;
    int mx = all.front().x, my = all.front().y;
    for (const Cell& c : all) {
      mx = std::min(mx, c.x);
      my = std::min(my, c.y);
    }
    auto shift = [&](const std::vector<Cell>& in) {
      std::vector<Cell> out;
      out.reserve(in.size());
      for (const Cell& c : in) {
        Cell m = apply(s, c);
        out.push_back({m.x - mx, m.y - my, m.t});
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    TrackedPosition cand{shift(p.E), shift(p.M), shift(p.B)};
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  }
  return best;
}

PriorityVerifyResult verify_breaker(const Polyform& goal, const PriorityStrategy& strat, int a,
                                    int b, const PriorityVerifyOptions& opts) {
  validate(strat);
  if (a < 1) throw std::invalid_argument("maker marks must be positive");
  int per_set = (a == strat.a && b == strat.b) ? strat.per_set : b / a;

  PriorityVerifyResult res;
  std::set<TrackedPosition> terminals;

  auto placements = strategy_placements(goal, strat);
  res.placements = static_cast<int>(placements.size());
  for (const auto& placement : placements) {
    Polyform placed{goal.board, placement};
    std::set<Cell> G(placement.begin(), placement.end());
    Pos start;
    start.M = {};
    start.B = {};
    for (const Cell& c : placement) start.E.insert(c);
    for (const Cell& c : history_cells(placed, strat)) start.E.insert(c);
    // the rule picked for a goal-cell mark is determined by the tracked
    // marks only, so every condition cell of a goal cell must be tracked
    for (const Cell& g : placement)
      for (const auto& rule : strat.rules) {
        if (!parity_matches(rule.parity, strat.board, g)) continue;
        for (const Offset& o : rule.require) {
          Cell c = offset_from(strat.board, g, o);
          if (!start.E.count(c))
            throw std::invalid_argument(
                "history generators do not cover a goal-cell condition at " +
                to_string(c, strat.board));
        }
      }
    if (opts.aux_level >= 1) {
      for (const Cell& g : placement)
        for (const auto& rule : strat.rules) {
          if (!parity_matches(rule.parity, strat.board, g)) continue;
          for (const auto& list : rule.respond)
            for (const Offset& o : list) {
              Cell c = offset_from(strat.board, g, o);
              if (!G.count(c)) start.E.insert(c);
            }
        }
    }

    std::set<Pos, PosCmp> visited;
    std::vector<std::pair<Pos, std::vector<std::vector<Cell>>>> stack;
    stack.push_back({start, {}});
    while (!stack.empty()) {
      auto [pos, line] = std::move(stack.back());
      stack.pop_back();
      if (visited.count(pos)) continue;
      visited.insert(pos);
      if (++res.positions > opts.position_cap) {
        res.aborted = true;
        res.status = Status::Unknown;
        res.message = "position cap exceeded";
        return res;
      }
      int open_goal = 0;
      for (const Cell& g : placement)
        if (pos.E.count(g)) ++open_goal;
      if (open_goal <= a) {
        res.status = Status::Unknown;
        res.surviving_line = line;
        res.message = "maker line survives on placement anchored at " +
                      to_string(placement.front(), goal.board);
        return res;
      }
      // enumerate maker turns F, sizes 1..a, in deterministic order
      std::vector<Cell> cells(pos.E.begin(), pos.E.end());
      bool any_child = false;
      std::vector<int> pick;
      std::function<void(int, int)> subsets = [&](int from, int want) {
        if (want == 0) {
          std::vector<Cell> turn;
          turn.reserve(pick.size());
          for (int idx : pick) turn.push_back(cells[idx]);
          Pos next = pos;
          for (const Cell& c : turn) {
            next.E.erase(c);
            next.M.insert(c);
          }
          auto after = add_breaker(strat, G, std::move(next), turn, per_set, nullptr);
          if (after) {
            any_child = true;
            if (!visited.count(*after)) {
              auto nline = line;
              nline.push_back(turn);
              stack.push_back({std::move(*after), std::move(nline)});
            }
          }
          return;
        }
        for (int i = from; i + want <= static_cast<int>(cells.size()); ++i) {
          pick.push_back(i);
          subsets(i + 1, want - 1);
          pick.pop_back();
        }
      };
      for (int size = 1; size <= a && size <= static_cast<int>(cells.size()); ++size)
        subsets(0, size);
      if (!any_child) terminals.insert(canonical_position(goal.board, pos.frozen()));
    }
  }
  res.status = Status::BreakerWins;
  res.terminals.assign(terminals.begin(), terminals.end());
  res.message = "all placements refuted";
  return res;
}

TraceResult trace_sequence(const Polyform& goal_placement, const PriorityStrategy& strat, int a,
                           int b, const std::vector<std::vector<Cell>>& moves,
                           const PriorityVerifyOptions& opts) {
  validate(strat);
  int per_set = (a == strat.a && b == strat.b) ? strat.per_set : b / a;
  TraceResult res;
  std::set<Cell> G(goal_placement.cells.begin(), goal_placement.cells.end());
  Pos pos;
  for (const Cell& c : goal_placement.cells) pos.E.insert(c);
  for (const Cell& c : history_cells(goal_placement, strat)) pos.E.insert(c);
  if (opts.aux_level >= 1) {
    for (const Cell& g : goal_placement.cells)
      for (const auto& rule : strat.rules) {
        if (!parity_matches(rule.parity, strat.board, g)) continue;
        for (const auto& list : rule.respond)
          for (const Offset& o : list) {
            Cell c = offset_from(strat.board, g, o);
            if (!G.count(c)) pos.E.insert(c);
          }
      }
  }
  int turn_no = 0;
  for (const auto& move : moves) {
    ++turn_no;
    TraceTurn turn;
    turn.marks = move;
    std::sort(turn.marks.begin(), turn.marks.end());
    if (static_cast<int>(turn.marks.size()) > a) {
      res.error = "turn " + std::to_string(turn_no) + " marks more than a cells";
      res.turns.push_back(turn);
      return res;
    }
    for (const Cell& c : turn.marks)
      if (!pos.E.count(c)) {
        res.error = "turn " + std::to_string(turn_no) + " marks a cell outside E: " +
                    to_string(c, strat.board);
        res.turns.push_back(turn);
        return res;
      }
    Pos next = pos;
    for (const Cell& c : turn.marks) {
      next.E.erase(c);
      next.M.insert(c);
    }
    auto after = add_breaker(strat, G, std::move(next), turn.marks, per_set, &turn.actions);
    res.turns.push_back(turn);
    if (!after) {
      res.ruined = true;
      res.ruin_turn = turn_no;
      return res;
    }
    pos = std::move(*after);
  }
  return res;
}

}  // namespace polywin
