#include "polywin/solver.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace polywin {

namespace {

struct Bits {
  std::array<uint64_t, 2> w{0, 0};

  void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool none() const { return w[0] == 0 && w[1] == 0; }
  int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
  friend Bits operator|(Bits a, const Bits& b) {
    a.w[0] |= b.w[0];
    a.w[1] |= b.w[1];
    return a;
  }
  friend Bits operator&(Bits a, const Bits& b) {
    a.w[0] &= b.w[0];
    a.w[1] &= b.w[1];
    return a;
  }
  Bits andnot(const Bits& b) const {
    Bits r = *this;
    r.w[0] &= ~b.w[0];
    r.w[1] &= ~b.w[1];
    return r;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits& a, const Bits& b) {
    if (a.w[1] != b.w[1]) return a.w[1] <=> b.w[1];
    return a.w[0] <=> b.w[0];
  }
};

struct Key {
  uint64_t a, b, c, d;
  int t;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t v : {k.a, k.b, k.c, k.d, static_cast<uint64_t>(k.t)}) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct Searcher {
  SolveConfig cfg;
  std::vector<Cell> cells;
  std::map<Cell, int> index;
  int n = 0;
  int c_eff = 1;
  std::vector<Bits> placements;
  std::vector<std::vector<int>> perms;  // window stabilizer as index permutations
  std::vector<Bits> adj;                // in-window neighbors per cell
  std::vector<int> central_order;       // indices sorted by centrality
  std::unordered_map<Key, int8_t, KeyHash> memo;
  uint64_t nodes = 0;
  bool aborted = false;

  explicit Searcher(const SolveConfig& c) : cfg(c) {
    cells = cfg.window.cells();
    n = static_cast<int>(cells.size());
    if (n > 128) throw std::invalid_argument("window too large for the solver");
    for (int i = 0; i < n; ++i) index[cells[i]] = i;
    c_eff = cfg.game.c.value_or(cfg.game.a);

    for (const Placement& p : placements_meeting(cfg.goal, cells)) {
      Bits m;
      bool inside = true;
      for (const Cell& cell : p) {
        auto it = index.find(cell);
        if (it == index.end()) {
          inside = false;
          break;
        }
        m.set(it->second);
      }
      if (inside) placements.push_back(m);
    }
    if (placements.empty())
      throw std::invalid_argument("window holds no placement of the goal");

    for (const Symmetry& s : window_stabilizer(cfg.window)) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = index.at(apply(s, cells[i]));
      perms.push_back(perm);
    }

    adj.resize(n);
    for (int i = 0; i < n; ++i)
      for (const Cell& nb : adjacent(cfg.window.board, cells[i])) {
        auto it = index.find(nb);
        if (it != index.end()) adj[i].set(it->second);
      }

    double cx = (cfg.window.x0 + cfg.window.x1) / 2.0;
    double cy = (cfg.window.y0 + cfg.window.y1) / 2.0;
    central_order.resize(n);
    for (int i = 0; i < n; ++i) central_order[i] = i;
    std::stable_sort(central_order.begin(), central_order.end(), [&](int a, int b) {
      auto d = [&](int i) {
        double dx = cells[i].x - cx, dy = cells[i].y - cy;
        return dx * dx + dy * dy;
      };
      return d(a) < d(b);
    });
  }

  Key canon(const Bits& m, const Bits& b, int t) const {
    Bits bm = m, bb = b;
    for (const auto& perm : perms) {
      Bits pm, pb;
      for (int i = 0; i < n; ++i) {
        if (m.test(i)) pm.set(perm[i]);
        if (b.test(i)) pb.set(perm[i]);
      }
      if (pm < bm || (pm == bm && pb < bb)) {
        bm = pm;
        bb = pb;
      }
    }
    return {bm.w[0], bm.w[1], bb.w[0], bb.w[1], t};
  }

  bool immediate_win(const Bits& m, const Bits& b) const {
    for (const Bits& p : placements) {
      if (!(p & b).none()) continue;
      if (p.andnot(m).count() <= c_eff) return true;
    }
    return false;
  }

  // candidate cells ordered for the given side
  std::vector<int> ordered_empties(const Bits& m, const Bits& b) const {
    Bits occ = m | b;
    Bits near;
    for (int i = 0; i < n; ++i)
      if (m.test(i)) near = near | adj[i];
    std::vector<int> first, rest;
    for (int i : central_order) {
      if (occ.test(i)) continue;
      if (near.test(i) && !m.none()) first.push_back(i);
      else rest.push_back(i);
    }
    first.insert(first.end(), rest.begin(), rest.end());
    return first;
  }

  // true when the maker forces a win within t of his turns
  bool maker_wins(const Bits& m, const Bits& b, int t) {
    if (aborted) return false;
    if (++nodes > cfg.node_cap) {
      aborted = true;
      return false;
    }
    if (immediate_win(m, b)) return true;
    if (t <= 1) return false;
    Key key = canon(m, b, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second != 0;

    std::vector<int> empties = ordered_empties(m, b);
    int take = std::min(cfg.game.a, static_cast<int>(empties.size()));
    bool win = false;
    std::vector<int> pick;
    // all maker moves of exactly `take` cells; fewer marks are dominated
    std::function<bool(size_t)> choose = [&](size_t from) -> bool {
      if (static_cast<int>(pick.size()) == take) {
        Bits nm = m;
        for (int i : pick) nm.set(i);
        return breaker_refutes(nm, b, t - 1) == false;
      }
      for (size_t i = from; i < empties.size(); ++i) {
        pick.push_back(empties[i]);
        if (choose(i + 1)) return true;
        pick.pop_back();
        if (aborted) return false;
      }
      return false;
    };
    win = take > 0 && choose(0);
    memo[key] = win ? 1 : 0;
    return win;
  }

  // true when the breaker has a reply after which the maker cannot win in t turns
  bool breaker_refutes(const Bits& m, const Bits& b, int t) {
    if (aborted) return true;
    std::vector<int> empties = ordered_empties(m, b);
    int cap = std::min(cfg.game.b, static_cast<int>(empties.size()));
    std::vector<int> pick;
    std::function<bool(size_t, int)> choose = [&](size_t from, int want) -> bool {
      if (want == 0) {
        Bits nb = b;
        for (int i : pick) nb.set(i);
        return !maker_wins(m, nb, t);
      }
      for (size_t i = from; i + want <= empties.size(); ++i) {
        pick.push_back(empties[i]);
        if (choose(i + 1, want - 1)) return true;
        pick.pop_back();
        if (aborted) return true;
      }
      return false;
    };
    if (cfg.exact_breaker_only) return choose(0, cap);
    for (int size = cap; size >= 0; --size)
      if (choose(0, size)) return true;
    return false;
  }
};

}  // namespace

SolveResult solve(const SolveConfig& cfg) {
  if (cfg.game.a < 1 || cfg.game.b < 0) throw std::invalid_argument("bad game parameters");
  if (cfg.game.c && *cfg.game.c < cfg.game.a)
    throw std::invalid_argument("final-turn mark count below a");
  Searcher s(cfg);
  SolveResult res;
  Bits empty;
  for (int t = 1; t <= cfg.max_turns; ++t) {
    if (s.maker_wins(empty, empty, t)) {
      res.status = Status::MakerWins;
      res.winning_turns = t;
      break;
    }
    if (s.aborted) break;
  }
  res.nodes = s.nodes;
  res.aborted = s.aborted;
  return res;
}

Window default_window(BoardKind board) {
  if (board == BoardKind::Square) return {board, 0, 0, 6, 6};
  return {board, 0, 0, 4, 5};
}

}  // namespace polywin
