#include "polywin/paving.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polywin {

namespace {

long long det(const Paving& p) {
  return static_cast<long long>(p.period1.first) * p.period2.second -
         static_cast<long long>(p.period1.second) * p.period2.first;
}

// is (wx,wy) an integer combination of the two periods, each scaled by k
bool in_lattice_scaled(const Paving& p, int wx, int wy, int k) {
  long long d = det(p) * k;
  long long a = static_cast<long long>(wx) * p.period2.second -
                static_cast<long long>(wy) * p.period2.first;
  long long b = static_cast<long long>(p.period1.first) * wy -
                static_cast<long long>(p.period1.second) * wx;
  return a % d == 0 && b % d == 0;
}

bool in_lattice(const Paving& p, int wx, int wy) { return in_lattice_scaled(p, wx, wy, 1); }

// representatives of the translation classes, scaled by `periods`
std::vector<std::pair<int, int>> residues(const Paving& p, int periods) {
  long long want = std::llabs(det(p)) * periods * periods;
  int box = static_cast<int>(want);
  std::vector<std::pair<int, int>> reps;
  for (int x = 0; x < box; ++x)
    for (int y = 0; y < box; ++y) {
      bool fresh = true;
      for (const auto& r : reps)
        if (in_lattice_scaled(p, x - r.first, y - r.second, periods)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back({x, y});
      if (static_cast<long long>(reps.size()) == want) return reps;
    }
  return reps;
}

}  // namespace

void validate(const Paving& p) {
  if (det(p) == 0) throw std::invalid_argument("paving periods are dependent");
  if (p.pairs.empty()) return;
  for (const auto& [u, v] : p.pairs) {
    if (u == v) throw std::invalid_argument("paving pair relates a cell to itself");
    if (p.board == BoardKind::Square && (u.t != 0 || v.t != 0))
      throw std::invalid_argument("square paving with oriented cells");
  }
}

bool related(const Paving& p, const Cell& c, const Cell& d) {
  if (c == d) return false;
  auto match = [&](const Cell& u, const Cell& v) {
    if (c.t != u.t || d.t != v.t) return false;
    int wx = c.x - u.x, wy = c.y - u.y;
    if (d.x - v.x != wx || d.y - v.y != wy) return false;
    return in_lattice(p, wx, wy);
  };
  for (const auto& [u, v] : p.pairs)
    if (match(u, v) || match(v, u)) return true;
  return false;
}

int paving_degree(const Paving& p) {
  if (p.pairs.empty()) return 0;
  // enough to scan the cells of the base pairs themselves: every cell is a
  // translate of one of them or is unrelated to everything
  int best = 0;
  std::set<Cell> seeds;
  for (const auto& [u, v] : p.pairs) {
    seeds.insert(u);
    seeds.insert(v);
  }
  for (const Cell& c : seeds) {
    std::set<Cell> partners;
    for (const auto& [u, v] : p.pairs) {
      if (c.t == u.t) {
        int wx = c.x - u.x, wy = c.y - u.y;
        if (in_lattice(p, wx, wy)) partners.insert({v.x + wx, v.y + wy, v.t});
      }
      if (c.t == v.t) {
        int wx = c.x - v.x, wy = c.y - v.y;
        if (in_lattice(p, wx, wy)) partners.insert({u.x + wx, u.y + wy, u.t});
      }
    }
    partners.erase(c);
    best = std::max(best, static_cast<int>(partners.size()));
  }
  return best;
}

PavingResult defeats(const Paving& p, const Polyform& goal, int periods) {
  if (p.board != goal.board) throw std::invalid_argument("paving and goal on different boards");
  PavingResult res;
  res.degree = paving_degree(p);

  std::vector<Placement> bad;
  for (const auto& shape : distinct_images(goal)) {
    for (const auto& [tx, ty] : residues(p, periods)) {
      Placement placed;
      placed.reserve(shape.size());
      for (const Cell& c : shape) placed.push_back({c.x + tx, c.y + ty, c.t});
      bool covered = false;
      for (size_t i = 0; i < placed.size() && !covered; ++i)
        for (size_t j = i + 1; j < placed.size() && !covered; ++j)
          if (related(p, placed[i], placed[j])) covered = true;
      if (!covered) bad.push_back(placed);
    }
  }
  if (bad.empty()) {
    res.verdict = {Status::BreakerWins, "paving degree=" + std::to_string(res.degree)};
  } else {
    res.verdict = {Status::Unknown, ""};
    res.counterexample = *std::min_element(bad.begin(), bad.end());
  }
  return res;
}

}  // namespace polywin
