#include "polywin/polyform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polywin {

void validate(const Polyform& p) {
  if (p.cells.empty()) throw std::invalid_argument("polyform has no cells");
  std::set<Cell> all(p.cells.begin(), p.cells.end());
  if (all.size() != p.cells.size()) throw std::invalid_argument("polyform has duplicate cells");
  if (p.board == BoardKind::Square) {
    for (const Cell& c : p.cells)
      if (c.t != 0) throw std::invalid_argument("square cell with orientation flag");
  }
  // edge connectivity
  std::vector<Cell> stack = {p.cells.front()};
  std::set<Cell> seen = {p.cells.front()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const Cell& n : adjacent(p.board, c)) {
      if (all.count(n) && !seen.count(n)) {
        seen.insert(n);
        stack.push_back(n);
      }
    }
  }
  if (seen.size() != all.size()) throw std::invalid_argument("polyform is not edge-connected");
}

std::vector<Cell> normalize(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty()) return cells;
  int mx = cells.front().x, my = cells.front().y;
  for (const Cell& c : cells) {
    mx = std::min(mx, c.x);
    my = std::min(my, c.y);
  }
  for (Cell& c : cells) {
    c.x -= mx;
    c.y -= my;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

Polyform canonical(const Polyform& p) {
  std::vector<Cell> best;
  bool first = true;
  for (const Symmetry& s : point_group(p.board)) {
    std::vector<Cell> img;
    img.reserve(p.cells.size());
    for (const Cell& c : p.cells) img.push_back(apply(s, c));
    img = normalize(std::move(img));
    if (first || img < best) {
      best = std::move(img);
      first = false;
    }
  }
  return {p.board, best};
}

bool congruent(const Polyform& a, const Polyform& b) {
  return a.board == b.board && canonical(a).cells == canonical(b).cells;
}

std::vector<Cell> exterior_boundary(const Polyform& p) {
  std::set<Cell> inside(p.cells.begin(), p.cells.end());
  std::set<Cell> out;
  for (const Cell& c : p.cells)
    for (const Cell& n : adjacent(p.board, c))
      if (!inside.count(n)) out.insert(n);
  return {out.begin(), out.end()};
}

int site_perimeter(const Polyform& p) { return static_cast<int>(exterior_boundary(p).size()); }

std::vector<std::vector<Cell>> distinct_images(const Polyform& p) {
  std::set<std::vector<Cell>> shapes;
  for (const Symmetry& s : point_group(p.board)) {
    std::vector<Cell> img;
    img.reserve(p.cells.size());
    for (const Cell& c : p.cells) img.push_back(apply(s, c));
    shapes.insert(normalize(std::move(img)));
  }
  return {shapes.begin(), shapes.end()};
}

namespace {

// translate a normalized shape so that shape[i] lands on target
std::vector<Cell> translate_onto(const std::vector<Cell>& shape, size_t i, const Cell& target) {
  int dx = target.x - shape[i].x;
  int dy = target.y - shape[i].y;
  std::vector<Cell> out;
  out.reserve(shape.size());
  for (const Cell& c : shape) out.push_back({c.x + dx, c.y + dy, c.t});
  return out;
}

}  // namespace

std::vector<Placement> placements_meeting(const Polyform& p, const std::vector<Cell>& region) {
  std::set<Placement> found;
  for (const auto& shape : distinct_images(p)) {
    for (size_t i = 0; i < shape.size(); ++i) {
      for (const Cell& r : region) {
        if (p.board == BoardKind::Triangular && shape[i].t != r.t) continue;
        found.insert(translate_onto(shape, i, r));
      }
    }
  }
  return {found.begin(), found.end()};
}

bool is_subform(const Polyform& a, const Polyform& b) {
  if (a.board != b.board) throw std::invalid_argument("subform check across board kinds");
  if (a.size() > b.size()) return false;
  std::set<Cell> host(b.cells.begin(), b.cells.end());
  for (const auto& shape : distinct_images(a)) {
    for (const Cell& anchor : b.cells) {
      if (a.board == BoardKind::Triangular && shape.front().t != anchor.t) continue;
      std::vector<Cell> placed = translate_onto(shape, 0, anchor);
      bool inside = true;
      for (const Cell& c : placed)
        if (!host.count(c)) {
          inside = false;
          break;
        }
      if (inside) return true;
    }
  }
  return false;
}

}  // namespace polywin
