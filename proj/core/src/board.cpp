#include "polywin/board.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polywin {

int delta(BoardKind board) { return board == BoardKind::Triangular ? 3 : 4; }

std::string to_string(BoardKind board) {
  return board == BoardKind::Triangular ? "triangular" : "square";
}

Parity parity(BoardKind board, const Cell& c) {
  if (board == BoardKind::Triangular) return c.t == 0 ? Parity::Even : Parity::Odd;
  return ((c.x + c.y) % 2 + 2) % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<Cell> adjacent(BoardKind board, const Cell& c) {
  if (board == BoardKind::Square) {
    return {{c.x + 1, c.y, 0}, {c.x - 1, c.y, 0}, {c.x, c.y + 1, 0}, {c.x, c.y - 1, 0}};
  }
  if (c.t == 0) {
    return {{c.x, c.y, 1}, {c.x - 1, c.y, 1}, {c.x, c.y - 1, 1}};
  }
  return {{c.x, c.y, 0}, {c.x + 1, c.y, 0}, {c.x, c.y + 1, 0}};
}

namespace {

// floor division helpers for the vertex-sum decoding
int floordiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int floormod(int a, int b) { return a - floordiv(a, b) * b; }

}  // namespace

Cell apply(const Symmetry& s, const Cell& c) {
  if (s.board == BoardKind::Square) {
    return {s.m[0] * c.x + s.m[1] * c.y + s.tx, s.m[2] * c.x + s.m[3] * c.y + s.ty, 0};
  }
  // vertex sum of the triangle, transformed, then decoded
  int sx = 3 * c.x + 1 + c.t;
  int sy = 3 * c.y + 1 + c.t;
  int rx = s.m[0] * sx + s.m[1] * sy + 3 * s.tx;
  int ry = s.m[2] * sx + s.m[3] * sy + 3 * s.ty;
  int mx = floormod(rx, 3);
  int my = floormod(ry, 3);
  if (mx == 1 && my == 1) return {floordiv(rx - 1, 3), floordiv(ry - 1, 3), 0};
  if (mx == 2 && my == 2) return {floordiv(rx - 2, 3), floordiv(ry - 2, 3), 1};
  throw std::logic_error("symmetry does not preserve the triangular lattice");
}

Symmetry compose(const Symmetry& f, const Symmetry& g) {
  Symmetry r;
  r.board = f.board;
  r.m = {f.m[0] * g.m[0] + f.m[1] * g.m[2], f.m[0] * g.m[1] + f.m[1] * g.m[3],
         f.m[2] * g.m[0] + f.m[3] * g.m[2], f.m[2] * g.m[1] + f.m[3] * g.m[3]};
  r.tx = f.m[0] * g.tx + f.m[1] * g.ty + f.tx;
  r.ty = f.m[2] * g.tx + f.m[3] * g.ty + f.ty;
  return r;
}

Symmetry inverse(const Symmetry& s) {
  int det = s.m[0] * s.m[3] - s.m[1] * s.m[2];
  if (det != 1 && det != -1) throw std::logic_error("symmetry not invertible over the integers");
  Symmetry r;
  r.board = s.board;
  r.m = {s.m[3] * det, -s.m[1] * det, -s.m[2] * det, s.m[0] * det};
  r.tx = -(r.m[0] * s.tx + r.m[1] * s.ty);
  r.ty = -(r.m[2] * s.tx + r.m[3] * s.ty);
  return r;
}

Symmetry translation(BoardKind board, int tx, int ty) {
  Symmetry s;
  s.board = board;
  s.tx = tx;
  s.ty = ty;
  return s;
}

const std::vector<Symmetry>& point_group(BoardKind board) {
  static const std::vector<Symmetry> square = [] {
    std::vector<Symmetry> g;
    const std::array<std::array<int, 4>, 8> mats = {{{1, 0, 0, 1},
                                                     {0, -1, 1, 0},
                                                     {-1, 0, 0, -1},
                                                     {0, 1, -1, 0},
                                                     {1, 0, 0, -1},
                                                     {-1, 0, 0, 1},
                                                     {0, 1, 1, 0},
                                                     {0, -1, -1, 0}}};
    for (const auto& m : mats) g.push_back({BoardKind::Square, m, 0, 0});
    return g;
  }();
  static const std::vector<Symmetry> triangular = [] {
    // generated by the 60 degree rotation about a vertex and a mirror,
    // expressed in the A/B lattice basis
    Symmetry r60{BoardKind::Triangular, {0, -1, 1, 1}, 0, 0};
    Symmetry mir{BoardKind::Triangular, {1, 1, 0, -1}, 0, 0};
    std::vector<Symmetry> g;
    Symmetry rot{BoardKind::Triangular, {1, 0, 0, 1}, 0, 0};
    for (int i = 0; i < 6; ++i) {
      g.push_back(rot);
      g.push_back(compose(rot, mir));
      rot = compose(r60, rot);
    }
    std::sort(g.begin(), g.end());
    return g;
  }();
  return board == BoardKind::Square ? square : triangular;
}

bool Window::contains(const Cell& c) const {
  return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
}

std::vector<Cell> Window::cells() const {
  std::vector<Cell> out;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) {
      if (board == BoardKind::Square) {
        out.push_back({x, y, 0});
      } else {
        out.push_back({x, y, 0});
        out.push_back({x, y, 1});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

int Window::cell_count() const {
  int n = (x1 - x0 + 1) * (y1 - y0 + 1);
  return board == BoardKind::Triangular ? 2 * n : n;
}

std::vector<Symmetry> window_stabilizer(const Window& w) {
  std::vector<Symmetry> out;
  std::vector<Cell> ref = w.cells();
  std::set<Cell> ref_set(ref.begin(), ref.end());
  for (const Symmetry& p : point_group(w.board)) {
    // map the window, then translate its min corner back onto the original
    std::vector<Cell> img;
    img.reserve(ref.size());
    for (const Cell& c : ref) img.push_back(apply(p, c));
    Cell mn = *std::min_element(img.begin(), img.end());
    Cell ref_mn = ref.front();
    // candidate translation aligning the two lexicographic minima
    if (w.board == BoardKind::Triangular && mn.t != ref_mn.t) continue;
    Symmetry cand = compose(translation(w.board, ref_mn.x - mn.x, ref_mn.y - mn.y), p);
    bool ok = true;
    for (const Cell& c : ref) {
      if (!ref_set.count(apply(cand, c))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

std::string to_string(const Cell& c, BoardKind board) {
  std::string s = "(" + std::to_string(c.x) + "," + std::to_string(c.y);
  if (board == BoardKind::Triangular) s += c.t == 0 ? ",U" : ",D";
  return s + ")";
}

}  // namespace polywin
