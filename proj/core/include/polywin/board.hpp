#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polywin {

// Board geometry for the two supported regular tilings.  Square cells are
// integer pairs.  Triangular cells carry an orientation flag: an up triangle
// Up(x,y) shares edges with Down(x,y), Down(x-1,y) and Down(x,y-1), so every
// cell has exactly delta(board) edge neighbors (3 triangular, 4 square).

enum class BoardKind { Square, Triangular };

int delta(BoardKind board);
std::string to_string(BoardKind board);

enum class Orient : int8_t { Up = 0, Down = 1 };

struct Cell {
  int x = 0;
  int y = 0;
  int8_t t = 0;  // 0 = Up (or unused on the square board), 1 = Down

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Parity { Even, Odd };

// Square: checkerboard on x+y.  Triangular: the orientation flag.
Parity parity(BoardKind board, const Cell& c);

std::vector<Cell> adjacent(BoardKind board, const Cell& c);

// A point symmetry together with a translation.  The linear part acts on
// square cells directly.  Triangular cells are mapped through the sum of
// their three corner vertices (an exact integer embedding: Up(x,y) has
// vertex sum (3x+1,3y+1), Down(x,y) has (3x+2,3y+2)), which turns the
// twelve dihedral transforms about a lattice vertex into integer matrices.
struct Symmetry {
  BoardKind board = BoardKind::Square;
  std::array<int, 4> m = {1, 0, 0, 1};  // row-major linear part
  int tx = 0;
  int ty = 0;

  friend auto operator<=>(const Symmetry&, const Symmetry&) = default;
};

Cell apply(const Symmetry& s, const Cell& c);
Symmetry compose(const Symmetry& f, const Symmetry& g);  // f after g
Symmetry inverse(const Symmetry& s);
Symmetry translation(BoardKind board, int tx, int ty);

// The point-symmetry group with zero translation: 8 elements for the square
// board, 12 for the triangular board.
const std::vector<Symmetry>& point_group(BoardKind board);

// A finite rectangle of cells, bounds inclusive.  Triangular windows hold
// both orientations for every (x,y) inside the bounds.
struct Window {
  BoardKind board = BoardKind::Square;
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  bool contains(const Cell& c) const;
  std::vector<Cell> cells() const;
  int cell_count() const;
};

// Symmetries that map the window's cell set onto itself.
std::vector<Symmetry> window_stabilizer(const Window& w);

std::string to_string(const Cell& c, BoardKind board);

}  // namespace polywin
