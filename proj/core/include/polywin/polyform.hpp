#pragma once

#include <string>
#include <vector>

#include "polywin/board.hpp"

namespace polywin {

// A polyform (animal): a finite edge-connected set of cells, identified up
// to congruence.  Cells are kept sorted and unique.
struct Polyform {
  BoardKind board = BoardKind::Square;
  std::vector<Cell> cells;

  int size() const { return static_cast<int>(cells.size()); }
};

// Throws std::invalid_argument when empty, duplicated or disconnected.
void validate(const Polyform& p);

// Sorted, deduplicated, translated so the minimum coordinates are zero.
std::vector<Cell> normalize(std::vector<Cell> cells);

// The lexicographically least normalized image over the point group.  Two
// polyforms are congruent exactly when their canonical forms are equal.
Polyform canonical(const Polyform& p);

bool congruent(const Polyform& a, const Polyform& b);

// Cells outside p adjacent to a cell of p; its size is the site-perimeter.
std::vector<Cell> exterior_boundary(const Polyform& p);
int site_perimeter(const Polyform& p);

// A placement is a concrete cell set congruent to the polyform.
using Placement = std::vector<Cell>;

// Distinct shapes of p under the point group, each normalized.
std::vector<std::vector<Cell>> distinct_images(const Polyform& p);

// Every placement of p whose cell set meets the region, each exactly once.
std::vector<Placement> placements_meeting(const Polyform& p, const std::vector<Cell>& region);

// True when some placement of a is contained in b's cell set.
bool is_subform(const Polyform& a, const Polyform& b);

}  // namespace polywin
