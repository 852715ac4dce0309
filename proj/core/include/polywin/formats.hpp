#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polywin/paving.hpp"
#include "polywin/polyform.hpp"
#include "polywin/priority.hpp"
#include "polywin/proofseq.hpp"

namespace polywin {

struct ParseError : std::runtime_error {
  ParseError(const std::string& file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
};

// Cell syntax: square `(x,y)`, triangular `(x,y,U)` or `(x,y,D)`.
Cell parse_cell(const std::string& token, BoardKind board);
Offset parse_offset(const std::string& token, BoardKind board);

Polyform load_polyform(const std::string& path);
Paving load_paving(const std::string& path);
PriorityStrategy load_strategy(const std::string& path);
ProofSequence load_proof(const std::string& path);  // goal path resolves next to the file

// Catalog: named animals with threshold sequences and witnessed claims.
struct WitnessSpec {
  enum class Kind { Rule, Paving, Priority, Proof, Solver };
  Kind kind = Kind::Rule;
  std::string rule;  // surround | twostep | blea | trivial
  std::string path;  // for file-backed witnesses, already resolved
  // solver parameters
  int win_w = 7, win_h = 7;
  int turns = 6;
  std::optional<int> c;
  // when set, the witness proves a premise game that implies the claim via
  // the reduction argument
  bool via_reduce = false;
};

struct Claim {
  Status side = Status::MakerWins;
  int a = 1;
  int b = 0;
  bool b_infinite = false;
  WitnessSpec witness;
};

struct CatalogEntry {
  std::string name;
  std::string poly_path;
  Polyform goal;
  ThresholdSequence tau;
  std::vector<Claim> claims;
};

struct Catalog {
  std::string path;
  std::vector<CatalogEntry> entries;
};

Catalog load_catalog(const std::string& path);

std::string dirname_of(const std::string& path);

}  // namespace polywin
