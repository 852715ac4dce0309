// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria cover certificate verification, breaker certificates,
// the stage-diagram bound, the closed-form rules, the solver oracle, the
// catalog and the property suites, each with its runtime budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "polywin/catalog.hpp"
#include "polywin/paving.hpp"
#include "polywin/priority.hpp"
#include "polywin/proofseq.hpp"
#include "polywin/solver.hpp"
#include "polywin/stages.hpp"
#include "stage_oracle.hpp"

using namespace polywin;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kData = POLYWIN_DATA_DIR;

int failures = 0;

struct Criterion {
  std::string name;
  std::vector<std::string> problems;
  Clock::time_point start = Clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  void finish() {
    double s = seconds();
    if (problems.empty()) {
      std::printf("%s PASS (%.2f s)\n", name.c_str(), s);
    } else {
      ++failures;
      std::printf("%s FAIL (%.2f s)\n", name.c_str(), s);
      for (const std::string& p : problems) std::printf("    %s\n", p.c_str());
    }
    std::fflush(stdout);
  }
};

Polyform poly(const std::string& name) {
  return load_polyform(kData + "/polyforms/" + name + ".poly");
}

double run_timed(const std::function<void()>& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// every way of removing one cell from one core or open list
std::vector<ProofSequence> single_cell_mutations(const ProofSequence& seq) {
  std::vector<ProofSequence> out;
  for (size_t si = 0; si < seq.situations.size(); ++si)
    for (size_t ci = 0; ci < seq.situations[si].components.size(); ++ci) {
      const auto& comp = seq.situations[si].components[ci];
      for (size_t k = 0; k < comp.core.size(); ++k) {
        ProofSequence m = seq;
        auto& core = m.situations[si].components[ci].core;
        core.erase(core.begin() + k);
        out.push_back(std::move(m));
      }
      for (size_t k = 0; k < comp.open.size(); ++k) {
        ProofSequence m = seq;
        auto& open = m.situations[si].components[ci].open;
        open.erase(open.begin() + k);
        out.push_back(std::move(m));
      }
    }
  return out;
}

bool verifies(const ProofSequence& seq) {
  try {
    return verify_sequence(seq).verdict.status == Status::MakerWins;
  } catch (const std::exception&) {
    return false;  // malformed after mutation
  }
}

void a1_proof_sequences() {
  Criterion c("A1 proof-sequence certificates");
  const std::vector<std::string> certs = {"t31_11", "t31_25", "t41_23",
                                          "t42_23", "p42_25", "p44_1to2_1"};
  for (const std::string& name : certs) {
    ProofSequence seq = load_proof(kData + "/proofs/" + name + ".proof");
    bool ok = false;
    double s = run_timed([&] { ok = verifies(seq); });
    c.expect(ok, name + " does not verify");
    c.expect(s < 10.0, name + " verification took " + std::to_string(s) + " s");
    int passing = 0;
    for (const ProofSequence& m : single_cell_mutations(seq))
      if (verifies(m)) ++passing;
    c.expect(passing == 0,
             name + ": " + std::to_string(passing) + " single-cell mutations still verify");
  }
  c.finish();
}

void a2_pavings() {
  Criterion c("A2 paving certificates");
  const std::vector<std::tuple<std::string, std::string, int>> claims = {
      {"tri_t21", "t31", 2}, {"tri_t12", "t41", 1}, {"tri_t11", "t42", 1},
      {"tri_t11", "t43", 1}, {"sq_t11", "p44", 1},  {"sq_t22", "p31", 2},
      {"sq_t21", "p32", 2}};
  for (const auto& [pav, goal, b] : claims) {
    Paving p = load_paving(kData + "/pavings/" + pav + ".paving");
    PavingResult res;
    double s = run_timed([&] { res = defeats(p, poly(goal)); });
    c.expect(res.verdict.status == Status::BreakerWins, pav + " does not defeat " + goal);
    c.expect(res.degree <= b, pav + " degree above " + std::to_string(b));
    c.expect(s < 1.0, pav + " vs " + goal + " took " + std::to_string(s) + " s");
  }
  c.finish();
}

void a3_priority() {
  Criterion c("A3 priority strategies");
  const std::vector<std::tuple<std::string, std::string, int, int>> claims = {
      {"t41_24", "t41", 2, 4}, {"t42_24", "t42", 2, 4}, {"t43_24", "t43", 2, 4},
      {"p41_24", "p41", 2, 4}, {"p42_26", "p42", 2, 6}, {"p43_24", "p43", 2, 4},
      {"p44_parity", "p44", 2, 4}, {"p44_parity", "p44", 3, 6}, {"p45_24", "p45", 2, 4}};
  for (const auto& [strat, goal, a, b] : claims) {
    PriorityStrategy s = load_strategy(kData + "/strategies/" + strat + ".strat");
    PriorityVerifyResult res = verify_breaker(poly(goal), s, a, b);
    c.expect(res.status == Status::BreakerWins,
             strat + " fails on " + goal + " (" + std::to_string(a) + "," + std::to_string(b) +
                 "): " + res.message);
    if (strat == "p45_24")
      c.expect(res.terminals.size() == 2, "terminal multiset has " +
                                              std::to_string(res.terminals.size()) +
                                              " canonical elements, wanted 2");
  }
  c.expect(c.seconds() < 300.0, "total runtime above five minutes");
  c.finish();
}

void a4_stage_diagram() {
  Criterion c("A4 stage diagram");
  StageDiagram d = build_diagram({{1, 2}, {3, 4}});
  const StageVertex& v = d.vertices.at({1, 0});
  c.expect(v.n == 1, "vertex (1,0) has n=" + std::to_string(v.n));
  c.expect(v.q == std::vector<long long>{11, 1}, "vertex (1,0) has the wrong supply vector");
  c.expect(d.total_bound == 440, "total bound is " + std::to_string(d.total_bound));
  stage_oracle::Oracle oracle({1, 2}, {3, 4});
  for (const auto& [p, vert] : d.vertices) {
    auto [q, n] = oracle.eval(p);
    c.expect(vert.q == q, "oracle disagrees on a supply vector");
    if (!vert.winning) c.expect(vert.n == n, "oracle disagrees on a turn count");
  }
  c.expect(oracle.bound({0, 0}) == 440, "oracle bound differs");
  c.finish();
}

void a5_closed_form_rules() {
  Criterion c("A5 closed-form rules");
  c.expect(surround_loser(2, 6, poly("t31")).status == Status::BreakerWins, "surround t31 (2,6)");
  for (const std::string t4 : {"t41", "t42", "t43"})
    c.expect(surround_loser(3, 9, poly(t4)).status == Status::BreakerWins, "surround " + t4);
  for (const std::string p3 : {"p31", "p32"})
    c.expect(surround_loser(2, 8, poly(p3)).status == Status::BreakerWins, "surround " + p3);
  for (const std::string p4 : {"p41", "p42", "p43", "p45"})
    c.expect(surround_loser(3, 12, poly(p4)).status == Status::BreakerWins, "surround " + p4);
  c.expect(surround_loser(1, 4, poly("p21")).status == Status::BreakerWins, "surround p21");

  TwoStepResult t31 = twostep_winner(2, 5, poly("t31"));
  c.expect(t31.verdict.status == Status::MakerWins && t31.k == 3, "twostep t31 (2,5) k=3");
  for (const std::string t4 : {"t41", "t42", "t43"}) {
    TwoStepResult r = twostep_winner(3, 8, poly(t4));
    c.expect(r.verdict.status == Status::MakerWins, "twostep " + t4 + " (3,8)");
  }
  for (const std::string p3 : {"p31", "p32"}) {
    TwoStepResult r = twostep_winner(2, 7, poly(p3));
    c.expect(r.verdict.status == Status::MakerWins && r.k == 4, "twostep " + p3 + " (2,7) k=4");
  }
  for (const std::string p4 : {"p41", "p42", "p43", "p45"}) {
    TwoStepResult r = twostep_winner(3, 11, poly(p4));
    c.expect(r.verdict.status == Status::MakerWins, "twostep " + p4 + " (3,11)");
  }
  c.expect(twostep_winner(3, 11, poly("p44")).verdict.status == Status::Unknown,
           "twostep must not apply to p44");
  c.finish();
}

void a6_solver_oracle() {
  Criterion c("A6 solver oracle");
  struct Run {
    std::string goal;
    int a, b;
    std::optional<int> final_c;
    int turns;
  };
  const std::vector<Run> runs = {{"t21", 1, 2, std::nullopt, 3}, {"p21", 1, 3, std::nullopt, 3},
                                 {"t31", 1, 1, std::nullopt, 4}, {"p31", 1, 1, std::nullopt, 4},
                                 {"p32", 1, 1, std::nullopt, 4}, {"p44", 1, 1, 2, 4},
                                 {"t43", 1, 1, 2, 4}};
  for (const Run& r : runs) {
    SolveConfig cfg;
    cfg.goal = poly(r.goal);
    cfg.game = {r.a, r.b, r.final_c};
    cfg.window = default_window(cfg.goal.board);
    cfg.max_turns = r.turns;
    SolveResult res;
    double s = run_timed([&] { res = solve(cfg); });
    c.expect(res.status == Status::MakerWins, r.goal + " solver run is not a maker win");
    c.expect(s < 60.0, r.goal + " took " + std::to_string(s) + " s");
  }
  // the solver never contradicts a breaker certificate
  Catalog cat = load_catalog(kData + "/catalog.txt");
  for (const CatalogEntry& e : cat.entries)
    for (const Claim& claim : e.claims) {
      if (claim.side != Status::BreakerWins) continue;
      SolveConfig cfg;
      cfg.goal = e.goal;
      cfg.game = {claim.a, claim.b, std::nullopt};
      cfg.window = e.goal.board == BoardKind::Square
                       ? Window{BoardKind::Square, 0, 0, 3, 3}
                       : Window{BoardKind::Triangular, 0, 0, 2, 3};
      cfg.max_turns = 2;
      SolveResult res = solve(cfg);
      c.expect(res.status != Status::MakerWins,
               e.name + " (" + std::to_string(claim.a) + "," + std::to_string(claim.b) +
                   "): solver contradicts a breaker claim");
    }
  c.finish();
}

void a7_catalog() {
  Criterion c("A7 catalog check");
  Catalog cat = load_catalog(kData + "/catalog.txt");
  // the two threshold tables, as published
  const std::vector<std::pair<std::string, std::vector<int>>> expected = {
      {"T11", {}},        {"T21", {2}},        {"T31", {1, 5}},     {"T41", {0, 3, 8}},
      {"T42", {0, 3, 8}}, {"T43", {0, 3, 8}},  {"P11", {}},         {"P21", {3}},
      {"P31", {1, 7}},    {"P32", {1, 7}},     {"P41", {1, 3, 11}}, {"P42", {1, 5, 11}},
      {"P43", {1, 3, 11}}, {"P44", {0, 3, 5}}, {"P45", {1, 3, 11}}};
  c.expect(cat.entries.size() == expected.size(), "catalog entry count");
  for (const auto& [name, tau] : expected) {
    bool found = false;
    for (const CatalogEntry& e : cat.entries)
      if (e.name == name) {
        found = true;
        c.expect(e.tau.finite == tau, name + " has the wrong threshold sequence");
      }
    c.expect(found, name + " missing from the catalog");
  }
  CatalogReport rep = run_all(cat, {});
  c.expect(rep.ok, "catalog verification failed");
  if (!rep.ok) {
    for (const EntryReport& e : rep.entries)
      for (const std::string& l : e.lines)
        if (l.find("FAIL") != std::string::npos) c.problems.push_back(e.name + ":" + l);
  }
  c.finish();
}

void a8_property_suites() {
  Criterion c("A8 property suites");
  // symmetry-group closure
  for (BoardKind board : {BoardKind::Square, BoardKind::Triangular}) {
    const auto& g = point_group(board);
    c.expect(static_cast<int>(g.size()) == (board == BoardKind::Square ? 8 : 12),
             "point group size");
    for (const Symmetry& a : g) {
      bool inv = false, closed = true;
      for (const Symmetry& b : g)
        if (compose(a, b) == Symmetry{board, {1, 0, 0, 1}, 0, 0}) inv = true;
      for (const Symmetry& b : g) {
        Symmetry ab = compose(a, b);
        bool member = false;
        for (const Symmetry& m : g)
          if (m == ab) member = true;
        closed = closed && member;
      }
      c.expect(inv && closed, "group closure or inverse fails");
    }
    // adjacency symmetry over a window
    Window w{board, -2, -2, 2, 2};
    for (const Cell& cell : w.cells()) {
      auto nbs = adjacent(board, cell);
      c.expect(static_cast<int>(nbs.size()) == delta(board), "degree");
      for (const Cell& d : nbs) {
        auto back = adjacent(board, d);
        c.expect(std::count(back.begin(), back.end(), cell) == 1, "adjacency not symmetric");
      }
    }
  }
  // canonical-form idempotence on the catalog animals
  for (const std::string name : {"t31", "t41", "t42", "t43", "p42", "p43", "p44", "p45"}) {
    Polyform p = poly(name);
    Polyform can = canonical(p);
    c.expect(canonical(can).cells == can.cells, "canonical not idempotent for " + name);
    for (const Symmetry& s : point_group(p.board)) {
      std::vector<Cell> img;
      for (const Cell& cell : p.cells) img.push_back(apply(s, cell));
      c.expect(canonical({p.board, normalize(img)}).cells == can.cells,
               "canonical not symmetry-invariant for " + name);
    }
  }
  // proof-step breaker-set monotonicity spot-checks
  {
    ProofSequence seq = load_proof(kData + "/proofs/t31_25.proof");
    StepAnalysis a = analyze_step(seq, 1);
    std::mt19937 rng(7);
    int n = static_cast<int>(a.neighborhood.size());
    for (int trial = 0; trial < 200; ++trial) {
      int size = static_cast<int>(rng() % a.x_size);
      std::vector<int> idx;
      while (static_cast<int>(idx.size()) < size) {
        int v = static_cast<int>(rng() % n);
        if (std::find(idx.begin(), idx.end(), v) == idx.end()) idx.push_back(v);
      }
      c.expect(a.holds_for(idx), "smaller breaker set fails a verified step");
    }
  }
  // paving periodic-reduction equivalence
  for (const std::string pav : {"sq_t11", "sq_t22", "tri_t11", "tri_t21"}) {
    Paving p = load_paving(kData + "/pavings/" + pav + ".paving");
    for (const std::string goal :
         p.board == BoardKind::Square ? std::vector<std::string>{"p21", "p44"}
                                      : std::vector<std::string>{"t21", "t31"}) {
      auto one = defeats(p, poly(goal), 1);
      auto nine = defeats(p, poly(goal), 3);
      c.expect(one.verdict.status == nine.verdict.status,
               "periodic reduction differs for " + pav + " vs " + goal);
    }
  }
  // solver window monotonicity
  {
    SolveConfig cfg;
    cfg.goal = poly("t21");
    cfg.game = {1, 2, std::nullopt};
    cfg.max_turns = 3;
    cfg.window = Window{BoardKind::Triangular, 0, 0, 2, 2};
    SolveResult tight = solve(cfg);
    cfg.window = Window{BoardKind::Triangular, 0, 0, 4, 4};
    SolveResult wide = solve(cfg);
    c.expect(tight.status == Status::MakerWins && wide.status == Status::MakerWins,
             "window monotonicity spot-check");
  }
  c.finish();
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  a1_proof_sequences();
  a2_pavings();
  a3_priority();
  a4_stage_diagram();
  a5_closed_form_rules();
  a6_solver_oracle();
  a7_catalog();
  a8_property_suites();
  double total = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s: %d criteria failed (%.2f s total)\n", failures == 0 ? "OK" : "FAILED",
              failures, total);
  return failures == 0 ? 0 : 1;
}
