#include "polywin/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "polywin/paving.hpp"
#include "polywin/priority.hpp"
#include "polywin/proofseq.hpp"
#include "polywin/solver.hpp"

namespace polywin {

namespace {

std::string game_str(int a, int b, bool binf = false) {
  return "(" + std::to_string(a) + "," + (binf ? "inf" : std::to_string(b)) + ")";
}

Window witness_window(const WitnessSpec& w, BoardKind board) {
  return {board, 0, 0, w.win_w - 1, w.win_h - 1};
}

GameSpec premise_game(const Claim& claim) {
  GameSpec g;
  if (claim.witness.via_reduce) {
    g.a = 1;
    g.b = claim.b / claim.a;
    g.c = claim.witness.c;
  } else {
    g.a = claim.a;
    g.b = claim.b;
    g.c = claim.witness.c;
  }
  return g;
}

}  // namespace

ClaimOutcome verify_claim(const CatalogEntry& entry, const Claim& claim,
                          const CatalogOptions& opts) {
  const Polyform& goal = entry.goal;
  const WitnessSpec& w = claim.witness;
  using Kind = WitnessSpec::Kind;
  switch (w.kind) {
    case Kind::Rule: {
      if (w.rule == "trivial") {
        if (claim.side != Status::MakerWins) return {false, "trivial rule proves maker wins"};
        if (!claim.b_infinite) return {false, "trivial rule carries infinite-b claims"};
        if (!single_turn_winner(claim.a, goal)) return {false, "goal does not fit in one turn"};
        return {true, "goal fits into a single turn"};
      }
      if (w.rule == "blea") {
        if (claim.side != Status::MakerWins) return {false, "blea rule proves maker wins"};
        if (!blea_winner(claim.a, claim.b)) return {false, "needs b < a"};
        return {true, "b < a"};
      }
      if (w.rule == "surround") {
        if (claim.side != Status::BreakerWins) return {false, "surround proves breaker wins"};
        Verdict v = surround_loser(claim.a, claim.b, goal);
        if (v.status != Status::BreakerWins) return {false, "surrounding condition fails"};
        return {true, "a < |A| and a*delta <= b"};
      }
      if (w.rule == "twostep") {
        if (claim.side != Status::MakerWins) return {false, "twostep proves maker wins"};
        TwoStepResult t = twostep_winner(claim.a, claim.b, goal);
        if (t.verdict.status != Status::MakerWins)
          return {false, "no placement family large enough (k=" + std::to_string(t.k) + ")"};
        return {true, "k=" + std::to_string(t.k)};
      }
      return {false, "unknown rule '" + w.rule + "'"};
    }
    case Kind::Paving: {
      if (claim.side != Status::BreakerWins || claim.a != 1)
        return {false, "pavings witness breaker wins of (1,b) games"};
      Paving paving = load_paving(w.path);
      PavingResult res = defeats(paving, goal);
      if (res.verdict.status != Status::BreakerWins) {
        std::string cx = res.counterexample
                             ? " counterexample anchored at " +
                                   to_string(res.counterexample->front(), goal.board)
                             : "";
        return {false, "placement scan fails;" + cx};
      }
      if (res.degree > claim.b)
        return {false, "paving degree " + std::to_string(res.degree) + " above claimed b"};
      return {true, "degree " + std::to_string(res.degree)};
    }
    case Kind::Priority: {
      if (claim.side != Status::BreakerWins) return {false, "priority witnesses breaker wins"};
      PriorityStrategy strat = load_strategy(w.path);
      PriorityVerifyOptions popts;
      popts.position_cap = opts.position_cap;
      PriorityVerifyResult res = verify_breaker(goal, strat, claim.a, claim.b, popts);
      if (res.aborted) return {false, "position cap exceeded"};
      if (res.status != Status::BreakerWins) return {false, res.message};
      return {true, std::to_string(res.placements) + " placements, " +
                        std::to_string(res.terminals.size()) + " terminal classes"};
    }
    case Kind::Proof: {
      if (claim.side != Status::MakerWins) return {false, "certificates witness maker wins"};
      ProofSequence seq = load_proof(w.path);
      if (!congruent(seq.goal, goal)) return {false, "certificate goal differs from entry"};
      SequenceReport rep = verify_sequence(seq);
      if (rep.verdict.status != Status::MakerWins) return {false, rep.message};
      if (claim.b_infinite) return {false, "certificates carry finite-b claims"};
      if (w.via_reduce) {
        if (!implies_plain_win(seq.game, claim.a, claim.b))
          return {false, "certificate game does not reduce to the claim"};
        return {true, "verified and reduced"};
      }
      if (seq.game.a != claim.a || seq.game.b != claim.b ||
          seq.game.c.value_or(claim.a) != claim.a)
        return {false, "certificate game differs from the claim"};
      return {true, "verified"};
    }
    case Kind::Solver: {
      if (claim.side != Status::MakerWins) return {false, "the solver only proves maker wins"};
      if (claim.b_infinite) return {false, "solver runs carry finite-b claims"};
      SolveConfig cfg;
      cfg.window = witness_window(w, goal.board);
      cfg.goal = goal;
      cfg.game = premise_game(claim);
      cfg.max_turns = w.turns;
      cfg.node_cap = opts.solver_node_cap;
      if (w.via_reduce && !implies_plain_win(cfg.game, claim.a, claim.b))
        return {false, "solver premise does not reduce to the claim"};
      SolveResult res = solve(cfg);
      if (res.aborted) return {false, "node cap exceeded"};
      if (res.status != Status::MakerWins) return {false, "no forced win on the window"};
      return {true, "win in " + std::to_string(res.winning_turns) + " turns"};
    }
  }
  return {false, "unreachable"};
}

namespace {

// threshold value as a comparable number, infinity as a large sentinel
long long tau_at(const ThresholdSequence& t, int i) {
  if (i <= static_cast<int>(t.finite.size())) return t.finite[i - 1];
  return 1'000'000;
}

EntryReport check_entry(const CatalogEntry& entry, const CatalogOptions& opts) {
  EntryReport rep;
  rep.name = entry.name;
  rep.ok = true;
  auto note = [&](bool ok, const std::string& line) {
    rep.lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + line);
    if (!ok) rep.ok = false;
  };

  // duplicate or contradictory claims are configuration errors
  std::set<std::tuple<int, int, int, int>> seen;
  for (const Claim& c : entry.claims) {
    auto key = std::make_tuple(c.side == Status::MakerWins ? 0 : 1, c.a,
                               c.b_infinite ? -1 : c.b, 0);
    if (!seen.insert(key).second) note(false, "duplicate claim " + game_str(c.a, c.b, c.b_infinite));
  }
  for (const Claim& c : entry.claims)
    if (c.side == Status::MakerWins && !c.b_infinite &&
        seen.count(std::make_tuple(1, c.a, c.b, 0)))
      note(false, "contradictory claims at " + game_str(c.a, c.b));

  EvidenceGrid grid;
  for (const Claim& c : entry.claims) {
    ClaimOutcome out = verify_claim(entry, c, opts);
    std::string kind;
    switch (c.witness.kind) {
      case WitnessSpec::Kind::Rule: kind = "rule " + c.witness.rule; break;
      case WitnessSpec::Kind::Paving: kind = "paving"; break;
      case WitnessSpec::Kind::Priority: kind = "priority"; break;
      case WitnessSpec::Kind::Proof: kind = "proofseq"; break;
      case WitnessSpec::Kind::Solver: kind = "solver"; break;
    }
    if (c.witness.via_reduce) kind = "via-reduce " + kind;
    note(out.ok, std::string(c.side == Status::MakerWins ? "maker " : "breaker ") +
                     game_str(c.a, c.b, c.b_infinite) + " [" + kind + "] " + out.detail);
    if (out.ok && !c.b_infinite) grid.add(c.side, c.a, c.b);
    if (out.ok && c.b_infinite && c.side == Status::MakerWins)
      for (int b = 0; b <= grid.max_b; ++b) grid.add(Status::MakerWins, c.a, b);
  }
  grid.close();
  auto conflicts = grid.conflicts();
  note(conflicts.empty(), "closure consistency (" + std::to_string(conflicts.size()) +
                              " conflicting cells)");

  bool tau_ok = true;
  for (const ThresholdIssue& issue : check_threshold(entry.tau, entry.goal, grid)) {
    if (issue.fatal) {
      tau_ok = false;
      note(false, "threshold: " + issue.message);
    } else {
      rep.lines.push_back("  note threshold: " + issue.message);
    }
  }
  if (tau_ok) rep.lines.push_back("  ok   threshold witnessed and consistent");

  if (opts.cross_check) {
    for (const Claim& c : entry.claims) {
      if (c.b_infinite) continue;
      if (c.side == Status::MakerWins && entry.goal.size() <= 3 && c.b <= 3) {
        SolveConfig cfg;
        cfg.window = default_window(entry.goal.board);
        cfg.goal = entry.goal;
        cfg.game = {c.a, c.b, std::nullopt};
        cfg.max_turns = 4;
        cfg.node_cap = opts.solver_node_cap;
        SolveResult res = solve(cfg);
        note(res.status == Status::MakerWins,
             "cross-check maker " + game_str(c.a, c.b) + ": solver " + to_string(res.status));
      }
      if (c.side == Status::BreakerWins) {
        SolveConfig cfg;
        cfg.window = entry.goal.board == BoardKind::Square ? Window{BoardKind::Square, 0, 0, 3, 3}
                                                           : Window{BoardKind::Triangular, 0, 0, 2, 3};
        cfg.goal = entry.goal;
        cfg.game = {c.a, c.b, std::nullopt};
        cfg.max_turns = 2;
        cfg.node_cap = opts.solver_node_cap;
        SolveResult res = solve(cfg);
        note(res.status != Status::MakerWins,
             "cross-check breaker " + game_str(c.a, c.b) + ": solver " + to_string(res.status));
      }
    }
  }
  return rep;
}

}  // namespace

std::string CatalogReport::text() const {
  std::ostringstream out;
  for (const EntryReport& e : entries) {
    out << "ENTRY " << e.name << (e.ok ? "" : "  ** FAILED **") << "\n";
    for (const std::string& l : e.lines) out << l << "\n";
  }
  for (const std::string& l : global_lines) out << l << "\n";
  out << (ok ? "CATALOG OK" : "CATALOG FAILED") << "\n";
  return out.str();
}

CatalogReport run_all(const Catalog& cat, const CatalogOptions& opts) {
  CatalogReport rep;
  rep.entries.resize(cat.entries.size());

  // entries are independent; reports are merged in catalog order
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < cat.entries.size(); ++i)
      rep.entries[i] = check_entry(cat.entries[i], opts);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= cat.entries.size()) break;
          rep.entries[i] = check_entry(cat.entries[i], opts);
        }
      });
    for (auto& t : pool) t.join();
  }

  rep.ok = true;
  for (const EntryReport& e : rep.entries)
    if (!e.ok) rep.ok = false;

  // subform dominance between catalog animals on a shared board
  for (const CatalogEntry& small : cat.entries)
    for (const CatalogEntry& big : cat.entries) {
      if (&small == &big || small.goal.board != big.goal.board) continue;
      if (small.goal.size() >= big.goal.size()) continue;
      if (!is_subform(small.goal, big.goal)) continue;
      int upto = static_cast<int>(
          std::max(small.tau.finite.size(), big.tau.finite.size()));
      bool ok = true;
      for (int i = 1; i <= upto; ++i)
        if (tau_at(small.tau, i) < tau_at(big.tau, i)) ok = false;
      rep.global_lines.push_back(std::string(ok ? "ok   " : "FAIL ") + "subform dominance " +
                                 small.name + " <= " + big.name);
      if (!ok) rep.ok = false;
    }
  return rep;
}

}  // namespace polywin
