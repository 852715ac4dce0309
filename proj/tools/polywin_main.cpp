// polywin: verification toolkit for biased weak polyform achievement games.
//
// Subcommands check maker certificates (proof sequences), breaker
// certificates (pavings and priority strategies), compute stage-diagram turn
// bounds, run the bounded-board solver and validate the whole catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polywin/catalog.hpp"
#include "polywin/formats.hpp"
#include "polywin/paving.hpp"
#include "polywin/priority.hpp"
#include "polywin/proofseq.hpp"
#include "polywin/solver.hpp"
#include "polywin/stages.hpp"

namespace {

using namespace polywin;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

uint64_t env_cap(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

std::string cells_str(const std::vector<Cell>& cells, BoardKind board) {
  std::string out;
  for (const Cell& c : cells) {
    if (!out.empty()) out += " ";
    out += to_string(c, board);
  }
  return out;
}

Window parse_window(const std::string& spec, BoardKind board) {
  auto x = spec.find('x');
  if (x == std::string::npos) throw std::invalid_argument("window must look like WxH");
  int w = std::stoi(spec.substr(0, x));
  int h = std::stoi(spec.substr(x + 1));
  return {board, 0, 0, w - 1, h - 1};
}

int cmd_verify_proof(const std::string& path) {
  ProofSequence seq = load_proof(path);
  SequenceReport rep = verify_sequence(seq);
  std::cout << "certificate: " << path << "\n";
  std::cout << "game: a=" << seq.game.a << " b=" << seq.game.b;
  if (seq.game.c) std::cout << " c=" << *seq.game.c;
  std::cout << "\nsituations: " << seq.situations.size() << "\n";
  if (rep.verdict.status == Status::MakerWins) {
    std::cout << "result: MakerWins\n";
    return 0;
  }
  std::cout << "result: Unknown";
  if (rep.failing_step >= 0) {
    std::cout << " (step " << rep.failing_step << " violated by breaker set:";
    for (const TaggedCell& tc : rep.violating)
      std::cout << " " << tc.component << ":" << to_string(tc.cell, seq.board);
    std::cout << ")";
  }
  std::cout << "\n" << rep.message << "\n";
  return 1;
}

int cmd_verify_paving(const std::string& paving_path, const std::string& goal_path) {
  Paving paving = load_paving(paving_path);
  Polyform goal = load_polyform(goal_path);
  PavingResult res = defeats(paving, goal);
  std::cout << "paving: " << paving_path << " degree " << res.degree << "\n";
  if (res.verdict.status == Status::BreakerWins) {
    std::cout << "result: BreakerWins(1," << res.degree << ")\n";
    return 0;
  }
  std::cout << "result: Unknown\n";
  if (res.counterexample)
    std::cout << "pair-free placement: " << cells_str(*res.counterexample, goal.board) << "\n";
  return 1;
}

int cmd_verify_priority(const std::string& strat_path, const std::string& goal_path, int a,
                        int b, int aux_level) {
  PriorityStrategy strat = load_strategy(strat_path);
  Polyform goal = load_polyform(goal_path);
  if (a <= 0) a = strat.a;
  if (b < 0) b = strat.b;
  PriorityVerifyOptions opts;
  opts.aux_level = aux_level;
  opts.position_cap = env_cap("POLYWIN_POSITION_CAP", opts.position_cap);
  PriorityVerifyResult res = verify_breaker(goal, strat, a, b, opts);
  std::cout << "strategy: " << strat_path << " at (" << a << "," << b << ")\n";
  std::cout << "placements: " << res.placements << "\n";
  std::cout << "positions: " << res.positions << "\n";
  if (res.aborted) {
    std::cout << "result: aborted (position cap)\n";
    return 2;
  }
  if (res.status == Status::BreakerWins) {
    std::cout << "result: BreakerWins(" << a << "," << b << ")\n";
    std::cout << "terminal positions: " << res.terminals.size() << "\n";
    int i = 0;
    for (const TrackedPosition& t : res.terminals) {
      std::cout << "terminal " << ++i << ":\n";
      std::cout << "  maker:   " << cells_str(t.M, goal.board) << "\n";
      std::cout << "  breaker: " << cells_str(t.B, goal.board) << "\n";
      std::cout << "  open:    " << cells_str(t.E, goal.board) << "\n";
    }
    return 0;
  }
  std::cout << "result: Unknown\n";
  std::cout << res.message << "\n";
  for (const auto& turn : res.surviving_line)
    std::cout << "  maker turn: " << cells_str(turn, goal.board) << "\n";
  return 1;
}

int cmd_trace_priority(const std::string& strat_path, const std::string& goal_path, int a, int b,
                       const std::vector<std::string>& turn_specs) {
  PriorityStrategy strat = load_strategy(strat_path);
  Polyform goal = load_polyform(goal_path);
  if (a <= 0) a = strat.a;
  if (b < 0) b = strat.b;
  std::vector<std::vector<Cell>> moves;
  for (const std::string& spec : turn_specs) {
    std::vector<Cell> turn;
    std::stringstream in(spec);
    std::string tok;
    while (in >> tok) turn.push_back(parse_cell(tok, goal.board));
    moves.push_back(turn);
  }
  TraceResult res = trace_sequence(goal, strat, a, b, moves);
  int turn_no = 0;
  for (const TraceTurn& turn : res.turns) {
    std::cout << "turn " << ++turn_no << ": maker " << cells_str(turn.marks, goal.board) << "\n";
    for (const TraceAction& act : turn.actions) {
      std::cout << "  " << to_string(act.mark, goal.board)
                << (act.is_goal ? " [goal]" : " [history]");
      if (act.rule_index >= 0) std::cout << " rule " << act.rule_index + 1;
      if (!act.breaker_marks.empty())
        std::cout << " breaker " << cells_str(act.breaker_marks, goal.board);
      if (act.ruined) std::cout << " RUINED";
      std::cout << "\n";
    }
  }
  if (!res.error.empty()) {
    std::cout << "error: " << res.error << "\n";
    return 2;
  }
  std::cout << (res.ruined ? "line ruined at turn " + std::to_string(res.ruin_turn)
                           : "line survives")
            << "\n";
  return 0;
}

int cmd_stage_diagram(const std::string& b_list, const std::string& l_list,
                      const std::string& dot_path) {
  StageParams params{parse_int_list(b_list), parse_int_list(l_list)};
  StageDiagram d = build_diagram(params);
  for (const auto& [p, v] : d.vertices) {
    std::cout << "(";
    for (size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p[i];
    std::cout << ") q=(";
    for (size_t i = 0; i < v.q.size(); ++i) std::cout << (i ? "," : "") << v.q[i];
    std::cout << ")";
    if (v.winning) std::cout << " winning";
    else std::cout << " n=" << v.n << (v.win_adjacent ? " (dashed)" : "");
    std::cout << "\n";
  }
  std::cout << "total bound: " << d.total_bound << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << "digraph stages {\n";
    auto name = [](const std::vector<int>& p) {
      std::string s = "\"";
      for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
      return s + "\"";
    };
    for (const auto& [p, v] : d.vertices) {
      if (v.winning) continue;
      for (size_t i = 0; i < p.size(); ++i) {
        std::vector<int> np = p;
        ++np[i];
        if (!d.vertices.count(np)) continue;
        out << "  " << name(p) << " -> " << name(np) << " [label=" << v.n
            << (v.win_adjacent ? ",style=dashed" : "") << "];\n";
      }
    }
    out << "}\n";
  }
  return 0;
}

int cmd_solve(const std::string& goal_path, int a, int b, int c, const std::string& window,
              int max_turns) {
  SolveConfig cfg;
  cfg.goal = load_polyform(goal_path);
  cfg.game.a = a;
  cfg.game.b = b;
  if (c > 0) cfg.game.c = c;
  cfg.window = window.empty() ? default_window(cfg.goal.board)
                              : parse_window(window, cfg.goal.board);
  cfg.max_turns = max_turns;
  cfg.node_cap = env_cap("POLYWIN_NODE_CAP", cfg.node_cap);
  SolveResult res = solve(cfg);
  std::cout << "goal: " << goal_path << "\n";
  std::cout << "game: (" << (c > 0 ? std::to_string(a) + "->" + std::to_string(c)
                                   : std::to_string(a))
            << "," << b << ") window " << (cfg.window.x1 + 1) << "x" << (cfg.window.y1 + 1)
            << " max-turns " << max_turns << "\n";
  std::cout << "nodes: " << res.nodes << "\n";
  if (res.aborted) {
    std::cout << "result: aborted (node cap)\n";
    return 2;
  }
  if (res.status == Status::MakerWins) {
    std::cout << "result: MakerWins in " << res.winning_turns << " turns\n";
    return 0;
  }
  std::cout << "result: Unknown\n";
  return 1;
}

int cmd_perimeter(const std::string& goal_path) {
  Polyform goal = load_polyform(goal_path);
  std::cout << site_perimeter(goal) << "\n";
  return 0;
}

int cmd_catalog_check(const std::string& path, int jobs, bool no_cross,
                      const std::string& json_path) {
  Catalog cat = load_catalog(path);
  CatalogOptions opts;
  opts.jobs = jobs;
  opts.cross_check = !no_cross;
  opts.position_cap = env_cap("POLYWIN_POSITION_CAP", opts.position_cap);
  opts.solver_node_cap = env_cap("POLYWIN_NODE_CAP", opts.solver_node_cap);
  CatalogReport rep = run_all(cat, opts);
  std::cout << rep.text();
  if (!json_path.empty()) {
    nlohmann::json out;
    out["ok"] = rep.ok;
    out["entries"] = nlohmann::json::array();
    for (const EntryReport& e : rep.entries)
      out["entries"].push_back({{"name", e.name}, {"ok", e.ok}, {"lines", e.lines}});
    out["global"] = rep.global_lines;
    std::ofstream f(json_path);
    f << out.dump(2) << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for biased weak polyform achievement games"};
  app.require_subcommand(1);

  std::string proof_path;
  auto* vp = app.add_subcommand("verify-proof", "verify a maker proof-sequence certificate");
  vp->add_option("file", proof_path, "certificate file")->required();

  std::string paving_path, paving_goal;
  auto* vpav = app.add_subcommand("verify-paving", "verify a breaker paving against a goal");
  vpav->add_option("paving", paving_path)->required();
  vpav->add_option("goal", paving_goal)->required();

  std::string strat_path, strat_goal;
  int pa = 0, pb = -1, aux = 0;
  auto* vpri = app.add_subcommand("verify-priority", "verify a breaker priority strategy");
  vpri->add_option("strategy", strat_path)->required();
  vpri->add_option("goal", strat_goal)->required();
  vpri->add_option("--a", pa, "maker marks per turn (default: strategy file)");
  vpri->add_option("--b", pb, "breaker marks per turn (default: strategy file)");
  vpri->add_option("--aux-level", aux, "history model strength (0 or 1)");

  std::string trace_strat, trace_goal;
  int ta = 0, tb = -1;
  std::vector<std::string> trace_turns;
  auto* vtr = app.add_subcommand("trace-priority", "replay a maker line through a strategy");
  vtr->add_option("strategy", trace_strat)->required();
  vtr->add_option("goal", trace_goal)->required();
  vtr->add_option("--a", ta);
  vtr->add_option("--b", tb);
  vtr->add_option("--turn", trace_turns, "cells of one maker turn, e.g. \"(0,1) (1,1)\"")
      ->required();

  std::string b_list, l_list, dot_path;
  auto* vst = app.add_subcommand("stage-diagram", "turn bounds for composed strategies");
  vst->add_option("--b", b_list, "breaker marks per part, comma separated")->required();
  vst->add_option("--l", l_list, "strategy lengths, comma separated")->required();
  vst->add_option("--dot", dot_path, "write a graph description file");

  std::string solve_goal, solve_window;
  int sa = 1, sb = 0, sc = 0, sturns = 6;
  auto* vsolve = app.add_subcommand("solve", "bounded-board maker-win search");
  vsolve->add_option("--goal", solve_goal)->required();
  vsolve->add_option("--a", sa)->required();
  vsolve->add_option("--b", sb)->required();
  vsolve->add_option("--c", sc, "final-turn maker marks");
  vsolve->add_option("--window", solve_window, "WxH, default per board");
  vsolve->add_option("--max-turns", sturns);

  std::string peri_goal;
  auto* vperi = app.add_subcommand("perimeter", "site-perimeter of a polyform");
  vperi->add_option("goal", peri_goal)->required();

  std::string cat_path, cat_json;
  int jobs = 1;
  bool no_cross = false;
  auto* vcat = app.add_subcommand("catalog", "catalog operations");
  auto* vcheck = vcat->add_subcommand("check", "verify every witness and threshold");
  vcheck->add_option("file", cat_path, "catalog file")->required();
  vcheck->add_option("--jobs", jobs, "parallel entries");
  vcheck->add_flag("--no-cross-check", no_cross, "skip the solver cross checks");
  vcheck->add_option("--json", cat_json, "also write a structured report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (vp->parsed()) return cmd_verify_proof(proof_path);
    if (vpav->parsed()) return cmd_verify_paving(paving_path, paving_goal);
    if (vpri->parsed())
      return cmd_verify_priority(strat_path, strat_goal, pa, pb, aux);
    if (vtr->parsed()) return cmd_trace_priority(trace_strat, trace_goal, ta, tb, trace_turns);
    if (vst->parsed()) return cmd_stage_diagram(b_list, l_list, dot_path);
    if (vsolve->parsed()) return cmd_solve(solve_goal, sa, sb, sc, solve_window, sturns);
    if (vperi->parsed()) return cmd_perimeter(peri_goal);
    if (vcat->parsed() && vcheck->parsed()) return cmd_catalog_check(cat_path, jobs, no_cross, cat_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
