#include <doctest.h>

#include <string>

#include "polywin/formats.hpp"
#include "polywin/solver.hpp"

using namespace polywin;

namespace {

const std::string kData = POLYWIN_DATA_DIR;

Polyform poly(const std::string& name) {
  return load_polyform(kData + "/polyforms/" + name + ".poly");
}

SolveResult run(const std::string& goal, int a, int b, int turns,
                std::optional<int> c = std::nullopt, std::optional<Window> w = std::nullopt) {
  SolveConfig cfg;
  cfg.goal = poly(goal);
  cfg.game = {a, b, c};
  cfg.window = w ? *w : default_window(cfg.goal.board);
  cfg.max_turns = turns;
  return solve(cfg);
}

}  // namespace

TEST_CASE("small maker wins") {
  CHECK(run("t21", 1, 2, 3).status == Status::MakerWins);
  CHECK(run("p21", 1, 3, 3).status == Status::MakerWins);
  CHECK(run("t31", 1, 1, 4).status == Status::MakerWins);
  CHECK(run("p11", 1, 9, 1).status == Status::MakerWins);
}

TEST_CASE("final-turn games") {
  SolveResult p44 = run("p44", 1, 1, 5, 2);
  CHECK(p44.status == Status::MakerWins);
  CHECK(p44.winning_turns == 3);
  SolveResult t43 = run("t43", 1, 1, 4, 2);
  CHECK(t43.status == Status::MakerWins);
  CHECK(t43.winning_turns == 4);
}

TEST_CASE("surrounded goals stay unknown on a window") {
  Window small{BoardKind::Square, 0, 0, 3, 3};
  CHECK(run("p21", 1, 4, 2, std::nullopt, small).status == Status::Unknown);
}

TEST_CASE("window monotonicity") {
  Window tight{BoardKind::Triangular, 0, 0, 2, 2};
  Window wide{BoardKind::Triangular, 0, 0, 3, 3};
  SolveResult a = run("t21", 1, 2, 3, std::nullopt, tight);
  SolveResult b = run("t21", 1, 2, 3, std::nullopt, wide);
  CHECK(a.status == Status::MakerWins);
  CHECK(b.status == Status::MakerWins);
  CHECK(b.winning_turns <= a.winning_turns);
}

TEST_CASE("breaker move sets: exact size agrees with all sizes") {
  for (const char* goal : {"t21", "t31"})
    for (int b = 1; b <= 2; ++b) {
      SolveConfig cfg;
      cfg.goal = poly(goal);
      cfg.game = {1, b, std::nullopt};
      cfg.window = Window{BoardKind::Triangular, 0, 0, 3, 3};
      cfg.max_turns = 3;
      SolveResult all = solve(cfg);
      cfg.exact_breaker_only = true;
      SolveResult exact = solve(cfg);
      CHECK(all.status == exact.status);
    }
}

TEST_CASE("node cap aborts are reported") {
  SolveConfig cfg;
  cfg.goal = poly("p41");
  cfg.game = {1, 1, std::nullopt};
  cfg.window = default_window(BoardKind::Square);
  cfg.max_turns = 6;
  cfg.node_cap = 100;
  SolveResult res = solve(cfg);
  CHECK(res.aborted);
  CHECK(res.status == Status::Unknown);
}

TEST_CASE("window must admit a placement") {
  SolveConfig cfg;
  cfg.goal = poly("p41");
  cfg.game = {1, 1, std::nullopt};
  cfg.window = Window{BoardKind::Square, 0, 0, 2, 2};
  CHECK_THROWS(solve(cfg));
}

TEST_CASE("two-mark maker turns") {
  Window tri{BoardKind::Triangular, 0, 0, 4, 3};
  SolveResult t41 = run("t41", 2, 3, 2, std::nullopt, tri);
  CHECK(t41.status == Status::MakerWins);
  CHECK(t41.winning_turns == 2);
  SolveResult t31 = run("t31", 2, 5, 2, std::nullopt, tri);
  CHECK(t31.status == Status::MakerWins);
  CHECK(t31.winning_turns == 2);
  CHECK(run("t31", 2, 1, 3).status == Status::MakerWins);
}
