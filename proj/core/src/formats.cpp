#include "polywin/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace polywin {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct LineReader {
  std::string file;
  std::ifstream in;
  int lineno = 0;

  explicit LineReader(const std::string& path) : file(path), in(path) {
    if (!in) throw std::runtime_error("cannot open " + path);
  }

  // next non-empty line with comments stripped, or nothing at EOF
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (!line.empty()) return line;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(file, lineno, msg); }
};

BoardKind parse_board(const std::string& word, LineReader& r) {
  if (word == "square") return BoardKind::Square;
  if (word == "triangular") return BoardKind::Triangular;
  r.fail("unknown board kind '" + word + "'");
}

// shared cell/offset scanning: (x,y) or (x,y,U|D)
struct CellParts {
  int x = 0, y = 0;
  int8_t t = 0;
  bool has_t = false;
};

std::optional<CellParts> scan_cell(const std::string& tok) {
  CellParts p;
  if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') return std::nullopt;
  std::string body = tok.substr(1, tok.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 2 && parts.size() != 3) return std::nullopt;
  try {
    p.x = std::stoi(parts[0]);
    p.y = std::stoi(parts[1]);
  } catch (...) {
    return std::nullopt;
  }
  if (parts.size() == 3) {
    p.has_t = true;
    if (parts[2] == "U" || parts[2] == "u") p.t = 0;
    else if (parts[2] == "D" || parts[2] == "d") p.t = 1;
    else return std::nullopt;
  }
  return p;
}

}  // namespace

Cell parse_cell(const std::string& token, BoardKind board) {
  auto p = scan_cell(token);
  if (!p) throw std::invalid_argument("bad cell '" + token + "'");
  if (board == BoardKind::Triangular && !p->has_t)
    throw std::invalid_argument("triangular cell needs an orientation: '" + token + "'");
  if (board == BoardKind::Square && p->has_t)
    throw std::invalid_argument("square cell with orientation: '" + token + "'");
  return {p->x, p->y, p->t};
}

Offset parse_offset(const std::string& token, BoardKind board) {
  Cell c = parse_cell(token, board);
  return {c.x, c.y, c.t};
}

std::string dirname_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return path.substr(0, slash);
}

Polyform load_polyform(const std::string& path) {
  LineReader r(path);
  auto first = r.next();
  if (!first) r.fail("empty polyform file");
  auto head = tokens(*first);
  if (head.size() != 2 || head[0] != "board") r.fail("expected 'board square|triangular'");
  Polyform p;
  p.board = parse_board(head[1], r);
  while (auto line = r.next()) {
    for (const std::string& tok : tokens(*line)) {
      try {
        p.cells.push_back(parse_cell(tok, p.board));
      } catch (const std::exception& e) {
        r.fail(e.what());
      }
    }
  }
  std::sort(p.cells.begin(), p.cells.end());
  try {
    validate(p);
  } catch (const std::exception& e) {
    throw ParseError(path, r.lineno, e.what());
  }
  return p;
}

Paving load_paving(const std::string& path) {
  LineReader r(path);
  auto first = r.next();
  if (!first) r.fail("empty paving file");
  auto head = tokens(*first);
  if (head.size() != 2 || head[0] != "board") r.fail("expected 'board square|triangular'");
  Paving p;
  p.board = parse_board(head[1], r);
  bool have_period = false;
  while (auto line = r.next()) {
    auto toks = tokens(*line);
    if (toks[0] == "period") {
      if (toks.size() != 3) r.fail("expected 'period (vx,vy) (vx,vy)'");
      auto v1 = scan_cell(toks[1]);
      auto v2 = scan_cell(toks[2]);
      if (!v1 || !v2 || v1->has_t || v2->has_t) r.fail("bad period vectors");
      p.period1 = {v1->x, v1->y};
      p.period2 = {v2->x, v2->y};
      have_period = true;
    } else if (toks[0] == "pair") {
      if (toks.size() != 3) r.fail("expected 'pair <cell> <cell>'");
      try {
        p.pairs.push_back({parse_cell(toks[1], p.board), parse_cell(toks[2], p.board)});
      } catch (const std::exception& e) {
        r.fail(e.what());
      }
    } else {
      r.fail("unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_period) r.fail("paving needs a period line");
  try {
    validate(p);
  } catch (const std::exception& e) {
    throw ParseError(path, r.lineno, e.what());
  }
  return p;
}

PriorityStrategy load_strategy(const std::string& path) {
  LineReader r(path);
  auto first = r.next();
  if (!first) r.fail("empty strategy file");
  auto head = tokens(*first);
  if (head.size() != 2 || head[0] != "board") r.fail("expected 'board square|triangular'");
  PriorityStrategy s;
  s.board = parse_board(head[1], r);

  auto parity_of = [&](const std::string& w) {
    if (w == "even") return RuleParity::Even;
    if (w == "odd") return RuleParity::Odd;
    if (w == "any") return RuleParity::Any;
    r.fail("unknown parity '" + w + "'");
  };

  PriorityRule* rule = nullptr;
  while (auto line = r.next()) {
    auto toks = tokens(*line);
    const std::string& kw = toks[0];
    bool all_assignments = std::all_of(toks.begin(), toks.end(), [](const std::string& t) {
      return t.find('=') != std::string::npos;
    });
    if (all_assignments) {
      // parameter line: a=2 b=4 per_set=2
      for (const auto& t : toks) {
        auto eq = t.find('=');
        std::string key = t.substr(0, eq);
        int val = 0;
        try {
          val = std::stoi(t.substr(eq + 1));
        } catch (...) {
          r.fail("bad parameter '" + t + "'");
        }
        if (key == "a") s.a = val;
        else if (key == "b") s.b = val;
        else if (key == "per_set") s.per_set = val;
        else r.fail("unknown parameter '" + key + "'");
      }
      continue;
    }
    if (kw == "history") {
      if (toks.size() < 3) r.fail("expected 'history even|odd <offsets>'");
      std::vector<Offset> offs;
      for (size_t i = 2; i < toks.size(); ++i) {
        try {
          offs.push_back(parse_offset(toks[i], s.board));
        } catch (const std::exception& e) {
          r.fail(e.what());
        }
      }
      s.history.push_back({parity_of(toks[1]), offs});
    } else if (kw == "rule") {
      s.rules.emplace_back();
      rule = &s.rules.back();
    } else if (kw == "parity") {
      if (!rule) r.fail("'parity' outside a rule");
      if (toks.size() != 2) r.fail("expected 'parity even|odd|any'");
      rule->parity = parity_of(toks[1]);
    } else if (kw == "require") {
      if (!rule) r.fail("'require' outside a rule");
      for (size_t i = 1; i < toks.size(); ++i) {
        try {
          rule->require.push_back(parse_offset(toks[i], s.board));
        } catch (const std::exception& e) {
          r.fail(e.what());
        }
      }
    } else if (kw == "respond") {
      if (!rule) r.fail("'respond' outside a rule");
      rule->respond.emplace_back();
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == ";") {
          rule->respond.emplace_back();
          continue;
        }
        try {
          rule->respond.back().push_back(parse_offset(toks[i], s.board));
        } catch (const std::exception& e) {
          r.fail(e.what());
        }
      }
    } else {
      r.fail("unknown directive '" + kw + "'");
    }
  }
  try {
    validate(s);
  } catch (const std::exception& e) {
    throw ParseError(path, r.lineno, e.what());
  }
  return s;
}

ProofSequence load_proof(const std::string& path) {
  LineReader r(path);
  auto first = r.next();
  if (!first) r.fail("empty certificate file");
  auto head = tokens(*first);
  if (head.empty() || head[0] != "game") r.fail("expected 'game a=.. b=.. [c=..]'");
  ProofSequence seq;
  for (size_t i = 1; i < head.size(); ++i) {
    auto eq = head[i].find('=');
    if (eq == std::string::npos) r.fail("bad game parameter '" + head[i] + "'");
    std::string key = head[i].substr(0, eq);
    int val = 0;
    try {
      val = std::stoi(head[i].substr(eq + 1));
    } catch (...) {
      r.fail("bad game parameter '" + head[i] + "'");
    }
    if (key == "a") seq.game.a = val;
    else if (key == "b") seq.game.b = val;
    else if (key == "c") seq.game.c = val;
    else r.fail("unknown game parameter '" + key + "'");
  }
  auto goal_line = r.next();
  if (!goal_line) r.fail("missing goal line");
  auto goal_toks = tokens(*goal_line);
  if (goal_toks.size() != 2 || goal_toks[0] != "goal") r.fail("expected 'goal <polyform-file>'");
  std::string goal_path = goal_toks[1];
  if (!goal_path.empty() && goal_path[0] != '/') goal_path = dirname_of(path) + "/" + goal_path;
  seq.goal = load_polyform(goal_path);
  seq.board = seq.goal.board;

  Situation* situation = nullptr;
  SituationComponent* component = nullptr;
  while (auto line = r.next()) {
    auto toks = tokens(*line);
    const std::string& kw = toks[0];
    if (kw == "situation") {
      seq.situations.emplace_back();
      situation = &seq.situations.back();
      component = nullptr;
    } else if (kw == "component") {
      if (!situation) r.fail("'component' outside a situation");
      situation->components.emplace_back();
      component = &situation->components.back();
    } else if (kw == "core:" || kw == "open:") {
      if (!component) r.fail("cell list outside a component");
      auto& list = kw == "core:" ? component->core : component->open;
      for (size_t i = 1; i < toks.size(); ++i) {
        try {
          list.push_back(parse_cell(toks[i], seq.board));
        } catch (const std::exception& e) {
          r.fail(e.what());
        }
      }
    } else {
      r.fail("unknown directive '" + kw + "'");
    }
  }
  try {
    validate(seq);
  } catch (const std::exception& e) {
    throw ParseError(path, r.lineno, e.what());
  }
  return seq;
}

Catalog load_catalog(const std::string& path) {
  LineReader r(path);
  Catalog cat;
  cat.path = path;
  std::string base = dirname_of(path);
  CatalogEntry* entry = nullptr;
  auto resolve = [&](const std::string& p) {
    return (!p.empty() && p[0] == '/') ? p : base + "/" + p;
  };
  while (auto line = r.next()) {
    auto toks = tokens(*line);
    const std::string& kw = toks[0];
    if (kw == "animal") {
      if (toks.size() != 3) r.fail("expected 'animal <name> <polyform-file>'");
      cat.entries.emplace_back();
      entry = &cat.entries.back();
      entry->name = toks[1];
      entry->poly_path = resolve(toks[2]);
      entry->goal = load_polyform(entry->poly_path);
    } else if (kw == "threshold") {
      if (!entry) r.fail("'threshold' before any animal");
      if (toks.size() < 2 || toks.back() != "inf")
        r.fail("threshold must end with 'inf'");
      for (size_t i = 1; i + 1 < toks.size(); ++i) {
        try {
          entry->tau.finite.push_back(std::stoi(toks[i]));
        } catch (...) {
          r.fail("bad threshold entry '" + toks[i] + "'");
        }
      }
    } else if (kw == "claim") {
      if (!entry) r.fail("'claim' before any animal");
      if (toks.size() < 5) r.fail("expected 'claim maker|breaker <a> <b> <witness>'");
      Claim c;
      if (toks[1] == "maker") c.side = Status::MakerWins;
      else if (toks[1] == "breaker") c.side = Status::BreakerWins;
      else r.fail("claim side must be maker or breaker");
      try {
        c.a = std::stoi(toks[2]);
      } catch (...) {
        r.fail("bad claim parameter");
      }
      if (toks[3] == "inf") {
        c.b_infinite = true;
      } else {
        try {
          c.b = std::stoi(toks[3]);
        } catch (...) {
          r.fail("bad claim parameter");
        }
      }
      size_t w = 4;
      if (toks[w] == "via-reduce") {
        c.witness.via_reduce = true;
        ++w;
        if (w >= toks.size()) r.fail("via-reduce needs a witness");
      }
      const std::string& kind = toks[w];
      if (kind == "rule") {
        if (w + 1 >= toks.size()) r.fail("rule witness needs a name");
        c.witness.kind = WitnessSpec::Kind::Rule;
        c.witness.rule = toks[w + 1];
      } else if (kind == "paving" || kind == "priority" || kind == "proofseq") {
        if (w + 1 >= toks.size()) r.fail(kind + " witness needs a path");
        c.witness.kind = kind == "paving"     ? WitnessSpec::Kind::Paving
                         : kind == "priority" ? WitnessSpec::Kind::Priority
                                              : WitnessSpec::Kind::Proof;
        c.witness.path = resolve(toks[w + 1]);
      } else if (kind == "solver") {
        c.witness.kind = WitnessSpec::Kind::Solver;
        for (size_t i = w + 1; i < toks.size(); ++i) {
          auto eq = toks[i].find('=');
          if (eq == std::string::npos) r.fail("bad solver parameter '" + toks[i] + "'");
          std::string key = toks[i].substr(0, eq);
          std::string val = toks[i].substr(eq + 1);
          if (key == "window") {
            auto x = val.find('x');
            if (x == std::string::npos) r.fail("window must look like WxH");
            try {
              c.witness.win_w = std::stoi(val.substr(0, x));
              c.witness.win_h = std::stoi(val.substr(x + 1));
            } catch (...) {
              r.fail("bad window '" + val + "'");
            }
          } else if (key == "turns") {
            c.witness.turns = std::stoi(val);
          } else if (key == "c") {
            c.witness.c = std::stoi(val);
          } else {
            r.fail("unknown solver parameter '" + key + "'");
          }
        }
      } else {
        r.fail("unknown witness kind '" + kind + "'");
      }
      entry->claims.push_back(c);
    } else {
      r.fail("unknown directive '" + kw + "'");
    }
  }
  return cat;
}

}  // namespace polywin
