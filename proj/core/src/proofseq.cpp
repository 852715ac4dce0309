#include "polywin/proofseq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace polywin {

int Situation::total_core() const {
  int n = 0;
  for (const auto& c : components) n += static_cast<int>(c.core.size());
  return n;
}

void validate(const ProofSequence& seq) {
  if (seq.situations.empty()) throw std::invalid_argument("certificate has no situations");
  if (seq.game.a < 1 || seq.game.b < 0) throw std::invalid_argument("bad game parameters");
  if (seq.game.c && *seq.game.c < seq.game.a)
    throw std::invalid_argument("final-turn mark count below a");
  for (const Situation& s : seq.situations) {
    if (s.components.empty()) throw std::invalid_argument("situation with no components");
    for (const SituationComponent& comp : s.components) {
      if (comp.core.empty()) throw std::invalid_argument("component with empty core");
      std::set<Cell> core(comp.core.begin(), comp.core.end());
      for (const Cell& c : comp.open)
        if (core.count(c)) throw std::invalid_argument("core and open sets overlap");
    }
  }
  const Situation& s0 = seq.situations.front();
  if (s0.components.size() != 1) throw std::invalid_argument("s0 must have one component");
  if (!s0.components[0].open.empty()) throw std::invalid_argument("s0 must have empty open set");
  Polyform core0{seq.board, normalize(s0.components[0].core)};
  if (!congruent(core0, seq.goal))
    throw std::invalid_argument("s0 core is not congruent to the goal");
}

namespace {

constexpr int kMaxNeighborhood = 192;

int mask_words(int n) { return (n + 63) / 64; }

void set_bit(std::vector<uint64_t>& m, int i) { m[i / 64] |= uint64_t{1} << (i % 64); }

bool intersects(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool subset(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

struct ComponentIndex {
  std::set<Cell> core;
  std::set<Cell> all;                // core plus open
  std::map<Cell, int> open_index;    // cell -> global neighborhood index
};

// embeddings of component gamma into target component delta: image of the
// core inside delta's footprint; returns the used neighborhood indices and
// the number of fresh maker marks, or nothing when no placement fits
struct Embedding {
  std::vector<uint64_t> used;
  int marks = 0;
};

std::vector<Embedding> embeddings(BoardKind board, const SituationComponent& gamma,
                                  const ComponentIndex& delta, int words) {
  std::vector<Embedding> out;
  std::set<std::pair<std::vector<Cell>, std::vector<Cell>>> seen;
  for (const Symmetry& sym : point_group(board)) {
    std::vector<Cell> core_img;
    core_img.reserve(gamma.core.size());
    for (const Cell& c : gamma.core) core_img.push_back(apply(sym, c));
    std::vector<Cell> open_img;
    open_img.reserve(gamma.open.size());
    for (const Cell& c : gamma.open) open_img.push_back(apply(sym, c));
    // anchor the first core cell on every cell of the target footprint
    for (const Cell& target : delta.all) {
      if (board == BoardKind::Triangular && core_img.front().t != target.t) continue;
      int dx = target.x - core_img.front().x;
      int dy = target.y - core_img.front().y;
      std::vector<Cell> core_t, open_t;
      core_t.reserve(core_img.size());
      bool ok = true;
      for (const Cell& c : core_img) {
        Cell m{c.x + dx, c.y + dy, c.t};
        if (!delta.all.count(m)) {
          ok = false;
          break;
        }
        core_t.push_back(m);
      }
      if (!ok) continue;
      for (const Cell& c : open_img) {
        Cell m{c.x + dx, c.y + dy, c.t};
        if (!delta.all.count(m)) {
          ok = false;
          break;
        }
        open_t.push_back(m);
      }
      if (!ok) continue;
      std::sort(core_t.begin(), core_t.end());
      std::sort(open_t.begin(), open_t.end());
      if (!seen.insert({core_t, open_t}).second) continue;
      Embedding e;
      e.used.assign(words, 0);
      e.marks = 0;
      for (const Cell& c : core_t) {
        if (delta.core.count(c)) continue;
        ++e.marks;  // a maker mark on an open cell
        set_bit(e.used, delta.open_index.at(c));
      }
      for (const Cell& c : open_t)
        if (!delta.core.count(c)) set_bit(e.used, delta.open_index.at(c));
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

StepAnalysis analyze_step(const ProofSequence& seq, int i) {
  if (i < 1 || i >= static_cast<int>(seq.situations.size()))
    throw std::out_of_range("step index");
  const Situation& si = seq.situations[i];

  StepAnalysis a;
  std::vector<ComponentIndex> targets(si.components.size());
  for (size_t d = 0; d < si.components.size(); ++d) {
    const auto& comp = si.components[d];
    targets[d].core.insert(comp.core.begin(), comp.core.end());
    targets[d].all.insert(comp.core.begin(), comp.core.end());
    for (const Cell& c : comp.open) {
      targets[d].all.insert(c);
      targets[d].open_index[c] = static_cast<int>(a.neighborhood.size());
      a.neighborhood.push_back({static_cast<int>(d), c});
    }
  }
  int n = static_cast<int>(a.neighborhood.size());
  if (n > kMaxNeighborhood) throw std::invalid_argument("neighborhood too large");
  int words = std::max(1, mask_words(n));
  a.x_size = std::min(seq.game.b, n);

  // enumerate descents to each earlier situation
  for (int j = 0; j < i; ++j) {
    const Situation& sj = seq.situations[j];
    int m = (j == 0 && seq.game.c) ? *seq.game.c : seq.game.a;
    int g = static_cast<int>(sj.components.size());
    int d_count = static_cast<int>(si.components.size());
    // per-component embedding choices, plus "fresh" for spawned components
    std::vector<std::vector<std::vector<Embedding>>> options(g);
    for (int gi = 0; gi < g; ++gi) {
      options[gi].resize(d_count);
      for (int di = 0; di < d_count; ++di)
        options[gi][di] = embeddings(seq.board, sj.components[gi], targets[di], words);
    }
    // assign components of s_j injectively to targets or fresh locations
    std::vector<int> assign(g, -2);
    std::vector<char> taken(d_count, 0);
    std::vector<std::vector<uint64_t>> chosen(g);
    std::function<void(int, int)> rec = [&](int gi, int marks) {
      if (marks > m) return;
      if (gi == g) {
        std::vector<uint64_t> used(words, 0);
        for (int k = 0; k < g; ++k)
          if (assign[k] >= 0)
            for (int w = 0; w < words; ++w) used[w] |= chosen[k][w];
        // drop dominated descents later; collect now
        a.descents.push_back(std::move(used));
        return;
      }
      const auto& comp = sj.components[gi];
      // fresh spawn: the whole core is marked this turn at a far location
      assign[gi] = -1;
      rec(gi + 1, marks + static_cast<int>(comp.core.size()));
      for (int di = 0; di < d_count; ++di) {
        if (taken[di]) continue;
        taken[di] = 1;
        assign[gi] = di;
        for (const Embedding& e : options[gi][di]) {
          chosen[gi] = e.used;
          rec(gi + 1, marks + e.marks);
        }
        taken[di] = 0;
      }
      assign[gi] = -2;
    };
    rec(0, 0);
  }

  // prune duplicates and dominated masks: a descent needing a superset of
  // another's cells can never help more
  std::sort(a.descents.begin(), a.descents.end());
  a.descents.erase(std::unique(a.descents.begin(), a.descents.end()), a.descents.end());
  std::vector<std::vector<uint64_t>> kept;
  for (const auto& d : a.descents) {
    bool dominated = false;
    for (const auto& k : kept)
      if (subset(k, d)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(d);
  }
  a.descents = std::move(kept);
  return a;
}

bool StepAnalysis::holds_for(const std::vector<int>& x_indices) const {
  int n = static_cast<int>(neighborhood.size());
  std::vector<uint64_t> x(std::max(1, mask_words(n)), 0);
  for (int i : x_indices) set_bit(x, i);
  for (const auto& d : descents)
    if (!intersects(d, x)) return true;
  return false;
}

StepReport verify_step(const ProofSequence& seq, int i) {
  StepAnalysis a = analyze_step(seq, i);
  StepReport rep;
  int n = static_cast<int>(a.neighborhood.size());
  if (a.descents.empty()) {
    rep.ok = false;
    rep.message = "step " + std::to_string(i) + " has no descent at all";
    for (int k = 0; k < a.x_size; ++k) rep.violating.push_back(a.neighborhood[k]);
    return rep;
  }
  // enumerate breaker sets of exactly x_size cells in index order; smaller
  // sets are covered by monotonicity
  std::vector<int> idx(a.x_size);
  for (int k = 0; k < a.x_size; ++k) idx[k] = k;
  int words = std::max(1, mask_words(n));
  while (true) {
    std::vector<uint64_t> x(words, 0);
    for (int k : idx) set_bit(x, k);
    bool ok = false;
    for (const auto& d : a.descents)
      if (!intersects(d, x)) {
        ok = true;
        break;
      }
    if (!ok) {
      rep.ok = false;
      for (int k : idx) rep.violating.push_back(a.neighborhood[k]);
      rep.message = "step " + std::to_string(i) + " fails";
      return rep;
    }
    // next combination
    int pos = a.x_size - 1;
    while (pos >= 0 && idx[pos] == n - a.x_size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int k = pos + 1; k < a.x_size; ++k) idx[k] = idx[k - 1] + 1;
  }
  rep.ok = true;
  return rep;
}

SequenceReport verify_sequence(const ProofSequence& seq) {
  SequenceReport rep;
  try {
    validate(seq);
  } catch (const std::exception& e) {
    rep.verdict = {Status::Unknown, ""};
    rep.message = std::string("malformed certificate: ") + e.what();
    return rep;
  }
  const Situation& last = seq.situations.back();
  if (last.total_core() > seq.game.a) {
    rep.verdict = {Status::Unknown, ""};
    rep.message = "first-turn situation needs more than a marks";
    return rep;
  }
  for (int i = 1; i < static_cast<int>(seq.situations.size()); ++i) {
    StepReport step = verify_step(seq, i);
    if (!step.ok) {
      rep.verdict = {Status::Unknown, ""};
      rep.failing_step = i;
      rep.violating = step.violating;
      rep.message = step.message;
      return rep;
    }
  }
  rep.verdict = {Status::MakerWins, "proof sequence"};
  return rep;
}

bool implies_plain_win(const GameSpec& premise, int a, int b) {
  int c0 = premise.c.value_or(premise.a);
  if (premise.a == 1 && c0 <= a && b / a <= premise.b) return true;
  if (premise.a == a && c0 == a && b <= premise.b) return true;
  return false;
}

}  // namespace polywin
