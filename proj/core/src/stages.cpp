#include "polywin/stages.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polywin {

namespace {

struct Builder {
  const StageParams& params;
  int s;
  long long bsum;
  std::map<std::vector<int>, StageVertex> done;

  explicit Builder(const StageParams& p)
      : params(p), s(static_cast<int>(p.l.size())), bsum(0) {
    for (int bi : p.b) bsum += bi;
  }

  const StageVertex& eval(const std::vector<int>& p) {
    auto it = done.find(p);
    if (it != done.end()) return it->second;

    StageVertex v;
    v.p = p;
    v.q.assign(s, 0);
    int win_i = -1, adj_i = -1;
    for (int i = 0; i < s; ++i) {
      if (p[i] == params.l[i] && win_i < 0) win_i = i;
      if (p[i] == params.l[i] - 1 && adj_i < 0) adj_i = i;
    }
    if (win_i >= 0) {
      v.winning = true;
      for (int i = 0; i < s; ++i) v.q[i] = (p[i] == params.l[i]) ? 1 : 0;
      v.n = 0;
    } else if (adj_i >= 0) {
      // one dashed turn: all maker marks go into a single alive subboard of
      // the type one step from completion
      v.win_adjacent = true;
      v.n = 1;
      v.q[adj_i] = 1;
    } else {
      // the two recurrences, evaluated on the s descendants
      std::vector<const StageVertex*> desc(s);
      for (int i = 0; i < s; ++i) {
        std::vector<int> np = p;
        ++np[i];
        desc[i] = &eval(np);
      }
      long long n = 1;
      for (int i = 0; i < s; ++i) n += (desc[i]->q[i] - 1) * (params.b[i] + 1);
      v.n = n;
      long long spend = n + n * (bsum + s - 1);  // n * (b + s)
      for (int i = 0; i < s; ++i) {
        long long qi = n;
        for (int j = 0; j < s; ++j) {
          if (j == i) continue;
          if (desc[j]->q[i] > 0) qi = std::max(qi, desc[j]->q[i] + spend);
        }
        v.q[i] = qi;
      }
    }
    return done.emplace(p, std::move(v)).first->second;
  }
};

}  // namespace

StageDiagram build_diagram(const StageParams& params) {
  if (params.b.size() != params.l.size() || params.l.empty())
    throw std::invalid_argument("stage diagram needs matching b and l vectors");
  for (int li : params.l)
    if (li < 1) throw std::invalid_argument("stage lengths must be positive");
  for (int bi : params.b)
    if (bi < 0) throw std::invalid_argument("stage breaker marks must be non-negative");

  Builder builder(params);
  int s = static_cast<int>(params.l.size());
  std::vector<int> root(s, 0);
  builder.eval(root);

  StageDiagram d;
  d.params = params;
  // keep only vertices reachable from the root: a winning or win-adjacent
  // vertex stops further expansion
  std::vector<std::vector<int>> stack = {root};
  while (!stack.empty()) {
    std::vector<int> p = stack.back();
    stack.pop_back();
    if (d.vertices.count(p)) continue;
    const StageVertex& v = builder.eval(p);
    d.vertices.emplace(p, v);
    if (v.winning) continue;
    if (v.win_adjacent) {
      for (int i = 0; i < s; ++i)
        if (p[i] == params.l[i] - 1) {
          std::vector<int> np = p;
          ++np[i];
          stack.push_back(np);
          break;
        }
      continue;
    }
    for (int i = 0; i < s; ++i) {
      std::vector<int> np = p;
      ++np[i];
      stack.push_back(np);
    }
  }
  d.total_bound = total_turn_bound(d);
  return d;
}

long long total_turn_bound(const StageDiagram& d) {
  // longest root-to-win path; every out-edge of a vertex carries its n
  std::map<std::vector<int>, long long> memo;
  int s = static_cast<int>(d.params.l.size());
  std::function<long long(const std::vector<int>&)> longest =
      [&](const std::vector<int>& p) -> long long {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    const StageVertex& v = d.vertices.at(p);
    long long r = 0;
    if (v.winning) {
      r = 0;
    } else if (v.win_adjacent) {
      r = 1;
    } else {
      long long best = 0;
      for (int i = 0; i < s; ++i) {
        std::vector<int> np = p;
        ++np[i];
        best = std::max(best, longest(np));
      }
      r = v.n + best;
    }
    memo[p] = r;
    return r;
  };
  std::vector<int> root(s, 0);
  return longest(root);
}

bool stage_feasibility(long long n, const std::vector<long long>& k, const std::vector<int>& b) {
  if (k.size() != b.size()) throw std::invalid_argument("mismatched vectors");
  long long total = 0;
  for (size_t i = 0; i < k.size(); ++i) total += k[i] * (b[i] + 1);
  return total >= n;
}

CompositionResult compose_winner(const std::vector<CompositionPart>& parts) {
  if (parts.empty()) throw std::invalid_argument("composition needs parts");
  CompositionResult res;
  StageParams params;
  for (const CompositionPart& part : parts) {
    if (part.a <= 0) throw std::invalid_argument("part maker marks must be positive");
    if (part.b < 0 || part.l < 1) throw std::invalid_argument("bad part parameters");
    res.a += part.a;
    res.b += part.b;
    params.b.push_back(part.b);
    params.l.push_back(part.l);
  }
  res.b += static_cast<int>(parts.size()) - 1;
  res.turns = build_diagram(params).total_bound;
  return res;
}

}  // namespace polywin
