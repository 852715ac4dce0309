#pragma once

// From-scratch recursive evaluation of the stage recurrences, kept separate
// from the library implementation so the two can be compared.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace stage_oracle {

struct Oracle {
  std::vector<int> b, l;
  long long bsum = 0;
  std::map<std::vector<int>, std::pair<std::vector<long long>, long long>> memo;

  Oracle(std::vector<int> b_, std::vector<int> l_) : b(std::move(b_)), l(std::move(l_)) {
    for (int x : b) bsum += x;
  }

  std::pair<std::vector<long long>, long long> eval(const std::vector<int>& p) {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    int s = static_cast<int>(l.size());
    std::vector<long long> q(s, 0);
    long long n = 0;
    bool winning = false, adjacent = false;
    for (int i = 0; i < s && !winning; ++i) winning = p[i] == l[i];
    for (int i = 0; i < s && !adjacent; ++i) adjacent = p[i] == l[i] - 1;
    if (winning) {
      for (int i = 0; i < s; ++i) q[i] = p[i] == l[i] ? 1 : 0;
    } else if (adjacent) {
      n = 1;
      for (int i = 0; i < s; ++i)
        if (p[i] == l[i] - 1) {
          q[i] = 1;
          break;
        }
    } else {
      std::vector<std::vector<long long>> dq;
      for (int i = 0; i < s; ++i) {
        std::vector<int> np = p;
        ++np[i];
        dq.push_back(eval(np).first);
      }
      n = 1;
      for (int i = 0; i < s; ++i) n += (dq[i][i] - 1) * (b[i] + 1);
      for (int i = 0; i < s; ++i) {
        long long qi = n;
        for (int j = 0; j < s; ++j)
          if (j != i && dq[j][i] > 0) qi = std::max(qi, dq[j][i] + n * (bsum + s));
        q[i] = qi;
      }
    }
    auto res = std::make_pair(q, n);
    memo[p] = res;
    return res;
  }

  long long bound(const std::vector<int>& p) {
    int s = static_cast<int>(l.size());
    for (int i = 0; i < s; ++i)
      if (p[i] == l[i]) return 0;
    for (int i = 0; i < s; ++i)
      if (p[i] == l[i] - 1) return 1;
    long long best = 0;
    for (int i = 0; i < s; ++i) {
      std::vector<int> np = p;
      ++np[i];
      best = std::max(best, bound(np));
    }
    return eval(p).second + best;
  }
};

}  // namespace stage_oracle
