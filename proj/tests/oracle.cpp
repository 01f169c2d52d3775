#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace oracle {

std::vector<Piles> Game::moves(const Piles& x) const {
  std::vector<Piles> out;
  for (unsigned mask = 0; mask < (1u << n_); ++mask) {
    if (std::popcount(mask) != k_) continue;
    Piles y = x;
    bool ok = true;
    for (int i = 0; i < n_; ++i) {
      if (mask >> i & 1) {
        if (y[i] == 0) ok = false;
        --y[i];
      }
    }
    if (ok) out.push_back(y);
  }
  return out;
}

int Game::remoteness(const Piles& x) {
  auto it = r_memo_.find(x);
  if (it != r_memo_.end()) return it->second;
  auto next = moves(x);
  int r;
  if (next.empty()) {
    r = misere_ ? 1 : 0;
  } else {
    int best_even = -1, best_odd = -1;
    for (const auto& y : next) {
      int ry = remoteness(y);
      if (ry % 2 == 0) {
        if (best_even < 0 || ry < best_even) best_even = ry;
      } else {
        best_odd = std::max(best_odd, ry);
      }
    }
    r = best_even >= 0 ? best_even + 1 : best_odd + 1;
  }
  r_memo_[x] = r;
  return r;
}

int Game::sg(const Piles& x) {
  auto it = sg_memo_.find(x);
  if (it != sg_memo_.end()) return it->second;
  std::set<int> seen;
  for (const auto& y : moves(x)) seen.insert(sg(y));
  int g = 0;
  while (seen.count(g)) ++g;
  sg_memo_[x] = g;
  return g;
}

std::vector<int> Game::optimal_keep_values(const Piles& x) {
  std::set<int> vals;
  const int r = remoteness(x);
  for (int keep = 0; keep < n_; ++keep) {
    Piles y = x;
    bool ok = true;
    for (int i = 0; i < n_; ++i)
      if (i != keep) {
        if (y[i] == 0) ok = false;
        --y[i];
      }
    // Winner: the smallest even successor is R - 1; loser: the largest.
    if (ok && remoteness(y) + 1 == r) vals.insert(x[keep]);
  }
  return {vals.begin(), vals.end()};
}

int m_keep_index(Piles s) {
  const int n = static_cast<int>(s.size());
  int smallest_even = -1;
  for (int v : s)
    if (v % 2 == 0 && (smallest_even < 0 || v < smallest_even)) smallest_even = v;
  if (smallest_even < 0) return n - 1;
  int keep = -1;
  for (int i = 0; i < n; ++i)
    if (s[i] == smallest_even) keep = i;
  return keep;
}

Piles m_successor(Piles s) {
  int keep = m_keep_index(s);
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (i != keep) --s[i];
  return s;
}

bool is_exception(Game& g, const Piles& sorted) {
  return g.remoteness(sorted) - g.remoteness(m_successor(sorted)) != 1;
}

namespace {
void fill(std::vector<Piles>& out, Piles& cur, int n, int lo, int cap) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= cap; ++v) {
    cur.push_back(v);
    fill(out, cur, n, v, cap);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Piles> sorted_box(int n, int cap) {
  std::vector<Piles> out;
  Piles cur;
  fill(out, cur, n, 0, cap);
  return out;
}

}  // namespace oracle
