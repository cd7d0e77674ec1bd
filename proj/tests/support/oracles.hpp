#pragma once

// Reference implementations for the tests. They share no code with the
// library: plain std::set mex, direct game-tree search, explicit
// enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 mex(const std::set<u64>& s) {
  u64 m = 0;
  while (s.count(m)) ++m;
  return m;
}

// g_n = mex{g_{n-i} : 1 <= i <= f(n)}.
inline std::vector<u64> max_nim(const std::vector<u64>& f, u64 n_terms) {
  std::vector<u64> g(n_terms, 0);
  for (u64 n = 1; n < n_terms; ++n) {
    std::set<u64> options;
    for (u64 i = 1; i <= f[n]; ++i) options.insert(g[n - i]);
    g[n] = mex(options);
  }
  return g;
}

// h_n = mex{h_m : m < n - f(n)}: more than f(n) stones must go.
inline std::vector<u64> min_nim(const std::vector<u64>& f, u64 n_terms) {
  std::vector<u64> h(n_terms, 0);
  for (u64 n = 1; n < n_terms; ++n) {
    std::set<u64> options;
    for (u64 m = 0; m + f[n] < n; ++m) options.insert(h[m]);
    h[n] = mex(options);
  }
  return h;
}

inline std::vector<u64> half_values(u64 n_terms) {
  std::vector<u64> f(n_terms, 0);
  for (u64 n = 1; n < n_terms; ++n) f[n] = (n - 1) / 2;
  return f;
}

inline std::vector<u64> sqrt_values(u64 n_terms) {
  std::vector<u64> f(n_terms, 0);
  u64 r = 0;
  for (u64 n = 0; n < n_terms; ++n) {
    while ((r + 1) * (r + 1) <= n) ++r;
    f[n] = r;
  }
  return f;
}

inline std::vector<u64> pow2_values(u64 n_terms) {
  std::vector<u64> f(n_terms, 0);
  for (u64 n = 1; n < n_terms; ++n) {
    u64 p = 1;
    while (p * 2 <= n) p *= 2;
    f[n] = p - 1;
  }
  return f;
}

// f(0) = 0, increments of 0 or 1.
inline std::vector<u64> random_regular(std::mt19937_64& rng, u64 n_terms) {
  std::bernoulli_distribution step(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
  std::vector<u64> f(n_terms, 0);
  for (u64 n = 1; n < n_terms; ++n) f[n] = f[n - 1] + (step(rng) ? 1 : 0);
  return f;
}

// Weakly increasing with jumps up to 4, capped by n.
inline std::vector<u64> random_increasing(std::mt19937_64& rng, u64 n_terms) {
  std::uniform_int_distribution<u64> jump(0, 4);
  std::vector<u64> f(n_terms, 0);
  for (u64 n = 1; n < n_terms; ++n) f[n] = std::min(n, f[n - 1] + jump(rng));
  return f;
}

// Serial Nim by full-state search: only the leftmost nonempty heap may shrink.
class SerialTree {
 public:
  u64 value(std::vector<u64> heaps) {
    std::size_t first = 0;
    while (first < heaps.size() && heaps[first] == 0) ++first;
    heaps.erase(heaps.begin(), heaps.begin() + static_cast<std::ptrdiff_t>(first));
    if (heaps.empty()) return 0;
    if (auto it = memo_.find(heaps); it != memo_.end()) return it->second;
    std::set<u64> options;
    for (u64 left = 0; left < heaps.front(); ++left) {
      std::vector<u64> next(heaps);
      next.front() = left;
      options.insert(value(next));
    }
    const u64 v = mex(options);
    memo_.emplace(std::move(heaps), v);
    return v;
  }

 private:
  std::map<std::vector<u64>, u64> memo_;
};

// All positions with 1..max_heaps heaps of sizes 1..max_size.
inline void for_each_row(u64 max_heaps, u64 max_size,
                         const std::function<void(const std::vector<u64>&)>& visit) {
  std::vector<u64> row;
  std::function<void()> extend = [&] {
    if (!row.empty()) visit(row);
    if (row.size() == max_heaps) return;
    for (u64 a = 1; a <= max_size; ++a) {
      row.push_back(a);
      extend();
      row.pop_back();
    }
  };
  extend();
}

}  // namespace oracle
