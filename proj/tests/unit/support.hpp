#pragma once

// Naive reference computations for tests. Nothing here calls into the
// library's algorithms; windows are plain integer vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace testsupport {

using Window = std::vector<std::int64_t>;

inline std::int64_t fmod_(std::int64_t a, std::int64_t b) { return ((a % b) + b) % b; }

inline std::int64_t eval(const Window& w, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(w.size());
  const std::int64_t r = fmod_(i - 1, n);  // i = r + 1 + q n
  const std::int64_t q = (i - 1 - r) / n;
  return w[static_cast<std::size_t>(r)] + q * n;
}

inline std::int64_t length(const Window& w) {
  const auto n = static_cast<std::int64_t>(w.size());
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = i + 1; j <= i + 40 * n; ++j)
      if (eval(w, i) > eval(w, j)) ++count;
  return count;
}

// (f o g) on windows.
inline Window compose(const Window& f, const Window& g) {
  Window out;
  for (std::size_t i = 1; i <= g.size(); ++i) out.push_back(eval(f, eval(g, static_cast<std::int64_t>(i))));
  return out;
}

// The affine transposition t_ab as a window.
inline Window transposition(int n, std::int64_t a, std::int64_t b) {
  Window out;
  for (std::int64_t x = 1; x <= n; ++x) {
    if (fmod_(x - a, n) == 0)
      out.push_back(x - a + b);
    else if (fmod_(x - b, n) == 0)
      out.push_back(x - b + a);
    else
      out.push_back(x);
  }
  return out;
}

inline Window simple(int n, int i) { return transposition(n, i, i + 1); }

inline Window identity(int n) {
  Window w;
  for (int i = 1; i <= n; ++i) w.push_back(i);
  return w;
}

// All windows of the affine group of period n with av = 0 and length <= max_len.
inline std::vector<Window> affine_ball(int n, int max_len) {
  std::set<Window> seen{identity(n)};
  std::vector<Window> layer{identity(n)};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Window> next;
    for (const auto& w : layer)
      for (int i = 0; i < n; ++i) {
        Window g = compose(w, simple(n, i));
        if (length(g) == len && seen.insert(g).second) next.push_back(g);
      }
    layer = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool bounded(const Window& w) {
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const auto v = w[i - 1];
    if (v < static_cast<std::int64_t>(i) || v > static_cast<std::int64_t>(i + w.size())) return false;
  }
  return true;
}

inline int large_count(const Window& w) {
  int k = 0;
  for (auto v : w)
    if (v > static_cast<std::int64_t>(w.size())) ++k;
  return k;
}

// Semistandard fillings of the skew shape lambda / mu (English, rows
// weakly increasing, columns strictly increasing downward) with content
// alpha, by brute force over all fillings.
inline std::int64_t skew_ssyt_count(const std::vector<int>& lambda, const std::vector<int>& mu,
                                    const std::vector<int>& alpha) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = r < mu.size() ? mu[r] : 0; c < lambda[r]; ++c) cells.push_back({static_cast<int>(r), c});
  std::map<std::pair<int, int>, int> value;
  std::vector<int> used(alpha.size(), 0);
  std::int64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      if (used == alpha) ++count;
      return;
    }
    const auto [r, c] = cells[i];
    for (int v = 1; v <= static_cast<int>(alpha.size()); ++v) {
      if (used[static_cast<std::size_t>(v - 1)] >= alpha[static_cast<std::size_t>(v - 1)]) continue;
      auto left = value.find({r, c - 1});
      if (left != value.end() && left->second > v) continue;
      auto up = value.find({r - 1, c});
      if (up != value.end() && up->second >= v) continue;
      value[{r, c}] = v;
      ++used[static_cast<std::size_t>(v - 1)];
      go(i + 1);
      --used[static_cast<std::size_t>(v - 1)];
      value.erase({r, c});
    }
  };
  go(0);
  return count;
}

inline std::int64_t ssyt_count(const std::vector<int>& lambda, const std::vector<int>& alpha) {
  return skew_ssyt_count(lambda, {}, alpha);
}

// All partitions of n with at most max_parts parts.
inline std::vector<std::vector<int>> partitions(int n, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      go(rest - p, p);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

}  // namespace testsupport
