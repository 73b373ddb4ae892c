#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "filltop/error.hpp"
#include "filltop/slope.hpp"

namespace filltop {

// Fibonacci with u_1 = u_2 = 1.
inline Int fibonacci(long n) {
  if (n < 1) raise(errc::domain_error, "fibonacci index must be >= 1");
  Int a = 1, b = 1;
  for (long i = 2; i < n; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return n == 1 ? a : b;
}

// The extremal slope pair (0/1, u_n/u_{n+1}) whose graph distance is n - 1.
inline std::pair<Slope, Slope> lame_pair(long n) {
  if (n < 2) raise(errc::domain_error, "lame_pair requires n >= 2");
  return {Slope(0, 1), Slope(fibonacci(n), fibonacci(n + 1))};
}

inline double log2_int(const Int& v) {
  if (v <= 0) raise(errc::domain_error, "log2 of non-positive value");
  if (v <= Int(std::numeric_limits<int64_t>::max()))
    return std::log2(static_cast<double>(v.convert_to<int64_t>()));
  unsigned m = boost::multiprecision::msb(v);
  Int top = v >> (m - 52);
  return static_cast<double>(m - 52) + std::log2(top.convert_to<double>());
}

// Distance upper bound 2*log2(i) + 2 in terms of intersection number.
inline double hempel_upper_bound(const Int& i) {
  if (i < 1) raise(errc::domain_error, "intersection number must be >= 1");
  return 2.0 * log2_int(i) + 2.0;
}

// ---------------------------------------------------------------------------
// Farey graph search. Vertices are slopes, edges join pairs with determinant
// one. Searches run on the induced subgraph of slopes with height at most a
// bound derived from the endpoints; correctness of the restriction is
// re-validated by the doubled-bound check (see farey_distance_checked).
// ---------------------------------------------------------------------------

namespace detail {

constexpr int64_t kMaxBfsHeight = 6000;
constexpr uint8_t kUnreached = 0xFF;

struct SmallSlope {
  int64_t p;
  int64_t q;
};

inline SmallSlope to_small(const Slope& s) {
  if (s.height() > kMaxBfsHeight)
    raise(errc::search_too_large,
          "slope height exceeds the exact-search limit (" + std::to_string(kMaxBfsHeight) + ")");
  return {s.p().convert_to<int64_t>(), s.q().convert_to<int64_t>()};
}

// a*x + b*y = gcd(x, y)
inline void ext_gcd(int64_t x, int64_t y, int64_t& a, int64_t& b) {
  if (y == 0) {
    a = x >= 0 ? 1 : -1;
    b = 0;
    return;
  }
  int64_t a1;
  ext_gcd(y, x % y, b, a1);
  a = a1;
  b -= (x / y) * a1;
}

class BfsGrid {
 public:
  explicit BfsGrid(int64_t bound) : bound_(bound), row_(2 * bound + 1) {
    if (bound < 1 || bound > kMaxBfsHeight)
      raise(errc::search_too_large, "search bound out of range");
    dist_.assign(static_cast<size_t>((bound_ + 1) * row_), kUnreached);
  }

  int64_t bound() const { return bound_; }

  size_t index(const SmallSlope& s) const {
    return static_cast<size_t>(s.q * row_ + (s.p + bound_));
  }
  SmallSlope slope_at(size_t idx) const {
    int64_t q = static_cast<int64_t>(idx) / row_;
    int64_t p = static_cast<int64_t>(idx) % row_ - bound_;
    return {p, q};
  }

  uint8_t dist(const SmallSlope& s) const { return dist_[index(s)]; }

  template <typename Visit>
  void neighbors(const SmallSlope& s, Visit&& visit) const {
    if (s.q == 0) {
      for (int64_t n = -bound_; n <= bound_; ++n) visit(SmallSlope{n, 1});
      return;
    }
    int64_t a, b;
    ext_gcd(s.p, s.q, a, b);  // a*p + b*q = 1
    // p*y - x*q = +1 family: (x, y) = (-b + t*p, a + t*q)
    // p*y - x*q = -1 family: (x, y) = ( b + t*p, -a + t*q)
    emit_family(-b, a, s, visit);
    emit_family(b, -a, s, visit);
  }

  // Fills distances from source until optional target is reached.
  void run(const SmallSlope& source, const SmallSlope* target = nullptr) {
    std::vector<uint32_t> frontier, next;
    dist_[index(source)] = 0;
    frontier.push_back(static_cast<uint32_t>(index(source)));
    uint8_t level = 0;
    while (!frontier.empty()) {
      if (target && dist_[index(*target)] != kUnreached) return;
      ++level;
      next.clear();
      for (uint32_t idx : frontier) {
        neighbors(slope_at(idx), [&](const SmallSlope& n) {
          size_t j = index(n);
          if (dist_[j] == kUnreached) {
            dist_[j] = level;
            next.push_back(static_cast<uint32_t>(j));
          }
        });
      }
      frontier.swap(next);
    }
  }

 private:
  template <typename Visit>
  void emit_family(int64_t x0, int64_t y0, const SmallSlope& s, Visit&& visit) const {
    // y = y0 + t*q in [0, bound]
    auto floor_div = [](int64_t n, int64_t d) {
      int64_t q = n / d, r = n % d;
      return (r != 0 && ((r < 0) != (d < 0))) ? q - 1 : q;
    };
    int64_t lo = -floor_div(y0, s.q);          // smallest t with y >= 0
    int64_t hi = floor_div(bound_ - y0, s.q);  // largest t with y <= bound
    for (int64_t t = lo; t <= hi; ++t) {
      int64_t y = y0 + t * s.q;
      int64_t x = x0 + t * s.p;
      if (y == 0) {
        // canonical infinite slope
        if (x == 1 || x == -1) visit(SmallSlope{1, 0});
        continue;
      }
      if (x >= -bound_ && x <= bound_) visit(SmallSlope{x, y});
    }
  }

  int64_t bound_;
  int64_t row_;
  std::vector<uint8_t> dist_;
};

inline int64_t pair_bound(const Slope& s1, const Slope& s2) {
  Int h = s1.height() > s2.height() ? s1.height() : s2.height();
  if (h > kMaxBfsHeight)
    raise(errc::search_too_large,
          "slope heights exceed the exact-search limit (" + std::to_string(kMaxBfsHeight) + ")");
  int64_t b = h.convert_to<int64_t>();
  return b < 1 ? 1 : b;
}

inline long bfs_distance(const Slope& s1, const Slope& s2, int64_t bound) {
  SmallSlope a = to_small(s1), b = to_small(s2);
  BfsGrid grid(bound);
  grid.run(a, &b);
  uint8_t d = grid.dist(b);
  if (d == kUnreached) raise(errc::search_too_large, "target not reached within search bound");
  return d;
}

}  // namespace detail

// Exact graph distance in the Farey graph. Identical for both surface kinds,
// their curve graphs being the same graph.
inline long farey_distance(const Slope& s1, const Slope& s2) {
  if (s1 == s2) return 0;
  if (farey_adjacent(s1, s2)) return 1;
  return detail::bfs_distance(s1, s2, detail::pair_bound(s1, s2));
}

// farey_distance plus a re-run with the height bound doubled; the two results
// must agree. Used by tests and the oracle subcommand.
inline long farey_distance_checked(const Slope& s1, const Slope& s2) {
  long d = farey_distance(s1, s2);
  if (d <= 1) return d;
  int64_t doubled = std::min<int64_t>(2 * detail::pair_bound(s1, s2), detail::kMaxBfsHeight);
  long d2 = detail::bfs_distance(s1, s2, doubled);
  if (d2 != d)
    raise(errc::domain_error, "height-restricted distance disagrees with doubled-bound search");
  return d;
}

// A witness path: consecutive vertices are Farey-adjacent.
struct FareyPath {
  std::vector<Slope> vertices;
  size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Shortest path from s1 to s2, deterministic: at every step the
// lexicographically smallest (p, q) next vertex is taken.
inline FareyPath farey_geodesic(const Slope& s1, const Slope& s2) {
  FareyPath path;
  path.vertices.push_back(s1);
  if (s1 == s2) return path;
  int64_t bound = detail::pair_bound(s1, s2);
  detail::BfsGrid grid(bound);
  detail::SmallSlope target = detail::to_small(s2);
  grid.run(target, nullptr);
  detail::SmallSlope cur = detail::to_small(s1);
  uint8_t remaining = grid.dist(cur);
  if (remaining == detail::kUnreached)
    raise(errc::search_too_large, "endpoints not connected within search bound");
  while (remaining > 0) {
    std::optional<detail::SmallSlope> best;
    grid.neighbors(cur, [&](const detail::SmallSlope& n) {
      if (grid.dist(n) + 1 != remaining) return;
      if (!best || n.p < best->p || (n.p == best->p && n.q < best->q)) best = n;
    });
    cur = *best;
    path.vertices.emplace_back(Int(cur.p), Int(cur.q));
    --remaining;
  }
  return path;
}

}  // namespace filltop
