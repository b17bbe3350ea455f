#pragma once

// Reference implementations used only to cross-check the main code paths.
// Each one follows a different route than the operation it validates: the
// product via explicit alternating chains instead of union-find, Green's
// relations via principal ideals instead of the rho/lambda/rank shortcuts,
// the natural order via an idempotent scan.

#include "dualsym/inverse.hpp"
#include "dualsym/partition.hpp"

namespace dualsym::oracle {

/// Product by the literal chain definition: walks alternating block steps
/// through the glued middle row, one breadth-first sweep per source point.
inline Partition chain_multiply(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("chain_multiply: degree mismatch");
  const int n = a.degree();
  auto a_same = [&](Point p, Point q) { return a.same_class(p, q); };
  auto b_same = [&](Point p, Point q) { return b.same_class(p, q); };

  // state (c, next_step): c in {1..n} on the middle row; next step uses b's
  // unprimed blocks (B) or a's primed blocks (A)
  enum : int { B = 0, A = 1 };
  auto reach_from = [&](const std::vector<char>& start) {
    std::vector<char> seen = start;
    std::vector<std::pair<int, int>> queue;
    for (int c = 1; c <= n; ++c)
      for (int step : {B, A})
        if (seen[static_cast<std::size_t>(2 * (c - 1) + step)])
          queue.emplace_back(c, step);
    while (!queue.empty()) {
      auto [c, step] = queue.back();
      queue.pop_back();
      for (int d = 1; d <= n; ++d) {
        bool linked = step == B ? b_same(Point{c, false}, Point{d, false})
                                : a_same(Point{c, true}, Point{d, true});
        if (!linked) continue;
        int next = step == B ? A : B;
        auto idx = static_cast<std::size_t>(2 * (d - 1) + next);
        if (!seen[idx]) {
          seen[idx] = 1;
          queue.emplace_back(d, next);
        }
      }
    }
    return seen;
  };

  const int m = 2 * n;
  std::vector<char> rel(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  auto set_rel = [&](int p, int q) {
    rel[static_cast<std::size_t>(p) * static_cast<std::size_t>(m) +
        static_cast<std::size_t>(q)] = 1;
    rel[static_cast<std::size_t>(q) * static_cast<std::size_t>(m) +
        static_cast<std::size_t>(p)] = 1;
  };

  for (int x = 1; x <= n; ++x) {
    // sources on the unprimed side: chains enter through a's primed half
    std::vector<char> start(static_cast<std::size_t>(2 * n), 0);
    for (int c = 1; c <= n; ++c)
      if (a_same(Point{x, false}, Point{c, true}))
        start[static_cast<std::size_t>(2 * (c - 1) + B)] = 1;
    auto seen = reach_from(start);
    for (int y = 1; y <= n; ++y) {
      if (a_same(Point{x, false}, Point{y, false})) set_rel(x - 1, y - 1);
      for (int d = 1; d <= n; ++d) {
        // even position, exit through a's primed half to an unprimed target
        if (seen[static_cast<std::size_t>(2 * (d - 1) + A)] &&
            a_same(Point{d, true}, Point{y, false}))
          set_rel(x - 1, y - 1);
        // odd position, exit through b to a primed target
        if (seen[static_cast<std::size_t>(2 * (d - 1) + B)] &&
            b_same(Point{d, false}, Point{y, true}))
          set_rel(x - 1, n + y - 1);
      }
    }
  }
  for (int x = 1; x <= n; ++x) {
    // sources on the primed side: chains enter through b's unprimed half
    std::vector<char> start(static_cast<std::size_t>(2 * n), 0);
    for (int c = 1; c <= n; ++c)
      if (b_same(Point{x, true}, Point{c, false}))
        start[static_cast<std::size_t>(2 * (c - 1) + A)] = 1;
    auto seen = reach_from(start);
    for (int y = 1; y <= n; ++y) {
      if (b_same(Point{x, true}, Point{y, true})) set_rel(n + x - 1, n + y - 1);
      for (int d = 1; d <= n; ++d)
        if (seen[static_cast<std::size_t>(2 * (d - 1) + B)] &&
            b_same(Point{d, false}, Point{y, true}))
          set_rel(n + x - 1, n + y - 1);
    }
  }

  // classes of the relation, as components to be safe
  detail::UnionFind uf(m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (rel[static_cast<std::size_t>(p) * static_cast<std::size_t>(m) +
              static_cast<std::size_t>(q)])
        uf.unite(p, q);
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) labels[static_cast<std::size_t>(p)] = uf.find(p);
  return Partition::from_labels(n, std::move(labels));
}

inline std::vector<Partition> right_ideal(const Partition& a,
                                          const std::vector<Partition>& universe) {
  std::set<Partition> s{a};
  for (const Partition& x : universe) s.insert(a * x);
  return {s.begin(), s.end()};
}

inline std::vector<Partition> left_ideal(const Partition& a,
                                         const std::vector<Partition>& universe) {
  std::set<Partition> s{a};
  for (const Partition& x : universe) s.insert(x * a);
  return {s.begin(), s.end()};
}

inline std::vector<Partition> two_sided_ideal(
    const Partition& a, const std::vector<Partition>& universe) {
  std::set<Partition> s{a};
  for (const Partition& x : universe) {
    s.insert(a * x);
    s.insert(x * a);
    for (const Partition& y : universe) s.insert(x * a * y);
  }
  return {s.begin(), s.end()};
}

inline bool green_R_by_ideals(const Partition& a, const Partition& b,
                              const std::vector<Partition>& universe) {
  return right_ideal(a, universe) == right_ideal(b, universe);
}

inline bool green_L_by_ideals(const Partition& a, const Partition& b,
                              const std::vector<Partition>& universe) {
  return left_ideal(a, universe) == left_ideal(b, universe);
}

inline bool green_J_by_ideals(const Partition& a, const Partition& b,
                              const std::vector<Partition>& universe) {
  return two_sided_ideal(a, universe) == two_sided_ideal(b, universe);
}

/// D as the composition R ∘ L, with R and L themselves taken from ideals.
inline bool green_D_by_ideals(const Partition& a, const Partition& b,
                              const std::vector<Partition>& universe) {
  auto ra = right_ideal(a, universe);
  auto lb = left_ideal(b, universe);
  for (const Partition& c : universe)
    if (right_ideal(c, universe) == ra && left_ideal(c, universe) == lb)
      return true;
  return false;
}

/// Natural order by its definition: a = b e for some idempotent e.
inline bool natural_leq_by_scan(const Partition& a, const Partition& b,
                                const std::vector<Partition>& idempotents) {
  for (const Partition& e : idempotents)
    if (b * e == a) return true;
  return false;
}

/// Trace definedness by the R/L membership route: a*b lands in R_a ∩ L_b
/// without rank loss.
inline bool trace_defined_by_membership(const Partition& a, const Partition& b) {
  Partition ab = a * b;
  return rank(ab) == rank(a) && rank(ab) == rank(b) && green_R(ab, a) &&
         green_L(ab, b);
}

/// Imprint definedness by the order route: e below a a⁻¹.
inline bool imprint_defined_by_order(const Partition& e, const Partition& a) {
  return natural_leq(e, a * a.star());
}

}  // namespace dualsym::oracle
