#pragma once

// Named element families and the membership predicates for the
// type-preserving subsemigroup IT_n and the ordered subsemigroup IOP_n.

#include <set>

#include "dualsym/partition.hpp"
#include "dualsym/permutation.hpp"

namespace dualsym {

/// The idempotent collapsing A: block A ∪ A' plus fixed pairs elsewhere.
/// tau({x}) is the identity; tau(X) is the zero.
inline Partition tau(const std::vector<int>& a_set, int n) {
  if (a_set.empty()) throw std::invalid_argument("tau: empty set");
  std::set<int> A(a_set.begin(), a_set.end());
  if (*A.begin() < 1 || *A.rbegin() > n)
    throw std::invalid_argument("tau: set not contained in {1..n}");
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    int l = A.count(i) ? 0 : i;
    labels[static_cast<std::size_t>(i - 1)] = l;
    labels[static_cast<std::size_t>(n + i - 1)] = l;
  }
  return Partition::from_labels(n, std::move(labels));
}

/// The rank n-1 element {x,y,x'},{z,y',z'} with fixed pairs elsewhere.
inline Partition xi(int x, int y, int z, int n) {
  if (n < 3) throw std::invalid_argument("xi: degree must be at least 3");
  if (x == y || y == z || x == z)
    throw std::invalid_argument("xi: points must be pairwise distinct");
  if (x < 1 || y < 1 || z < 1 || x > n || y > n || z > n)
    throw std::invalid_argument("xi: point out of range");
  std::vector<std::vector<Point>> blocks;
  blocks.push_back({Point{x, false}, Point{y, false}, Point{x, true}});
  blocks.push_back({Point{z, false}, Point{y, true}, Point{z, true}});
  for (int t = 1; t <= n; ++t) {
    if (t == x || t == y || t == z) continue;
    blocks.push_back({Point{t, false}, Point{t, true}});
  }
  return Partition::from_blocks(n, blocks);
}

/// The block bijection of singletons {x, g(x)'}; an injective homomorphism
/// from the symmetric group into IP_n.
inline Partition eta(const Permutation& g) {
  const int n = g.degree();
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = x;
    labels[static_cast<std::size_t>(n + g(x) - 1)] = x;
  }
  return Partition::from_labels(n, std::move(labels));
}

inline Partition zeta(int x, int n) {
  if (n < 2) throw std::invalid_argument("zeta: degree must be at least 2");
  if (x < 1 || x > n) throw std::invalid_argument("zeta: point out of range");
  std::vector<int> rest;
  for (int t = 1; t <= n; ++t)
    if (t != x) rest.push_back(t);
  return tau(rest, n);
}

/// The two-block partition {X, X'}; lies in CS_n but not IP_n, and absorbs
/// every element of IP_n ∪ {upsilon}.
inline Partition upsilon(int n) {
  if (n < 2) throw std::invalid_argument("upsilon: degree must be at least 2");
  std::vector<int> labels(static_cast<std::size_t>(2 * n), 0);
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(n + i)] = 1;
  return Partition::from_labels(n, std::move(labels));
}

/// IT_n membership: every block A ∪ B' joins equal-sized parts of the two
/// halves.
inline bool is_special(const Partition& a) {
  if (!a.is_ip())
    throw std::invalid_argument("is_special: element must lie in IP_n");
  const int n = a.degree();
  std::vector<int> unprimed(static_cast<std::size_t>(a.block_count()), 0);
  std::vector<int> primed(static_cast<std::size_t>(a.block_count()), 0);
  for (int slot = 0; slot < 2 * n; ++slot) {
    auto l = static_cast<std::size_t>(a.labels()[static_cast<std::size_t>(slot)]);
    ++(slot < n ? unprimed[l] : primed[l]);
  }
  return unprimed == primed;
}

/// IOP_n membership: listing blocks by least unprimed element must also list
/// them by least primed element (minima taken on the underlying indices).
inline bool in_iop(const Partition& a) {
  if (!a.is_ip())
    throw std::invalid_argument("in_iop: element must lie in IP_n");
  const int n = a.degree();
  // canonical block order is by least unprimed point, since every block has
  // one; the test reduces to the least-primed indices being increasing too
  std::vector<int> min_primed(static_cast<std::size_t>(a.block_count()), 0);
  for (int i = n; i < 2 * n; ++i) {
    auto l = static_cast<std::size_t>(a.labels()[static_cast<std::size_t>(i)]);
    if (min_primed[l] == 0) min_primed[l] = i - n + 1;
  }
  for (std::size_t c = 1; c < min_primed.size(); ++c)
    if (min_primed[c] < min_primed[c - 1]) return false;
  return true;
}

}  // namespace dualsym
