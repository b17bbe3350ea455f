#pragma once

// Exhaustive enumeration, subsemigroup closure, ideals, maximal
// subsemigroups and the exact counting formulas.

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dualsym/generators.hpp"
#include "dualsym/inverse.hpp"
#include "dualsym/partition.hpp"
#include "dualsym/permutation.hpp"

namespace dualsym {

namespace detail {

/// Advances a restricted growth string in lexicographic order; false at the
/// last one.
inline bool next_rgs(std::vector<int>& a) {
  const int m = static_cast<int>(a.size());
  std::vector<int> prefix_max(static_cast<std::size_t>(m), 0);
  for (int i = 1; i < m; ++i)
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)],
                 a[static_cast<std::size_t>(i - 1)]);
  for (int i = m - 1; i >= 1; --i) {
    if (a[static_cast<std::size_t>(i)] <= prefix_max[static_cast<std::size_t>(i)]) {
      ++a[static_cast<std::size_t>(i)];
      std::fill(a.begin() + i + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

using PartitionSet = std::unordered_set<Partition, PartitionHash>;

inline PartitionSet to_set(const std::vector<Partition>& v) {
  return PartitionSet(v.begin(), v.end());
}

inline std::vector<Partition> sorted(PartitionSet s) {
  std::vector<Partition> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Closure of seed ∪ {extra} under products, where seed is already closed.
/// Stops early once `universe_size` elements are reached.
inline PartitionSet closure_with(const PartitionSet& seed,
                                 const Partition& extra,
                                 std::size_t universe_size) {
  PartitionSet all = seed;
  std::vector<Partition> frontier;
  if (all.insert(extra).second) frontier.push_back(extra);
  std::vector<Partition> members(all.begin(), all.end());
  while (!frontier.empty() && all.size() < universe_size) {
    std::vector<Partition> next;
    for (const Partition& f : frontier) {
      for (std::size_t i = 0; i < members.size() && all.size() < universe_size;
           ++i) {
        for (const Partition& p : {f * members[i], members[i] * f}) {
          if (all.insert(p).second) {
            next.push_back(p);
            members.push_back(p);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

/// All subgroups of a finite group given by its element list, grown through
/// the subgroup lattice: repeatedly adjoin one element and close.
template <typename T, typename Mul>
std::vector<std::vector<T>> all_subgroups(const std::vector<T>& group,
                                          const T& id, Mul mul) {
  auto close_subset = [&](std::vector<T> elems) {
    std::set<T> s(elems.begin(), elems.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<T> cur(s.begin(), s.end());
      for (const T& a : cur)
        for (const T& b : cur)
          if (s.insert(mul(a, b)).second) grew = true;
    }
    return std::vector<T>(s.begin(), s.end());  // sorted
  };
  std::set<std::vector<T>> found;
  std::vector<std::vector<T>> work{close_subset({id})};
  found.insert(work[0]);
  while (!work.empty()) {
    auto sub = std::move(work.back());
    work.pop_back();
    for (const T& g : group) {
      if (std::binary_search(sub.begin(), sub.end(), g)) continue;
      auto bigger = sub;
      bigger.push_back(g);
      bigger = close_subset(std::move(bigger));
      if (found.insert(bigger).second) work.push_back(bigger);
    }
  }
  return std::vector<std::vector<T>>(found.begin(), found.end());
}

}  // namespace detail

struct CloseOptions {
  std::size_t max_elements = 10'000'000;
};

/// Subsemigroup generated by a list of elements: breadth-first, generators
/// first, then products in (element, generator) discovery order.  Two runs on
/// the same input yield identical tables.
struct ClosureTable {
  int degree = 0;
  std::vector<Partition> generators;
  std::vector<Partition> elements;  // discovery order
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> edges;  // edges[i][j] = pos of e_i * g_j

  std::size_t size() const { return elements.size(); }
  bool contains(const Partition& p) const { return index.count(p.to_string()) > 0; }
};

inline ClosureTable close(const std::vector<Partition>& gens,
                          CloseOptions opts = {}) {
  if (gens.empty()) throw std::invalid_argument("close: empty generator list");
  ClosureTable t;
  t.degree = gens.front().degree();
  for (const Partition& g : gens) {
    if (g.degree() != t.degree)
      throw DegreeMismatch("close: generators of mixed degree");
  }
  t.generators = gens;
  auto add = [&](const Partition& p) -> std::size_t {
    auto key = p.to_string();
    auto it = t.index.find(key);
    if (it != t.index.end()) return it->second;
    if (t.elements.size() >= opts.max_elements)
      throw BoundExceeded("close: element limit " +
                          std::to_string(opts.max_elements) + " reached");
    std::size_t pos = t.elements.size();
    t.elements.push_back(p);
    t.index.emplace(std::move(key), pos);
    return pos;
  };
  for (const Partition& g : gens) add(g);
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    t.edges.emplace_back();
    t.edges.back().reserve(gens.size());
    for (const Partition& g : gens) {
      Partition p = t.elements[i] * g;
      t.edges.back().push_back(add(p));
    }
  }
  return t;
}

/// All of CS_n in canonical (restricted-growth) order; |CS_n| = Bell(2n).
inline std::vector<Partition> enumerate_cs(int n, int max_n = 4) {
  if (n < 1) throw std::invalid_argument("enumerate_cs: degree must be >= 1");
  if (n > max_n)
    throw BoundExceeded("enumerate_cs: degree " + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_n));
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(2 * n), 0);
  do {
    out.push_back(Partition::from_labels(n, rgs));
  } while (detail::next_rgs(rgs));
  return out;
}

/// All of IP_n in canonical order.
inline std::vector<Partition> enumerate_ip(int n, int max_n = 5) {
  if (n < 1) throw std::invalid_argument("enumerate_ip: degree must be >= 1");
  if (n > max_n)
    throw BoundExceeded("enumerate_ip: degree " + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_n));
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(2 * n), 0);
  do {
    Partition p = Partition::from_labels(n, rgs);
    if (p.is_ip()) out.push_back(std::move(p));
  } while (detail::next_rgs(rgs));
  return out;
}

inline std::vector<Partition> enumerate_idempotents(int n, int max_n = 5) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_ip(n, max_n))
    if (is_idempotent(p)) out.push_back(p);
  return out;
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

}  // namespace detail

/// Stirling number of the second kind, by the standard recurrence.
inline std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("stirling2: need 0 <= k <= n");
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // s(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = detail::checked_add(
          detail::checked_mul(static_cast<std::uint64_t>(j),
                              row[static_cast<std::size_t>(j)]),
          row[static_cast<std::size_t>(j - 1)]);
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

/// Bell number via the Bell triangle.
inline std::uint64_t bell(int n) {
  if (n < 0) throw std::invalid_argument("bell: negative argument");
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row)
      next.push_back(detail::checked_add(next.back(), v));
    row = std::move(next);
  }
  return row.front();
}

/// |IP_n| by the closed formula: sum over k of s(n,k)^2 * k!.
inline std::uint64_t ip_cardinality(int n) {
  std::uint64_t total = 0, factorial = 1;
  for (int k = 1; k <= n; ++k) {
    factorial = detail::checked_mul(factorial, static_cast<std::uint64_t>(k));
    std::uint64_t s = stirling2(n, k);
    total = detail::checked_add(total,
                                detail::checked_mul(detail::checked_mul(s, s),
                                                    factorial));
  }
  return total;
}

/// Number of H-classes of IP_n: sum over k of s(n,k)^2.
inline std::uint64_t ip_h_class_count(int n) {
  std::uint64_t total = 0;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t s = stirling2(n, k);
    total = detail::checked_add(total, detail::checked_mul(s, s));
  }
  return total;
}

/// The two-sided ideal I_k = { a : rank(a) <= k }.
inline std::vector<Partition> ideal(int k, int n, int max_n = 5) {
  if (k < 1 || k > n) throw std::invalid_argument("ideal: need 1 <= k <= n");
  std::vector<Partition> out;
  for (const Partition& p : enumerate_ip(n, max_n))
    if (rank(p) <= k) out.push_back(p);
  return out;
}

/// The principal two-sided ideal of b, by direct triple products.
inline std::vector<Partition> principal_ideal(const Partition& b, int max_n = 5) {
  auto universe = enumerate_ip(b.degree(), max_n);
  detail::PartitionSet out;
  for (const Partition& u : universe) {
    Partition ub = u * b;
    for (const Partition& v : universe) out.insert(ub * v);
  }
  return detail::sorted(std::move(out));
}

/// Every two-sided ideal of a monoid is the union of the principal ideals of
/// its elements, so the distinct unions of principal ideals exhaust all
/// ideals.  Each returned set is re-verified to be an ideal by exhaustive
/// products.  Returned sorted by size.
inline std::vector<std::vector<Partition>> all_ideals(int n, int max_n = 5) {
  auto universe = enumerate_ip(n, max_n);
  std::set<std::vector<Partition>> principals;
  for (const Partition& b : universe) principals.insert(principal_ideal(b, max_n));
  std::vector<std::vector<Partition>> ps(principals.begin(), principals.end());
  std::set<std::vector<Partition>> ideals;
  for (std::uint64_t mask = 1; mask < (1ull << ps.size()); ++mask) {
    detail::PartitionSet u;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (mask & (1ull << i)) u.insert(ps[i].begin(), ps[i].end());
    ideals.insert(detail::sorted(std::move(u)));
  }
  std::vector<std::vector<Partition>> out(ideals.begin(), ideals.end());
  for (const auto& I : out) {
    detail::PartitionSet s = detail::to_set(I);
    for (const Partition& x : I)
      for (const Partition& a : universe)
        if (!s.count(a * x) || !s.count(x * a))
          throw std::logic_error("all_ideals: union of principal ideals not an ideal");
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

/// The maximal subgroups of the symmetric group S_n for n <= 4, constructed
/// explicitly (alternating group, point stabilisers, and for n = 4 the three
/// dihedral matching stabilisers) and cross-checked against brute-force
/// subgroup enumeration.
inline std::vector<std::vector<Permutation>> maximal_subgroups_s_n(int n) {
  if (n < 3 || n > 4)
    throw BoundExceeded("maximal_subgroups_s_n: supported for n in {3, 4}");
  auto sym = all_permutations(n);
  std::vector<std::vector<Permutation>> out;
  auto filter = [&](auto pred) {
    std::vector<Permutation> g;
    for (const auto& p : sym)
      if (pred(p)) g.push_back(p);
    std::sort(g.begin(), g.end());
    return g;
  };
  out.push_back(filter([](const Permutation& p) { return p.is_even(); }));
  for (int i = 1; i <= n; ++i)
    out.push_back(filter([i](const Permutation& p) { return p(i) == i; }));
  if (n == 4) {
    // stabilisers of the three perfect matchings {{1,x},{y,z}}
    for (int x = 2; x <= 4; ++x) {
      int y = x == 2 ? 3 : 2;
      int z = x == 4 ? 3 : 4;
      out.push_back(filter([&](const Permutation& p) {
        auto pair_of = [&](int t) {
          return (t == 1 || t == x) ? 0 : 1;
        };
        return pair_of(p(1)) == pair_of(p(x)) && pair_of(p(y)) == pair_of(p(z));
      }));
    }
  }
  std::sort(out.begin(), out.end());

  // cross-validation: maximal proper subgroups from the full subgroup lattice
  auto subs = detail::all_subgroups(
      sym, Permutation::identity(n),
      [](const Permutation& a, const Permutation& b) { return a * b; });
  std::vector<std::vector<Permutation>> maximal;
  for (const auto& h : subs) {
    if (h.size() == sym.size()) continue;
    bool is_max = true;
    for (const auto& k : subs) {
      if (k.size() >= sym.size() || k.size() <= h.size() || k == h) continue;
      if (std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(h);
  }
  std::sort(maximal.begin(), maximal.end());
  if (maximal != out)
    throw std::logic_error("maximal_subgroups_s_n: catalogue mismatch");
  return out;
}

/// The maximal subsemigroups of IP_n: IT_n ∪ I_{n-2} and G ∪ I_{n-1} for G a
/// maximal subgroup of S_n.  Each returned set is verified closed, inverse
/// closed, and maximal (adjoining any outside element generates IP_n).
inline std::vector<std::vector<Partition>> maximal_subsemigroups(int n) {
  if (n < 3 || n > 4)
    throw BoundExceeded("maximal_subsemigroups: supported for n in {3, 4}");
  auto universe = enumerate_ip(n);
  std::vector<std::vector<Partition>> out;

  detail::PartitionSet it_set;
  for (const Partition& p : universe) {
    if (is_special(p) || rank(p) <= n - 2) it_set.insert(p);
  }
  out.push_back(detail::sorted(std::move(it_set)));

  for (const auto& G : maximal_subgroups_s_n(n)) {
    detail::PartitionSet s;
    for (const Permutation& g : G) s.insert(eta(g));
    for (const Partition& p : universe)
      if (rank(p) <= n - 1) s.insert(p);
    out.push_back(detail::sorted(std::move(s)));
  }
  std::sort(out.begin(), out.end());

  for (const auto& sub : out) {
    detail::PartitionSet s = detail::to_set(sub);
    for (const Partition& a : sub) {
      if (!s.count(a.star()))
        throw std::logic_error("maximal_subsemigroups: not inverse closed");
      for (const Partition& b : sub)
        if (!s.count(a * b))
          throw std::logic_error("maximal_subsemigroups: not closed");
    }
    for (const Partition& u : universe) {
      if (s.count(u)) continue;
      if (detail::closure_with(s, u, universe.size()).size() != universe.size())
        throw std::logic_error("maximal_subsemigroups: adjoining " +
                               u.to_string() + " does not generate IP_n");
    }
  }
  return out;
}

/// Groups a set of IP elements into H-classes (shared rho and lambda).
inline std::vector<std::vector<Partition>> h_classes(
    const std::vector<Partition>& elements) {
  std::map<std::pair<Equivalence, Equivalence>, std::vector<Partition>> groups;
  for (const Partition& p : elements)
    groups[{p.rho(), p.lambda()}].push_back(p);
  std::vector<std::vector<Partition>> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/// H-cross-section test: a product-closed subset meeting every H-class of
/// IP_n exactly once.
inline bool is_h_cross_section(const std::vector<Partition>& subset, int n,
                               int max_n = 5) {
  auto classes = h_classes(enumerate_ip(n, max_n));
  std::map<std::pair<Equivalence, Equivalence>, int> hits;
  for (const auto& cls : classes) hits[{cls[0].rho(), cls[0].lambda()}] = 0;
  for (const Partition& p : subset) {
    auto it = hits.find({p.rho(), p.lambda()});
    if (it == hits.end() || ++it->second > 1) return false;
  }
  for (const auto& [key, count] : hits)
    if (count != 1) return false;
  detail::PartitionSet s = detail::to_set(subset);
  for (const Partition& a : subset)
    for (const Partition& b : subset)
      if (!s.count(a * b)) return false;
  return true;
}

inline std::vector<Partition> enumerate_iop(int n, int max_n = 5) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_ip(n, max_n))
    if (in_iop(p)) out.push_back(p);
  return out;
}

inline std::vector<Partition> enumerate_it(int n, int max_n = 5) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_ip(n, max_n))
    if (is_special(p)) out.push_back(p);
  return out;
}

struct CsMaximalityWitness {
  std::string adjoined;   // the outside element
  std::string violation;  // "non-regular" or "noncommuting-idempotents"
  std::string detail;     // offending element or pair, as literals
};

struct CsMaximalityReport {
  int degree = 0;
  std::size_t base_size = 0;  // |IP_n ∪ {upsilon}|
  bool base_closed = false;
  bool base_inverse = false;
  std::vector<CsMaximalityWitness> witnesses;
  std::size_t outside_count = 0;

  bool all_outside_violate() const {
    return witnesses.size() == outside_count;
  }
  bool holds() const { return base_closed && base_inverse && all_outside_violate(); }
};

/// Confirms that IP_n ∪ {upsilon} is an inverse subsemigroup of CS_n and
/// that adjoining any further element breaks regularity or idempotent
/// commutation in the generated subsemigroup, one witness per element.
inline CsMaximalityReport verify_ip_maximal_inverse_in_cs(int n) {
  if (n < 2 || n > 3)
    throw BoundExceeded("verify_ip_maximal_inverse_in_cs: supported for n in {2, 3}");
  CsMaximalityReport report;
  report.degree = n;
  auto cs = enumerate_cs(n, 4);
  detail::PartitionSet base = detail::to_set(enumerate_ip(n));
  base.insert(upsilon(n));
  report.base_size = base.size();

  auto is_inverse_in = [](const detail::PartitionSet& s, std::string& why,
                          std::string& who) {
    std::vector<Partition> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    for (const Partition& a : members) {
      bool regular = false;
      for (const Partition& x : members)
        if (a * x * a == a && x * a * x == x) {
          regular = true;
          break;
        }
      if (!regular) {
        why = "non-regular";
        who = a.to_string();
        return false;
      }
    }
    std::vector<Partition> idem;
    for (const Partition& a : members)
      if (a * a == a) idem.push_back(a);
    for (const Partition& e : idem)
      for (const Partition& f : idem)
        if (e * f != f * e) {
          why = "noncommuting-idempotents";
          who = e.to_string() + " , " + f.to_string();
          return false;
        }
    return true;
  };

  report.base_closed = true;
  for (const Partition& a : base)
    for (const Partition& b : base)
      if (!base.count(a * b)) report.base_closed = false;
  std::string why, who;
  report.base_inverse = is_inverse_in(base, why, who);

  for (const Partition& s : cs) {
    if (base.count(s)) continue;
    ++report.outside_count;
    auto closure = detail::closure_with(base, s, cs.size());
    std::string violation, detail_str;
    if (!is_inverse_in(closure, violation, detail_str)) {
      report.witnesses.push_back(
          CsMaximalityWitness{s.to_string(), violation, detail_str});
    }
  }
  return report;
}

}  // namespace dualsym
