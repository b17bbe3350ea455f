#pragma once

// Closed inverse subsemigroups of IP_n, their right cosets under the natural
// order, the coset representation phi_H into a symmetric inverse monoid, and
// the classification of the faithful cases.

#include "dualsym/enumeration.hpp"
#include "dualsym/inverse.hpp"
#include "dualsym/partial_injection.hpp"

namespace dualsym {

/// Upward closure in the natural order: everything above some element of A.
inline std::vector<Partition> up_closure(const std::vector<Partition>& seeds,
                                         int n, int max_n = 5) {
  std::vector<Partition> out;
  for (const Partition& b : enumerate_ip(n, max_n)) {
    for (const Partition& a : seeds) {
      if (natural_leq(a, b)) {
        out.push_back(b);
        break;
      }
    }
  }
  return out;
}

/// H = [G]: the up-closure of a subgroup, which is inverse-closed,
/// product-closed and order-closed.  Keeps the subgroup as origin.
struct ClosedInverseSubsemigroup {
  int degree = 0;
  std::vector<Partition> elements;  // sorted canonically
  std::vector<Partition> origin;    // the subgroup G

  bool contains(const Partition& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
};

inline ClosedInverseSubsemigroup closed_from_subgroup(
    const std::vector<Partition>& subgroup, int n, int max_n = 5) {
  if (subgroup.empty())
    throw std::invalid_argument("closed_from_subgroup: empty subgroup");
  ClosedInverseSubsemigroup h;
  h.degree = n;
  h.origin = subgroup;
  std::sort(h.origin.begin(), h.origin.end());
  h.elements = up_closure(subgroup, n, max_n);
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

/// [Ha] = [Hb] iff a b⁻¹ ∈ H.  Both arguments must be coset representatives,
/// i.e. a a⁻¹ ∈ H.
inline bool coset_eq(const ClosedInverseSubsemigroup& h, const Partition& a,
                     const Partition& b) {
  if (!h.contains(a * a.star()) || !h.contains(b * b.star()))
    throw std::invalid_argument("coset_eq: arguments are not coset representatives");
  return h.contains(a * b.star());
}

/// The right coset space {[Hs] : s s⁻¹ ∈ H} with stable labels: for H = [f],
/// f a rank-2 idempotent with trivial origin, the label of [Hx] is the
/// literal of f*x; otherwise the canonically least representative.
struct CosetSpace {
  ClosedInverseSubsemigroup subsemigroup;
  std::vector<Partition> reps;       // one representative per point
  std::vector<std::string> labels;   // parallel to reps, sorted ascending

  std::size_t size() const { return reps.size(); }
};

namespace detail {

inline bool rank2_trivial_origin(const ClosedInverseSubsemigroup& h) {
  return h.origin.size() == 1 && rank(h.origin.front()) == 2 &&
         is_idempotent(h.origin.front());
}

}  // namespace detail

inline CosetSpace coset_space(const ClosedInverseSubsemigroup& h,
                              int max_n = 5) {
  CosetSpace c;
  c.subsemigroup = h;
  const bool fx_labels = detail::rank2_trivial_origin(h);
  const Partition* f = fx_labels ? &h.origin.front() : nullptr;
  std::vector<std::pair<std::string, Partition>> points;
  for (const Partition& s : enumerate_ip(h.degree, max_n)) {
    if (!h.contains(s * s.star())) continue;
    if (fx_labels) {
      std::string label = (*f * s).to_string();
      bool known = false;
      for (auto& [l, rep] : points)
        if (l == label) {
          known = true;
          break;
        }
      if (!known) points.emplace_back(std::move(label), s);
    } else {
      bool known = false;
      for (auto& [l, rep] : points)
        if (coset_eq(h, rep, s)) {
          known = true;
          if (s < rep) rep = s;  // canonically least member representative
          break;
        }
      if (!known) points.emplace_back(std::string(), s);
    }
  }
  if (!fx_labels)
    for (auto& [l, rep] : points) l = rep.to_string();
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [l, rep] : points) {
    c.labels.push_back(std::move(l));
    c.reps.push_back(std::move(rep));
  }
  return c;
}

/// phi_H(s): the partial injection [Hx] -> [Hxs] on the coset points.
inline PartialInjection phi_H(const CosetSpace& c, const Partition& s) {
  const auto& h = c.subsemigroup;
  auto locate = [&](const Partition& t) -> int {
    if (detail::rank2_trivial_origin(h)) {
      std::string label = (h.origin.front() * t).to_string();
      auto it = std::lower_bound(c.labels.begin(), c.labels.end(), label);
      if (it != c.labels.end() && *it == label)
        return static_cast<int>(it - c.labels.begin());
      return -1;
    }
    for (std::size_t i = 0; i < c.reps.size(); ++i)
      if (coset_eq(h, c.reps[i], t)) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> img(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Partition t = c.reps[i] * s;
    if (!h.contains(t * t.star())) continue;
    int j = locate(t);
    if (j >= 0) img[i] = j + 1;
  }
  return PartialInjection::from_images(std::move(img));
}

inline PartialInjection phi_H(const ClosedInverseSubsemigroup& h,
                              const Partition& s, int max_n = 5) {
  return phi_H(coset_space(h, max_n), s);
}

/// The rank-2 idempotents: two blocks F ∪ F' and complement.
inline std::vector<Partition> theta_pr(int n, int max_n = 5) {
  std::vector<Partition> out;
  for (const Partition& e : enumerate_idempotents(n, max_n))
    if (rank(e) == 2) out.push_back(e);
  return out;
}

/// The maximal idempotents below the identity: the pair collapses tau_{x,y}.
inline std::vector<Partition> theta_max(int n) {
  std::vector<Partition> out;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) out.push_back(tau({x, y}, n));
  std::sort(out.begin(), out.end());
  return out;
}

/// The explicit conjugating element {F1 ∪ F2', complement ∪ complement'}
/// between the closures of two rank-2 idempotents.
inline Partition conjugator(const Partition& f1, const Partition& f2) {
  if (!is_idempotent(f1) || !is_idempotent(f2) || rank(f1) != 2 ||
      rank(f2) != 2 || f1.degree() != f2.degree())
    throw std::invalid_argument("conjugator: need two rank-2 idempotents");
  const int n = f1.degree();
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x)
    labels[static_cast<std::size_t>(x - 1)] = f1.class_of(Point{x, false});
  for (int y = 1; y <= n; ++y)
    labels[static_cast<std::size_t>(n + y - 1)] = f2.class_of(Point{y, false});
  return Partition::from_labels(n, std::move(labels));
}

/// a⁻¹ H a ⊆ K and a K a⁻¹ ⊆ H: the quoted criterion for phi_H and phi_K to
/// be equivalent representations.
inline bool conjugates_into(const Partition& a,
                            const ClosedInverseSubsemigroup& h,
                            const ClosedInverseSubsemigroup& k) {
  for (const Partition& x : h.elements)
    if (!k.contains(a.star() * x * a)) return false;
  for (const Partition& x : k.elements)
    if (!h.contains(a * x * a.star())) return false;
  return true;
}

struct RepresentationCase {
  std::vector<Partition> subgroup;
  int idempotent_rank = 0;
  std::size_t points = 0;
  bool faithful = false;
  std::optional<bool> equivalent_to_canonical;  // set for faithful cases
};

struct FaithfulnessReport {
  int degree = 0;
  std::size_t canonical_points = 0;  // coset count of the reference [f]
  std::vector<RepresentationCase> cases;

  std::size_t faithful_count() const {
    std::size_t k = 0;
    for (const auto& c : cases) k += c.faithful;
    return k;
  }
  bool faithful_exactly_rank2_trivial() const {
    for (const auto& c : cases) {
      bool expect = c.subgroup.size() == 1 && c.idempotent_rank == 2;
      if (c.faithful != expect) return false;
    }
    return true;
  }
  bool all_faithful_equivalent() const {
    for (const auto& c : cases)
      if (c.faithful &&
          (!c.equivalent_to_canonical || !*c.equivalent_to_canonical))
        return false;
    return true;
  }
};

/// Sweeps every subgroup of every group H-class of IP_n, forms H = [G], and
/// classifies the coset representation phi_H as faithful or not; faithful
/// cases are matched against the reference one by the conjugation criterion.
inline FaithfulnessReport faithfulness_report(int n) {
  if (n < 2 || n > 4)
    throw BoundExceeded("faithfulness_report: supported for n in {2, 3, 4}");
  FaithfulnessReport report;
  report.degree = n;
  auto universe = enumerate_ip(n);

  // reference: the closure of the rank-2 idempotent separating {1}
  std::vector<int> rest;
  for (int t = 2; t <= n; ++t) rest.push_back(t);
  Partition f0 = n == 2 ? Partition::identity(2)
                        : idempotent_meet(tau({1}, n), tau(rest, n));
  ClosedInverseSubsemigroup h0 = closed_from_subgroup({f0}, n);
  CosetSpace c0 = coset_space(h0);
  report.canonical_points = c0.size();

  for (const Partition& e : enumerate_idempotents(n)) {
    std::vector<Partition> h_class;
    for (const Partition& a : universe)
      if (green_H(a, e)) h_class.push_back(a);
    auto subgroups = detail::all_subgroups(
        h_class, e, [](const Partition& a, const Partition& b) { return a * b; });
    for (const auto& g : subgroups) {
      RepresentationCase c;
      c.subgroup = g;
      c.idempotent_rank = rank(e);
      ClosedInverseSubsemigroup h = closed_from_subgroup(g, n);
      CosetSpace space = coset_space(h);
      c.points = space.size();
      std::set<PartialInjection> images;
      for (const Partition& s : universe) images.insert(phi_H(space, s));
      c.faithful = images.size() == universe.size();
      if (c.faithful) {
        bool equivalent = false;
        if (g.size() == 1 && rank(e) == 2) {
          equivalent = conjugates_into(conjugator(e, f0), h, h0);
        } else {
          for (const Partition& a : universe)
            if (conjugates_into(a, h, h0)) {
              equivalent = true;
              break;
            }
        }
        c.equivalent_to_canonical = equivalent;
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace dualsym
