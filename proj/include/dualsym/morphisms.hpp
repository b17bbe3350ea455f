#pragma once

// Maps between the semigroups: the embedding of IS_m into IP_{m+1}, the
// D-class-count obstruction against IS_n -> IP_n, conjugation automorphisms
// and the exhaustive automorphism search.

#include "dualsym/biequivalence.hpp"
#include "dualsym/enumeration.hpp"
#include "dualsym/partial_injection.hpp"

namespace dualsym {

/// kappa(s): one block swallowing the extra point together with everything
/// outside dom(s) and ran(s), plus the pairs {x, s(x)'}.  An injective
/// homomorphism IS_m -> IP_{m+1}.
inline Partition kappa(const PartialInjection& s) {
  const int m = s.degree();
  const int n = m + 1;
  std::vector<int> labels(static_cast<std::size_t>(2 * n), 0);  // 0 = omega
  for (int x = 1; x <= m; ++x) {
    if (!s.defined_at(x)) continue;
    labels[static_cast<std::size_t>(x - 1)] = x;
    labels[static_cast<std::size_t>(n + s(x) - 1)] = x;
  }
  return Partition::from_labels(n, std::move(labels));
}

namespace detail {

/// D-classes by the ideal-theoretic route: R-classes from right principal
/// ideals, L-classes from left ones, and a D b iff some c has a R c L b.
template <typename T, typename Hash>
int d_class_count_by_ideals(const std::vector<T>& sem) {
  const std::size_t m = sem.size();
  auto ideal_key = [&](const T& a, bool right) {
    std::vector<T> members{a};
    for (const T& s : sem) members.push_back(right ? a * s : s * a);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
  };
  std::map<std::vector<T>, int> rkeys, lkeys;
  std::vector<int> rclass(m), lclass(m);
  for (std::size_t i = 0; i < m; ++i) {
    rclass[i] = rkeys.emplace(ideal_key(sem[i], true),
                              static_cast<int>(rkeys.size()))
                    .first->second;
    lclass[i] = lkeys.emplace(ideal_key(sem[i], false),
                              static_cast<int>(lkeys.size()))
                    .first->second;
  }
  // D = R ∘ L: connect elements sharing an R-class or an L-class
  UnionFind uf(static_cast<int>(m));
  std::map<int, int> first_r, first_l;
  for (std::size_t i = 0; i < m; ++i) {
    auto [rit, rnew] = first_r.emplace(rclass[i], static_cast<int>(i));
    if (!rnew) uf.unite(rit->second, static_cast<int>(i));
    auto [lit, lnew] = first_l.emplace(lclass[i], static_cast<int>(i));
    if (!lnew) uf.unite(lit->second, static_cast<int>(i));
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < m; ++i) roots.insert(uf.find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

}  // namespace detail

struct EmbeddingObstruction {
  int degree = 0;
  int ip_d_classes = 0;  // expected: n
  int is_d_classes = 0;  // expected: n + 1
};

/// The certificate that IS_n cannot embed in IP_n: a regular subsemigroup
/// inherits its D-relation from the ambient semigroup, so an embedded copy
/// of IS_n could have at most as many D-classes as IP_n — but the counts are
/// n+1 against n.  Both counts computed from principal ideals.
inline EmbeddingObstruction no_embedding_witness(int n, int max_n = 3) {
  if (n < 1) throw std::invalid_argument("no_embedding_witness: degree >= 1");
  if (n > max_n)
    throw BoundExceeded("no_embedding_witness: degree " + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_n));
  EmbeddingObstruction out;
  out.degree = n;
  out.ip_d_classes =
      detail::d_class_count_by_ideals<Partition, PartitionHash>(enumerate_ip(n));
  out.is_d_classes = detail::d_class_count_by_ideals<PartialInjection,
                                                     PartialInjectionHash>(
      enumerate_is(n, std::max(max_n, n)));
  return out;
}

/// Conjugation by a unit: g⁻¹ a g.
inline Partition phi_g(const Permutation& g, const Partition& a) {
  if (g.degree() != a.degree())
    throw DegreeMismatch("phi_g: degree mismatch");
  return eta(g.inverse()) * a * eta(g);
}

/// A bijection of IP_n recorded as images by position in the canonical
/// enumeration.
struct ElementMap {
  int degree = 0;
  std::vector<std::size_t> image;

  friend bool operator==(const ElementMap& a, const ElementMap& b) {
    return a.degree == b.degree && a.image == b.image;
  }
  friend bool operator<(const ElementMap& a, const ElementMap& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.image < b.image;
  }
};

inline ElementMap inner_automorphism(const Permutation& g, int max_n = 5) {
  auto universe = enumerate_ip(g.degree(), max_n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i)
    index.emplace(universe[i].to_string(), i);
  ElementMap out;
  out.degree = g.degree();
  out.image.reserve(universe.size());
  for (const Partition& a : universe)
    out.image.push_back(index.at(phi_g(g, a).to_string()));
  return out;
}

/// Every multiplication-preserving bijection of IP_n, n <= 3.  The search
/// fixes a product-preserving bijection of the unit group and an image for
/// the extra generator, propagates along the Cayley graph of a closure
/// table, then accepts only after checking the full multiplication table.
inline std::vector<ElementMap> enumerate_automorphisms(int n) {
  if (n < 1 || n > 3)
    throw BoundExceeded("enumerate_automorphisms: supported for n in {1, 2, 3}");
  auto universe = enumerate_ip(n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i)
    index.emplace(universe[i].to_string(), i);
  const std::size_t m = universe.size();

  auto is_automorphism = [&](const std::vector<std::size_t>& img) {
    std::vector<char> hit(m, 0);
    for (std::size_t v : img) {
      if (v >= m || hit[v]) return false;
      hit[v] = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t prod = index.at((universe[i] * universe[j]).to_string());
        if (index.at((universe[img[i]] * universe[img[j]]).to_string()) !=
            img[prod])
          return false;
      }
    return true;
  };

  std::set<std::vector<std::size_t>> found;

  if (n <= 2) {
    // small enough for raw brute force over all bijections
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (is_automorphism(perm)) found.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<Partition> units;
    for (const Permutation& g : all_permutations(n)) units.push_back(eta(g));
    std::vector<Partition> xi_images;
    for (const Partition& a : universe)
      if (rank(a) == n - 1 && !is_special(a)) xi_images.push_back(a);

    // product-preserving bijections of the unit group
    std::map<std::string, std::size_t> unit_pos;
    for (std::size_t i = 0; i < units.size(); ++i)
      unit_pos[units[i].to_string()] = i;
    std::vector<std::vector<std::size_t>> unit_prod(
        units.size(), std::vector<std::size_t>(units.size()));
    for (std::size_t i = 0; i < units.size(); ++i)
      for (std::size_t j = 0; j < units.size(); ++j)
        unit_prod[i][j] = unit_pos.at((units[i] * units[j]).to_string());
    std::vector<std::vector<Partition>> unit_maps;
    std::vector<std::size_t> perm(units.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < units.size() && ok; ++i)
        for (std::size_t j = 0; j < units.size() && ok; ++j)
          ok = unit_prod[perm[i]][perm[j]] == perm[unit_prod[i][j]];
      if (ok) {
        std::vector<Partition> map;
        for (std::size_t i = 0; i < units.size(); ++i)
          map.push_back(units[perm[i]]);
        unit_maps.push_back(std::move(map));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Partition> gens = units;
    gens.push_back(xi(1, 2, 3, n));
    ClosureTable table = close(gens);

    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    for (const auto& unit_map : unit_maps) {
      for (const Partition& xi_img : xi_images) {
        std::vector<Partition> gen_images = unit_map;
        gen_images.push_back(xi_img);
        // seed generator images, then walk the Cayley edges
        std::vector<std::size_t> value(table.size(), kUnset);
        for (std::size_t j = 0; j < gens.size(); ++j)
          value[table.index.at(gens[j].to_string())] =
              index.at(gen_images[j].to_string());
        bool consistent = true;
        for (std::size_t i = 0; i < table.size() && consistent; ++i) {
          if (value[i] == kUnset) {
            consistent = false;
            break;
          }
          for (std::size_t j = 0; j < gens.size(); ++j) {
            std::size_t target = table.edges[i][j];
            std::size_t expect = index.at(
                (universe[value[i]] * universe[index.at(gen_images[j].to_string())])
                    .to_string());
            if (value[target] == kUnset)
              value[target] = expect;
            else if (value[target] != expect) {
              consistent = false;
              break;
            }
          }
        }
        if (!consistent) continue;
        std::vector<std::size_t> candidate(m);
        for (std::size_t i = 0; i < table.size(); ++i)
          candidate[index.at(table.elements[i].to_string())] = value[i];
        if (is_automorphism(candidate)) found.insert(std::move(candidate));
      }
    }
  }

  std::vector<ElementMap> out;
  for (const auto& img : found) out.push_back(ElementMap{n, img});
  return out;
}

}  // namespace dualsym
