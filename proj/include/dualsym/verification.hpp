#pragma once

// Named check bundles behind the `verify` command and the acceptance run.
// Each returns one line per assertion; a check never throws for a wrong
// mathematical outcome, only for out-of-range arguments.

#include "dualsym/dualsym.hpp"
#include "dualsym/oracles.hpp"

namespace dualsym::verification {

struct Check {
  std::string label;
  bool pass = false;
};

using Checks = std::vector<Check>;

namespace detail_v {

inline void add(Checks& out, std::string label, bool pass) {
  out.push_back(Check{std::move(label), pass});
}

inline std::string nstr(int n) { return std::to_string(n); }

// per-element principal-ideal keys over a universe, for the Green oracles
struct IdealKeys {
  std::vector<int> r, l;  // class ids
  std::vector<std::vector<Partition>> two_sided;
};

inline IdealKeys ideal_keys(const std::vector<Partition>& universe) {
  IdealKeys keys;
  std::map<std::vector<Partition>, int> rmap, lmap;
  keys.r.reserve(universe.size());
  keys.l.reserve(universe.size());
  for (const Partition& a : universe) {
    keys.r.push_back(
        rmap.emplace(oracle::right_ideal(a, universe), static_cast<int>(rmap.size()))
            .first->second);
    keys.l.push_back(
        lmap.emplace(oracle::left_ideal(a, universe), static_cast<int>(lmap.size()))
            .first->second);
    keys.two_sided.push_back(oracle::two_sided_ideal(a, universe));
  }
  return keys;
}

}  // namespace detail_v

/// Cardinality of IP_n and of its idempotent set against the closed formulas.
inline Checks counts(int n, int ip_bound = 5) {
  using detail_v::add;
  Checks out;
  static constexpr std::uint64_t kIp[] = {0, 1, 3, 25, 339, 6721};
  static constexpr std::uint64_t kBell[] = {0, 1, 2, 5, 15, 52};
  auto universe = enumerate_ip(n, ip_bound);
  std::uint64_t formula = ip_cardinality(n);
  bool ok = universe.size() == formula;
  if (n <= 5) ok = ok && formula == kIp[n];
  add(out,
      "counts n=" + detail_v::nstr(n) + ": |IP_" + detail_v::nstr(n) +
          "| enumerated " + std::to_string(universe.size()) +
          " == sum_k S(n,k)^2*k! = " + std::to_string(formula),
      ok);
  std::size_t idem = enumerate_idempotents(n, ip_bound).size();
  std::uint64_t b = bell(n);
  ok = idem == b;
  if (n <= 5) ok = ok && b == kBell[n];
  add(out,
      "counts n=" + detail_v::nstr(n) + ": |E(IP_" + detail_v::nstr(n) +
          ")| enumerated " + std::to_string(idem) +
          " == Bell(n) = " + std::to_string(b),
      ok);
  return out;
}

/// rho/lambda/rank characterisations of R, L, H, D against the principal
/// ideal definitions, over every pair of IP_n.
inline Checks green(int n) {
  using detail_v::add;
  Checks out;
  if (n < 1 || n > 3) throw BoundExceeded("verify green: supported for n <= 3");
  auto universe = enumerate_ip(n);
  auto keys = detail_v::ideal_keys(universe);
  const std::size_t m = universe.size();
  bool okR = true, okL = true, okH = true, okD = true, okJ = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool ir = keys.r[i] == keys.r[j];
      bool il = keys.l[i] == keys.l[j];
      bool ij = keys.two_sided[i] == keys.two_sided[j];
      bool id = false;  // D = R∘L through some middle element
      for (std::size_t k = 0; k < m && !id; ++k)
        id = keys.r[i] == keys.r[k] && keys.l[k] == keys.l[j];
      okR = okR && green_R(universe[i], universe[j]) == ir;
      okL = okL && green_L(universe[i], universe[j]) == il;
      okH = okH && green_H(universe[i], universe[j]) == (ir && il);
      okD = okD && green_D(universe[i], universe[j]) == id;
      okJ = okJ && green_J(universe[i], universe[j]) == ij;
    }
  }
  std::string suffix = " on all " + std::to_string(m * m) + " pairs of IP_" +
                       detail_v::nstr(n);
  add(out, "green: R by rho == R by right ideals" + suffix, okR);
  add(out, "green: L by lambda == L by left ideals" + suffix, okL);
  add(out, "green: H by rho&lambda == R∩L from ideals" + suffix, okH);
  add(out, "green: D by rank == R∘L from ideals" + suffix, okD);
  add(out, "green: J by rank == two-sided ideals" + suffix, okJ);
  return out;
}

inline std::vector<Partition> symmetric_group_generators(int n) {
  std::vector<Partition> gens;
  gens.push_back(eta(Permutation::transposition(1, 2, n)));
  if (n >= 3) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    gens.push_back(eta(Permutation::from_images(std::move(img))));
  }
  return gens;
}

/// Generation of IP_n from the symmetric group plus one extra element.
inline Checks generators(int n) {
  using detail_v::add;
  Checks out;
  if (n < 3 || n > 4)
    throw BoundExceeded("verify generators: supported for n in {3, 4}");
  auto gens = symmetric_group_generators(n);
  gens.push_back(xi(1, 2, 3, n));
  auto table = close(gens);
  std::uint64_t expect = ip_cardinality(n);
  add(out,
      "generators n=" + detail_v::nstr(n) + ": |<S_n, xi(1,2,3)>| = " +
          std::to_string(table.size()) + " == |IP_n| = " + std::to_string(expect),
      table.size() == expect);

  auto universe = enumerate_ip(n);
  detail::PartitionSet orbit;
  for (const Permutation& g : all_permutations(n))
    for (const Permutation& h : all_permutations(n))
      orbit.insert(eta(g) * xi(1, 2, 3, n) * eta(h));
  auto sym_gens = symmetric_group_generators(n);
  auto generates_all = [&](const Partition& u) {
    auto with_u = sym_gens;
    with_u.push_back(u);
    return close(with_u).size() == universe.size();
  };
  if (n == 3) {
    bool ok = true;
    for (const Partition& u : universe)
      ok = ok && generates_all(u) == (orbit.count(u) > 0);
    add(out,
        "generators n=3: <S_3, u> = IP_3 exactly when u lies in the "
        "S_3-double-orbit of xi (all 25 u swept)",
        ok);
  } else {
    bool ok = true;
    std::size_t swept = 0;
    for (const Partition& u : universe) {
      if (rank(u) != n - 1) continue;
      ++swept;
      ok = ok && generates_all(u) == (orbit.count(u) > 0);
    }
    add(out,
        "generators n=4: <S_4, u> = IP_4 exactly when rank-3 u lies in the "
        "S_4-double-orbit of xi (" +
            std::to_string(swept) + " u swept)",
        ok);
  }
  return out;
}

/// The ideal lattice: principal ideals and the chain I_1 ⊂ ... ⊂ I_n.
inline Checks ideals(int n) {
  using detail_v::add;
  Checks out;
  if (n < 2 || n > 3)
    throw BoundExceeded("verify ideals: supported for n in {2, 3}");
  auto universe = enumerate_ip(n);
  bool ok = true;
  for (const Partition& b : universe)
    ok = ok && principal_ideal(b) == ideal(rank(b), n);
  add(out,
      "ideals n=" + detail_v::nstr(n) +
          ": IP_n b IP_n == I_rank(b) for every b (triple products)",
      ok);
  auto found = all_ideals(n);
  bool chain = found.size() == static_cast<std::size_t>(n);
  for (int k = 1; k <= n && chain; ++k)
    chain = found[static_cast<std::size_t>(k - 1)] == ideal(k, n);
  add(out,
      "ideals n=" + detail_v::nstr(n) + ": every two-sided ideal equals some I_k (found " +
          std::to_string(found.size()) + " of " + detail_v::nstr(n) + ")",
      chain);
  add(out, "ideals n=" + detail_v::nstr(n) + ": I_1 = {zero}",
      ideal(1, n) == std::vector<Partition>{Partition::zero(n)});
  return out;
}

/// Maximal subsemigroups: the two families, with maximality certified by
/// adjoining elements.
inline Checks maximal(int n) {
  using detail_v::add;
  Checks out;
  if (n < 3 || n > 4)
    throw BoundExceeded("verify maximal: supported for n in {3, 4}");
  auto subs = maximal_subsemigroups(n);  // self-verifies closure+maximality
  std::size_t expected = 1 + maximal_subgroups_s_n(n).size();
  add(out,
      "maximal n=" + detail_v::nstr(n) + ": exactly " + std::to_string(expected) +
          " maximal subsemigroups (" + std::to_string(subs.size()) + " found)",
      subs.size() == expected);
  detail::PartitionSet it_family;
  for (const Partition& p : enumerate_ip(n))
    if (is_special(p) || rank(p) <= n - 2) it_family.insert(p);
  auto it_sorted = detail::sorted(std::move(it_family));
  bool has_it = std::find(subs.begin(), subs.end(), it_sorted) != subs.end();
  add(out,
      "maximal n=" + detail_v::nstr(n) + ": IT_n ∪ I_{n-2} is among them (size " +
          std::to_string(it_sorted.size()) + ")",
      has_it);
  bool inverse_closed = true;
  for (const auto& s : subs) {
    detail::PartitionSet set = detail::to_set(s);
    for (const Partition& a : s) inverse_closed = inverse_closed && set.count(a.star());
  }
  add(out, "maximal n=" + detail_v::nstr(n) + ": every maximal subsemigroup is inverse-closed",
      inverse_closed);
  return out;
}

/// The automorphism group: only conjugations by units.
inline Checks automorphisms(int n) {
  using detail_v::add;
  Checks out;
  auto auts = enumerate_automorphisms(n);  // throws BoundExceeded past 3
  std::size_t expect = n == 3 ? 6 : 1;
  add(out,
      "automorphisms n=" + detail_v::nstr(n) + ": |Aut(IP_n)| = " +
          std::to_string(auts.size()) + " (expected " + std::to_string(expect) + ")",
      auts.size() == expect);
  std::set<ElementMap> inner;
  for (const Permutation& g : all_permutations(n))
    inner.insert(inner_automorphism(g));
  bool all_inner = std::set<ElementMap>(auts.begin(), auts.end()) == inner;
  add(out,
      "automorphisms n=" + detail_v::nstr(n) +
          ": every automorphism is conjugation by a unit",
      all_inner);
  return out;
}

/// The embedding IS_n -> IP_{n+1} and the D-class obstruction at equal degree.
inline Checks embedding(int n) {
  using detail_v::add;
  Checks out;
  if (n < 1 || n > 3)
    throw BoundExceeded("verify embedding: supported for n in {1, 2, 3}");
  auto is_n = enumerate_is(n);
  bool hom = true, inj = true, into_ip = true;
  std::set<Partition> images;
  for (const PartialInjection& s : is_n) {
    Partition k = kappa(s);
    into_ip = into_ip && k.is_ip() && k.degree() == n + 1;
    inj = inj && images.insert(k).second;
    for (const PartialInjection& t : is_n)
      hom = hom && kappa(s * t) == kappa(s) * kappa(t);
  }
  std::string sz = std::to_string(is_n.size());
  add(out, "embedding n=" + detail_v::nstr(n) + ": kappa(st) == kappa(s)kappa(t) on all " +
               sz + "^2 pairs of IS_" + detail_v::nstr(n),
      hom);
  add(out, "embedding n=" + detail_v::nstr(n) + ": kappa injective into IP_" +
               detail_v::nstr(n + 1) + " (" + sz + " distinct images)",
      inj && into_ip);
  bool idem_ok = true, order_ok = true;
  for (const PartialInjection& s : is_n) {
    if (s.is_idempotent()) idem_ok = idem_ok && is_idempotent(kappa(s));
    for (const PartialInjection& t : is_n)
      if (natural_leq(s, t)) order_ok = order_ok && natural_leq(kappa(s), kappa(t));
  }
  add(out, "embedding n=" + detail_v::nstr(n) + ": kappa preserves idempotents and the natural order",
      idem_ok && order_ok);
  auto obstruction = no_embedding_witness(n);
  add(out,
      "embedding n=" + detail_v::nstr(n) + ": D-class counts (IP " +
          std::to_string(obstruction.ip_d_classes) + ", IS " +
          std::to_string(obstruction.is_d_classes) +
          ") forbid IS_n -> IP_n",
      obstruction.ip_d_classes == n && obstruction.is_d_classes == n + 1);
  return out;
}

/// Faithful effective transitive representations: exactly the closures of the
/// rank-2 idempotents with trivial subgroup, degree 2^n - 2, all equivalent.
inline Checks representation(int n) {
  using detail_v::add;
  Checks out;
  auto report = faithfulness_report(n);  // throws BoundExceeded outside 2..4
  add(out,
      "representation n=" + detail_v::nstr(n) +
          ": faithful exactly for trivial subgroups at rank-2 idempotents (" +
          std::to_string(report.faithful_count()) + " faithful of " +
          std::to_string(report.cases.size()) + " subgroup cases)",
      report.faithful_exactly_rank2_trivial());
  std::size_t expect_points = (static_cast<std::size_t>(1) << n) - 2;
  bool degree_ok = report.canonical_points == expect_points;
  for (const auto& c : report.cases)
    if (c.faithful) degree_ok = degree_ok && c.points == expect_points;
  add(out,
      "representation n=" + detail_v::nstr(n) + ": faithful degree " +
          std::to_string(report.canonical_points) + " == 2^n - 2 = " +
          std::to_string(expect_points),
      degree_ok);
  add(out,
      "representation n=" + detail_v::nstr(n) +
          ": all faithful representations equivalent via explicit conjugators",
      report.all_faithful_equivalent());
  add(out,
      "representation n=" + detail_v::nstr(n) + ": " +
          std::to_string(theta_pr(n).size()) +
          " rank-2 idempotents = D_2 ∩ E(IP_n) = S(n,2) = " +
          std::to_string(stirling2(n, 2)),
      theta_pr(n).size() == stirling2(n, 2));
  return out;
}

/// IOP_n: inverse subsemigroup, H-cross-section, idempotents shared with IP_n.
inline Checks iop(int n, std::uint64_t seed = 123456789) {
  using detail_v::add;
  Checks out;
  if (n < 2 || n > 4)
    throw BoundExceeded("verify iop: supported for n in {2, 3, 4}");
  auto members = enumerate_iop(n);
  bool closed = true, star_closed = true;
  for (const Partition& a : members) {
    star_closed = star_closed && in_iop(a.star());
    for (const Partition& b : members) closed = closed && in_iop(a * b);
  }
  add(out,
      "iop n=" + detail_v::nstr(n) + ": product-closed on all " +
          std::to_string(members.size() * members.size()) + " pairs",
      closed);
  add(out, "iop n=" + detail_v::nstr(n) + ": closed under the involution", star_closed);
  add(out,
      "iop n=" + detail_v::nstr(n) + ": H-cross-section of IP_n with |IOP_n| = " +
          std::to_string(members.size()) + " == sum_k S(n,k)^2 = " +
          std::to_string(ip_h_class_count(n)),
      is_h_cross_section(members, n) &&
          members.size() == ip_h_class_count(n));
  auto idem_ip = enumerate_idempotents(n);
  bool idem_shared = true;
  for (const Partition& e : idem_ip) idem_shared = idem_shared && in_iop(e);
  std::size_t iop_idems = 0;
  for (const Partition& a : members) iop_idems += is_idempotent(a);
  add(out,
      "iop n=" + detail_v::nstr(n) + ": E(IOP_n) == E(IP_n) (" +
          std::to_string(iop_idems) + " idempotents)",
      idem_shared && iop_idems == idem_ip.size());
  auto rng = make_rng(seed);
  bool random_ok = true;
  for (int t = 0; t < 2000; ++t) {
    Partition a = random_iop(8, rng), b = random_iop(8, rng);
    random_ok = random_ok && in_iop(a * b) && in_iop(a.star());
  }
  add(out, "iop: 2000 seeded random pairs at degree 8 stay inside IOP_8",
      random_ok);
  return out;
}

/// IP_n ∪ {upsilon} is maximal inverse inside CS_n, witnessed element by
/// element.
inline Checks cs_maximal(int n) {
  using detail_v::add;
  Checks out;
  auto report = verify_ip_maximal_inverse_in_cs(n);  // bound-checks n
  add(out,
      "cs-maximal n=" + detail_v::nstr(n) + ": IP_n ∪ {upsilon} (" +
          std::to_string(report.base_size) +
          " elements) is closed and inverse in CS_n",
      report.base_closed && report.base_inverse &&
          report.base_size == enumerate_ip(n).size() + 1);
  add(out,
      "cs-maximal n=" + detail_v::nstr(n) + ": all " +
          std::to_string(report.outside_count) +
          " outside elements break regularity or idempotent commutation (" +
          std::to_string(report.witnesses.size()) + " witnesses)",
      report.all_outside_violate());
  return out;
}

/// The two displayed multiplication examples at degree 8, bit-exact in
/// canonical serialization.
inline Checks worked_products() {
  using detail_v::add;
  Checks out;
  auto left1 = Partition::parse("{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}");
  auto right1 = Partition::parse("{1,1'|2,3,4|2',3'|5,5'|6,4'|7|6',7'|8,8'}");
  auto shown1 = Partition::parse("{1,2,1'|3,4|2',3'|5,5'|6,7,4',8'|6',7'|8}");
  add(out, "worked products: first displayed degree-8 product reproduces bit-exactly",
      (left1 * right1).to_string() == shown1.to_string());
  auto left2 = Partition::parse("{1,2'|2,3,1',4'|4,3'|5,6,5',6',7'|7,8,8'}");
  auto right2 = Partition::parse("{1,2'|2,1',3'|3,4,4'|5,6',8'|6,5'|7,8,7'}");
  add(out, "worked products: second displayed degree-8 product reproduces bit-exactly",
      (left2 * right2).to_string() ==
          "{1,1',3'|2,3,4,2',4'|5,6,7,8,5',6',7',8'}");
  return out;
}

/// The bijection onto biequivalences is multiplicative: the isomorphism with
/// the dual symmetric inverse monoid, exhaustively at degree n.
inline Checks isomorphism(int n) {
  using detail_v::add;
  Checks out;
  auto universe = enumerate_ip(n);
  bool valid = true, roundtrip = true, multiplicative = true;
  std::set<Biequivalence> images;
  for (const Partition& a : universe) {
    Biequivalence alpha = to_biequivalence(a);
    valid = valid && alpha.valid() && images.insert(alpha).second;
    roundtrip = roundtrip && from_biequivalence(alpha) == a;
  }
  for (const Partition& a : universe)
    for (const Partition& b : universe)
      multiplicative =
          multiplicative && to_biequivalence(a * b) ==
                                biequiv_multiply(to_biequivalence(a),
                                                 to_biequivalence(b));
  add(out,
      "isomorphism n=" + detail_v::nstr(n) +
          ": images are full, bifunctional, pairwise distinct, and invert",
      valid && roundtrip);
  add(out,
      "isomorphism n=" + detail_v::nstr(n) + ": multiplicative on all " +
          std::to_string(universe.size() * universe.size()) + " pairs",
      multiplicative);
  return out;
}

/// The algebraic property sweep: exhaustive at small degree, seeded random
/// volume at degree 8.
inline Checks properties(std::uint64_t seed = 123456789) {
  using detail_v::add;
  Checks out;
  std::size_t random_cases = 0;

  {
    bool ok = true;
    auto cs2 = enumerate_cs(2);
    for (const Partition& a : cs2)
      for (const Partition& b : cs2)
        for (const Partition& c : cs2) ok = ok && (a * b) * c == a * (b * c);
    auto ip3 = enumerate_ip(3);
    for (const Partition& a : ip3)
      for (const Partition& b : ip3)
        for (const Partition& c : ip3) ok = ok && (a * b) * c == a * (b * c);
    auto rng = make_rng(seed);
    for (int t = 0; t < 100000; ++t) {
      Partition a = random_cs(8, rng), b = random_cs(8, rng), c = random_cs(8, rng);
      ok = ok && (a * b) * c == a * (b * c);
      ++random_cases;
    }
    add(out,
        "properties: associativity exhaustive on CS_2^3 and IP_3^3 plus 100000 "
        "random degree-8 triples",
        ok);
  }
  {
    bool ok = true;
    auto ip3 = enumerate_ip(3);
    for (const Partition& a : ip3) {
      const Partition inv = a.star();
      for (const Partition& x : ip3) {
        bool is_inverse = a * x * a == a && x * a * x == x;
        ok = ok && is_inverse == (x == inv);
      }
    }
    auto rng = make_rng(seed + 1);
    for (int t = 0; t < 20000; ++t) {
      Partition a = random_ip(8, rng);
      ok = ok && a * a.star() * a == a && a.star() * a * a.star() == a.star();
      ++random_cases;
    }
    add(out,
        "properties: star(a) is the unique inverse on IP_3, and a-star(a)-a "
        "laws hold for 20000 random degree-8 elements",
        ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      auto idems = enumerate_idempotents(n);
      for (const Partition& e : idems)
        for (const Partition& f : idems) ok = ok && e * f == f * e;
    }
    auto rng = make_rng(seed + 2);
    for (int t = 0; t < 20000; ++t) {
      Partition e = random_idempotent(8, rng), f = random_idempotent(8, rng);
      ok = ok && e * f == f * e;
      ++random_cases;
    }
    add(out,
        "properties: idempotents commute, exhaustive n <= 3 plus 20000 random "
        "degree-8 pairs",
        ok);
  }
  {
    bool ok = true;
    auto ip3 = enumerate_ip(3);
    for (const Partition& a : ip3)
      for (const Partition& b : ip3) {
        Partition ab = a * b;
        ok = ok && rank(ab) <= std::min(rank(a), rank(b));
        ok = ok && a.rho().refines(ab.rho()) && b.lambda().refines(ab.lambda());
        ok = ok && ab.is_ip();
      }
    auto rng = make_rng(seed + 3);
    for (int t = 0; t < 20000; ++t) {
      Partition a = random_ip(8, rng), b = random_ip(8, rng);
      Partition ab = a * b;
      ok = ok && rank(ab) <= std::min(rank(a), rank(b));
      ok = ok && a.rho().refines(ab.rho()) && b.lambda().refines(ab.lambda());
      ok = ok && ab.is_ip();
      ++random_cases;
    }
    add(out,
        "properties: rank subadditivity, rho/lambda coarsening, and closure of "
        "IP under products (exhaustive n=3 plus 20000 random degree-8 pairs)",
        ok);
  }
  {
    bool ok = true;
    auto ip3 = enumerate_ip(3);
    for (const Partition& a : ip3)
      for (const Partition& b : ip3) {
        if (!natural_leq(a, b)) continue;
        for (const Partition& c : ip3)
          ok = ok && natural_leq(c * a, c * b) && natural_leq(a * c, b * c);
      }
    auto rng = make_rng(seed + 4);
    for (int t = 0; t < 20000; ++t) {
      Partition b = random_ip(8, rng);
      Partition a = b * random_idempotent(8, rng);  // a <= b by construction
      Partition c = random_ip(8, rng);
      ok = ok && natural_leq(a, b) && natural_leq(c * a, c * b) &&
           natural_leq(a * c, b * c);
      ++random_cases;
    }
    add(out,
        "properties: the natural order is compatible with multiplication "
        "(exhaustive n=3 plus 20000 random degree-8 triples)",
        ok);
  }
  {
    bool ok = true;
    auto cs3 = enumerate_cs(3);
    for (const Partition& a : cs3)
      for (const Partition& b : cs3)
        ok = ok && a * b == oracle::chain_multiply(a, b);
    auto rng = make_rng(seed + 5);
    for (int t = 0; t < 5000; ++t) {
      Partition a = random_cs(8, rng), b = random_cs(8, rng);
      ok = ok && a * b == oracle::chain_multiply(a, b);
      ++random_cases;
    }
    add(out,
        "properties: union-find product equals the literal chain-closure "
        "product (all CS_3 pairs plus 5000 random degree-8 pairs)",
        ok);
  }
  {
    bool ok = true;
    auto rng = make_rng(seed + 6);
    for (int t = 0; t < 5000; ++t) {
      Partition a = random_cs(8, rng);
      std::string s = a.to_string();
      ok = ok && Partition::parse(s).to_string() == s;
      ok = ok && a.star().star() == a;
      ++random_cases;
    }
    add(out,
        "properties: canonical serialization is a fixed point of parse, and "
        "star is an involution (5000 random degree-8 elements)",
        ok);
  }
  add(out,
      "properties: total seeded random case volume " +
          std::to_string(random_cases) + " >= 100000",
      random_cases >= 100000);
  return out;
}

/// Dispatch by suite name; unknown names yield an empty optional.
inline std::optional<Checks> run_suite(const std::string& suite, int n,
                                       std::uint64_t seed, int ip_bound = 5) {
  if (suite == "counts") return counts(n, ip_bound);
  if (suite == "green") return green(n);
  if (suite == "generators") return generators(n);
  if (suite == "ideals") return ideals(n);
  if (suite == "maximal") return maximal(n);
  if (suite == "automorphisms") return automorphisms(n);
  if (suite == "embedding") return embedding(n);
  if (suite == "representation") return representation(n);
  if (suite == "iop") return iop(n, seed);
  if (suite == "cs-maximal") return cs_maximal(n);
  return std::nullopt;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "counts",     "green",         "generators",     "ideals",
      "maximal",    "automorphisms", "embedding",      "representation",
      "iop",        "cs-maximal"};
  return names;
}

}  // namespace dualsym::verification
