#include <catch_amalgamated.hpp>

#include "dualsym/json_io.hpp"
#include "dualsym/representation.hpp"

using namespace dualsym;

namespace {

Partition separator(int n) {  // the rank-2 idempotent isolating the point 1
  std::vector<int> rest;
  for (int t = 2; t <= n; ++t) rest.push_back(t);
  return idempotent_meet(tau({1}, n), tau(rest, n));
}

}  // namespace

TEST_CASE("up closures in the natural order") {
  CHECK(up_closure({Partition::identity(3)}, 3) ==
        std::vector<Partition>{Partition::identity(3)});
  CHECK(up_closure({Partition::zero(3)}, 3) == enumerate_ip(3));
  Partition f = separator(3);
  auto above = up_closure({f}, 3);
  REQUIRE(above.size() == 3);
  // the idempotent itself, the identity, and the block swap above it
  CHECK(std::find(above.begin(), above.end(), f) != above.end());
  CHECK(std::find(above.begin(), above.end(), Partition::identity(3)) !=
        above.end());
  CHECK(std::find(above.begin(), above.end(),
                  eta(Permutation::transposition(2, 3, 3))) != above.end());
  // against a full order scan
  for (const Partition& a : enumerate_ip(3)) {
    auto scan = up_closure({a}, 3);
    for (const Partition& b : enumerate_ip(3)) {
      bool in = std::find(scan.begin(), scan.end(), b) != scan.end();
      CHECK(in == natural_leq(a, b));
    }
  }
}

TEST_CASE("subgroup closures are closed inverse subsemigroups") {
  for (const Partition& e : enumerate_idempotents(3)) {
    std::vector<Partition> h_class;
    for (const Partition& a : enumerate_ip(3))
      if (green_H(a, e)) h_class.push_back(a);
    for (const auto& g : detail::all_subgroups(
             h_class, e,
             [](const Partition& a, const Partition& b) { return a * b; })) {
      auto h = closed_from_subgroup(g, 3);
      detail::PartitionSet set = detail::to_set(h.elements);
      for (const Partition& a : h.elements) {
        CHECK(set.count(a.star()) == 1);
        for (const Partition& b : h.elements) CHECK(set.count(a * b) == 1);
      }
      CHECK(up_closure(h.elements, 3).size() == h.elements.size());
    }
  }
}

TEST_CASE("coset equality criterion") {
  Partition f = separator(3);
  auto h = closed_from_subgroup({f}, 3);
  auto universe = enumerate_ip(3);
  for (const Partition& x : universe) {
    if (!h.contains(x * x.star())) continue;
    CHECK(coset_eq(h, x, x));
    for (const Partition& member : h.elements) {
      Partition hx = member * x;
      if (h.contains(hx * hx.star())) CHECK(coset_eq(h, hx, x));
    }
    for (const Partition& y : universe) {
      if (!h.contains(y * y.star())) continue;
      CHECK(coset_eq(h, x, y) == (f * x == f * y));
    }
  }
  CHECK_THROWS_AS(coset_eq(h, xi(1, 2, 3, 3), f), std::invalid_argument);
}

TEST_CASE("coset space sizes") {
  CHECK(coset_space(closed_from_subgroup({separator(3)}, 3)).size() == 6);
  CHECK(coset_space(closed_from_subgroup({Partition::zero(3)}, 3)).size() == 1);
  CHECK(coset_space(closed_from_subgroup({Partition::identity(3)}, 3)).size() ==
        6);  // one point per unit
  for (int n = 2; n <= 4; ++n)
    CHECK(coset_space(closed_from_subgroup({separator(n)}, n)).size() ==
          (1u << n) - 2);
}

TEST_CASE("coset labels are distinct and sorted") {
  auto space = coset_space(closed_from_subgroup({separator(3)}, 3));
  CHECK(std::is_sorted(space.labels.begin(), space.labels.end()));
  CHECK(std::adjacent_find(space.labels.begin(), space.labels.end()) ==
        space.labels.end());
}

TEST_CASE("phi_H is a faithful homomorphism for the separator closure") {
  auto space = coset_space(closed_from_subgroup({separator(3)}, 3));
  auto universe = enumerate_ip(3);
  CHECK(phi_H(space, Partition::identity(3)) ==
        PartialInjection::identity(static_cast<int>(space.size())));
  std::set<PartialInjection> images;
  for (const Partition& s : universe) images.insert(phi_H(space, s));
  CHECK(images.size() == universe.size());
  for (const Partition& s : universe)
    for (const Partition& t : universe)
      CHECK(phi_H(space, s * t) == phi_H(space, s) * phi_H(space, t));
}

TEST_CASE("phi_H is a homomorphism for every subgroup closure at degree 3") {
  auto universe = enumerate_ip(3);
  for (const Partition& e : enumerate_idempotents(3)) {
    std::vector<Partition> h_class;
    for (const Partition& a : universe)
      if (green_H(a, e)) h_class.push_back(a);
    for (const auto& g : detail::all_subgroups(
             h_class, e,
             [](const Partition& a, const Partition& b) { return a * b; })) {
      auto space = coset_space(closed_from_subgroup(g, 3));
      std::vector<PartialInjection> image;
      image.reserve(universe.size());
      for (const Partition& s : universe) image.push_back(phi_H(space, s));
      for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = 0; j < universe.size(); ++j)
          CHECK(phi_H(space, universe[i] * universe[j]) ==
                image[i] * image[j]);
    }
  }
}

TEST_CASE("theta sets") {
  for (int n = 3; n <= 4; ++n) {
    auto pr = theta_pr(n);
    CHECK(pr.size() == stirling2(n, 2));
    for (const Partition& e : enumerate_ip(n)) {
      bool member = std::find(pr.begin(), pr.end(), e) != pr.end();
      CHECK(member == (is_idempotent(e) && rank(e) == 2));
    }
    CHECK(theta_max(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (const Partition& t : theta_max(n)) {
      CHECK(is_idempotent(t));
      CHECK(rank(t) == n - 1);
    }
  }
}

TEST_CASE("explicit conjugators pair up the faithful representations") {
  for (int n = 3; n <= 4; ++n) {
    auto pr = theta_pr(n);
    for (const Partition& f1 : pr)
      for (const Partition& f2 : pr) {
        auto h1 = closed_from_subgroup({f1}, n);
        auto h2 = closed_from_subgroup({f2}, n);
        Partition a = conjugator(f1, f2);
        CHECK(conjugates_into(a, h1, h2));
        CHECK(conjugates_into(a.star(), h2, h1));
      }
  }
  CHECK_THROWS_AS(conjugator(Partition::zero(3), separator(3)),
                  std::invalid_argument);
}

TEST_CASE("faithfulness classification at degrees 2 and 3") {
  auto r2 = faithfulness_report(2);
  CHECK(r2.degree == 2);
  CHECK(r2.canonical_points == 2);
  CHECK(r2.cases.size() == 3);  // {1}, S_2, {0}
  CHECK(r2.faithful_count() == 1);
  CHECK(r2.faithful_exactly_rank2_trivial());
  CHECK(r2.all_faithful_equivalent());

  auto r3 = faithfulness_report(3);
  CHECK(r3.canonical_points == 6);
  CHECK(r3.cases.size() == 13);
  CHECK(r3.faithful_count() == 3);
  CHECK(r3.faithful_exactly_rank2_trivial());
  CHECK(r3.all_faithful_equivalent());
  bool zero_case = false, z2_case = false;
  for (const auto& c : r3.cases) {
    if (c.idempotent_rank == 1) {
      zero_case = true;
      CHECK(c.points == 1);
      CHECK_FALSE(c.faithful);
    }
    if (c.idempotent_rank == 2 && c.subgroup.size() == 2) {
      z2_case = true;
      CHECK_FALSE(c.faithful);
    }
  }
  CHECK(zero_case);
  CHECK(z2_case);
  CHECK_THROWS_AS(faithfulness_report(5), BoundExceeded);
}

TEST_CASE("faithfulness classification at degree 4") {
  auto report = faithfulness_report(4);
  CHECK(report.cases.size() == 81);
  CHECK(report.canonical_points == 14);
  CHECK(report.faithful_count() == 7);
  CHECK(report.faithful_exactly_rank2_trivial());
  CHECK(report.all_faithful_equivalent());
}

TEST_CASE("report serialises to the documented JSON shape") {
  auto j = to_json(faithfulness_report(2));
  CHECK(j["degree"] == 2);
  REQUIRE(j["cases"].size() == 3);
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("subgroup_size"));
    CHECK(c.contains("idempotent_rank"));
    CHECK(c.contains("points"));
    CHECK(c.contains("faithful"));
    CHECK(c.contains("equivalent_to_canonical"));
  }
}
