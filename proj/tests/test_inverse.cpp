#include <catch_amalgamated.hpp>

#include "dualsym/enumeration.hpp"
#include "dualsym/generators.hpp"
#include "dualsym/inverse.hpp"
#include "dualsym/oracles.hpp"
#include "dualsym/random.hpp"

using namespace dualsym;

TEST_CASE("idempotents have matched halves") {
  CHECK(is_idempotent(Partition::identity(4)));
  CHECK(is_idempotent(tau({1, 2}, 3)));
  CHECK_FALSE(is_idempotent(xi(1, 2, 3, 3)));
  // the structural form agrees with a*a == a across IP_3
  for (const Partition& a : enumerate_ip(3))
    CHECK(is_idempotent(a) == (a * a == a));
}

TEST_CASE("idempotent counts follow the Bell numbers") {
  const std::size_t expected[] = {0, 1, 2, 5, 15, 52};
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_idempotents(n).size() == expected[n]);
    CHECK(bell(n) == expected[n]);
  }
}

TEST_CASE("idempotent meet is the commutative product and the partition join") {
  auto idems = enumerate_idempotents(3);
  for (const Partition& e : idems) CHECK(idempotent_meet(e, e) == e);
  CHECK(idempotent_meet(tau({1, 2}, 3), tau({2, 3}, 3)) == tau({1, 2, 3}, 3));
  for (const Partition& e : idems)
    for (const Partition& f : idems) {
      Partition m = idempotent_meet(e, f);
      CHECK(m == f * e);
      // the meet's relation is the join of the two block relations
      auto lift = [](const Partition& p) {
        return Equivalence::from_labels(2 * p.degree(), p.labels());
      };
      CHECK(lift(m) == Equivalence::join(lift(e), lift(f)));
    }
  CHECK_THROWS_AS(idempotent_meet(xi(1, 2, 3, 3), tau({1, 2}, 3)),
                  std::invalid_argument);
}

TEST_CASE("idempotents commute at degree 8 too") {
  auto rng = make_rng(31);
  for (int t = 0; t < 1000; ++t) {
    Partition e = random_idempotent(8, rng), f = random_idempotent(8, rng);
    CHECK(e * f == f * e);
  }
}

TEST_CASE("natural order basics") {
  auto ip3 = enumerate_ip(3);
  for (const Partition& a : ip3) {
    CHECK(natural_leq(Partition::zero(3), a));
    CHECK(natural_leq(a, a));
  }
  CHECK(natural_leq(tau({1, 2}, 3), Partition::identity(3)));
  CHECK_FALSE(natural_leq(Partition::identity(3), tau({1, 2}, 3)));
}

TEST_CASE("the natural order is a partial order") {
  auto ip3 = enumerate_ip(3);
  for (const Partition& a : ip3)
    for (const Partition& b : ip3) {
      if (natural_leq(a, b) && natural_leq(b, a)) CHECK(a == b);
      for (const Partition& c : ip3)
        if (natural_leq(a, b) && natural_leq(b, c)) CHECK(natural_leq(a, c));
    }
}

TEST_CASE("natural order matches the idempotent-factor definition") {
  auto ip3 = enumerate_ip(3);
  auto idems = enumerate_idempotents(3);
  for (const Partition& a : ip3)
    for (const Partition& b : ip3)
      CHECK(natural_leq(a, b) == oracle::natural_leq_by_scan(a, b, idems));
}

TEST_CASE("natural order is compatible with multiplication") {
  auto ip3 = enumerate_ip(3);
  for (const Partition& a : ip3)
    for (const Partition& b : ip3) {
      if (!natural_leq(a, b)) continue;
      for (const Partition& c : ip3) {
        CHECK(natural_leq(c * a, c * b));
        CHECK(natural_leq(a * c, b * c));
      }
    }
}

TEST_CASE("Green relation examples") {
  auto x = xi(1, 2, 3, 3);
  CHECK(green_H(x, x));
  CHECK(green_D(x, tau({1, 2}, 3)));  // both rank 2
  CHECK(green_R(x, tau({1, 2}, 3)));  // shared domain classes {1,2},{3}
  CHECK_FALSE(green_L(x, tau({1, 2}, 3)));
  CHECK_FALSE(green_H(x, tau({1, 2}, 3)));
  CHECK(green_J(x, tau({1, 3}, 3)));
}

TEST_CASE("Green relations agree with the principal ideal definitions") {
  auto u = enumerate_ip(2);
  for (const Partition& a : u)
    for (const Partition& b : u) {
      CHECK(green_R(a, b) == oracle::green_R_by_ideals(a, b, u));
      CHECK(green_L(a, b) == oracle::green_L_by_ideals(a, b, u));
      CHECK(green_D(a, b) == oracle::green_D_by_ideals(a, b, u));
      CHECK(green_J(a, b) == oracle::green_J_by_ideals(a, b, u));
    }
}

TEST_CASE("each H-class holds at most one idempotent") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& cls : h_classes(enumerate_ip(n))) {
      int idems = 0;
      for (const Partition& a : cls) idems += is_idempotent(a);
      CHECK(idems <= 1);
    }
  }
}

TEST_CASE("the inverse is unique") {
  auto ip3 = enumerate_ip(3);
  for (const Partition& a : ip3) {
    const Partition inv = a.star();
    for (const Partition& x : ip3)
      CHECK((a * x * a == a && x * a * x == x) == (x == inv));
  }
}

TEST_CASE("trace product definedness") {
  auto idems = enumerate_idempotents(3);
  for (const Partition& e : idems) {
    auto p = trace_product(e, e);
    REQUIRE(p.has_value());
    CHECK(*p == e);
  }
  auto x = xi(1, 2, 3, 3);
  CHECK(trace_product(x, x.star()).has_value());

  auto ip3 = enumerate_ip(3);
  for (const Partition& a : ip3)
    for (const Partition& b : ip3) {
      auto p = trace_product(a, b);
      CHECK(p.has_value() == oracle::trace_defined_by_membership(a, b));
      if (p) {
        CHECK(*p == a * b);
        CHECK(green_R(*p, a));
        CHECK(green_L(*p, b));
      }
    }
}

TEST_CASE("imprint product definedness") {
  auto ip3 = enumerate_ip(3);
  auto idems = enumerate_idempotents(3);
  const Partition one = Partition::identity(3);
  for (const Partition& g : ip3) {
    bool unit_like = g.rho() == Equivalence::trivial(3);
    CHECK(imprint_product(one, g).has_value() == unit_like);
  }
  for (const Partition& e : idems) {
    auto p = imprint_product(e, e);
    REQUIRE(p.has_value());
    CHECK(*p == e);
    for (const Partition& a : ip3) {
      auto q = imprint_product(e, a);
      CHECK(q.has_value() == oracle::imprint_defined_by_order(e, a));
      if (q) CHECK(*q == e * a);
    }
  }
  CHECK_THROWS_AS(imprint_product(xi(1, 2, 3, 3), one), std::invalid_argument);
}
