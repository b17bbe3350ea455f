#include <catch_amalgamated.hpp>

#include "dualsym/enumeration.hpp"
#include "dualsym/generators.hpp"
#include "dualsym/oracles.hpp"
#include "dualsym/partition.hpp"
#include "dualsym/random.hpp"

using namespace dualsym;

TEST_CASE("parse recognises the basic literals") {
  CHECK(Partition::parse("{1,1'|2,2'}") == Partition::identity(2));
  CHECK(Partition::parse("{1,2,1',2'}") == Partition::zero(2));
  // block order and point order in the input are free; canonical form is not
  CHECK(Partition::parse("{2',2|1',1}") == Partition::identity(2));
  auto left = Partition::parse("{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}");
  CHECK(left.degree() == 8);
  CHECK(left.block_count() == 6);
  CHECK_FALSE(left.is_ip());
}

TEST_CASE("parse accepts an explicit degree prefix") {
  auto a = Partition::parse("8:{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}");
  CHECK(a == Partition::parse("{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}"));
  CHECK_THROWS_AS(Partition::parse("3:{1,1'|2,2'}"), ParseError);  // not a cover
  CHECK_THROWS_AS(Partition::parse("1:{1,2,1',2'}"), ParseError);  // 2 > declared
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Partition::parse(""), ParseError);
  CHECK_THROWS_AS(Partition::parse("{}"), ParseError);
  CHECK_THROWS_AS(Partition::parse("{1,1'|2}"), ParseError);      // missing 2'
  CHECK_THROWS_AS(Partition::parse("{1,1,1'}"), ParseError);      // duplicate
  CHECK_THROWS_AS(Partition::parse("{0,1,0',1'}"), ParseError);   // index 0
  CHECK_THROWS_AS(Partition::parse("{1,1'"), ParseError);         // unterminated
  CHECK_THROWS_AS(Partition::parse("{1,1'}x"), ParseError);       // trailing
  CHECK_THROWS_AS(Partition::parse("{1,,1'}"), ParseError);
  CHECK_THROWS_AS(Partition::parse("{1 ,1'}"), ParseError);       // no whitespace
}

TEST_CASE("serialization is canonical and a fixed point of parse") {
  CHECK(Partition::identity(1).to_string() == "{1,1'}");
  CHECK(Partition::zero(2).to_string() == "{1,2,1',2'}");
  // unprimed blocks come first, ordered by least point; primed-only blocks last
  auto a = Partition::parse("{3',4',5'|8|1,2,1'|6,7,6',7',8'|5,2'|3,4}");
  CHECK(a.to_string() == "{1,2,1'|3,4|5,2'|6,7,6',7',8'|8|3',4',5'}");
  auto rng = make_rng(7);
  for (int t = 0; t < 200; ++t) {
    Partition p = random_cs(6, rng);
    CHECK(Partition::parse(p.to_string()).to_string() == p.to_string());
  }
}

TEST_CASE("displayed degree-8 products reproduce") {
  auto a = Partition::parse("{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}");
  auto b = Partition::parse("{1,1'|2,3,4|2',3'|5,5'|6,4'|7|6',7'|8,8'}");
  auto shown = Partition::parse("{1,2,1'|3,4|2',3'|5,5'|6,7,4',8'|6',7'|8}");
  CHECK((a * b).to_string() == shown.to_string());

  auto c = Partition::parse("{1,2'|2,3,1',4'|4,3'|5,6,5',6',7'|7,8,8'}");
  auto d = Partition::parse("{1,2'|2,1',3'|3,4,4'|5,6',8'|6,5'|7,8,7'}");
  CHECK((c * d).to_string() == "{1,1',3'|2,3,4,2',4'|5,6,7,8,5',6',7',8'}");
  CHECK(c.is_ip());
  CHECK(d.is_ip());
}

TEST_CASE("identity and zero laws") {
  for (const Partition& a : enumerate_ip(3)) {
    CHECK(a * Partition::identity(3) == a);
    CHECK(Partition::identity(3) * a == a);
    CHECK(a * Partition::zero(3) == Partition::zero(3));
    CHECK(Partition::zero(3) * a == Partition::zero(3));
  }
}

TEST_CASE("product degree mismatch is rejected") {
  CHECK_THROWS_AS(Partition::identity(2) * Partition::identity(3),
                  DegreeMismatch);
}

TEST_CASE("union-find product agrees with the chain-closure definition") {
  auto cs2 = enumerate_cs(2);
  for (const Partition& a : cs2)
    for (const Partition& b : cs2)
      CHECK(a * b == oracle::chain_multiply(a, b));
  auto rng = make_rng(11);
  for (int n = 4; n <= 8; n += 2)
    for (int t = 0; t < 300; ++t) {
      Partition a = random_cs(n, rng), b = random_cs(n, rng);
      CHECK(a * b == oracle::chain_multiply(a, b));
    }
}

TEST_CASE("star is the prime swap and the inverse inside IP") {
  CHECK(Partition::identity(3).star() == Partition::identity(3));
  CHECK(Partition::parse("{1,2,1'|3,2',3'}").star() ==
        Partition::parse("{1,1',2'|2,3,3'}"));
  for (const Partition& a : enumerate_ip(3)) {
    CHECK(a.star().star() == a);
    CHECK(a * a.star() * a == a);
    CHECK(a.star() * a * a.star() == a.star());
  }
  // outside IP it is only an involution
  Partition u = upsilon(3);
  CHECK(u.star() == u);
  CHECK(Partition::parse("{1|2,3,1',2',3'}").star() ==
        Partition::parse("{1,2,3,2',3'|1'}"));
}

TEST_CASE("rank and the projection class counts") {
  CHECK(rank(Partition::identity(5)) == 5);
  CHECK(rank(Partition::zero(4)) == 1);
  auto fig2 = Partition::parse("{1,1',3'|2,3,4,2',4'|5,6,7,8,5',6',7',8'}");
  CHECK(rank(fig2) == 3);
  for (const Partition& a : enumerate_ip(3)) {
    RankCounts rc = rank_counts(a);
    CHECK(rc.coincide);
    CHECK(rc.blocks == rc.rho_classes);
    CHECK(rc.blocks == rc.lambda_classes);
  }
  RankCounts rc = rank_counts(upsilon(2));
  CHECK(rc.blocks == 2);
  CHECK(rc.rho_classes == 1);
  CHECK(rc.lambda_classes == 1);
  CHECK_FALSE(rc.coincide);
}

TEST_CASE("rho and lambda projections") {
  CHECK(Partition::identity(3).rho() == Equivalence::trivial(3));
  CHECK(Partition::zero(3).rho() == Equivalence::full(3));
  auto fig2 = Partition::parse("{1,1',3'|2,3,4,2',4'|5,6,7,8,5',6',7',8'}");
  CHECK(fig2.rho() == Equivalence::from_classes(8, {{1}, {2, 3, 4}, {5, 6, 7, 8}}));
  CHECK(fig2.lambda() ==
        Equivalence::from_classes(8, {{1, 3}, {2, 4}, {5, 6, 7, 8}}));
}

TEST_CASE("is_ip examples") {
  CHECK(Partition::identity(4).is_ip());
  CHECK_FALSE(upsilon(2).is_ip());
  CHECK(Partition::parse("{1,2'|2,3,1',4'|4,3'|5,6,5',6',7'|7,8,8'}").is_ip());
}

TEST_CASE("equivalence helpers") {
  auto e = Equivalence::from_classes(4, {{1, 2}, {3}, {4}});
  auto f = Equivalence::from_classes(4, {{1, 2, 3}, {4}});
  CHECK(e.refines(f));
  CHECK_FALSE(f.refines(e));
  CHECK(Equivalence::join(e, Equivalence::from_classes(4, {{2, 3}, {1}, {4}})) ==
        f);
  CHECK(e.type() == std::vector<int>{2, 1, 0, 0});
  CHECK(e.to_string() == "{1,2|3|4}");
}

TEST_CASE("associativity, exhaustively at tiny degree") {
  auto cs2 = enumerate_cs(2);
  for (const Partition& a : cs2)
    for (const Partition& b : cs2)
      for (const Partition& c : cs2) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("IP is closed under the product") {
  for (int n = 1; n <= 3; ++n) {
    auto members = enumerate_ip(n);
    for (const Partition& a : members)
      for (const Partition& b : members) CHECK((a * b).is_ip());
  }
  auto rng = make_rng(23);
  for (int t = 0; t < 500; ++t)
    CHECK((random_ip(8, rng) * random_ip(8, rng)).is_ip());
}

TEST_CASE("element equality is canonical-serialization equality") {
  auto cs3 = enumerate_cs(3);
  for (const Partition& a : cs3)
    for (const Partition& b : cs3)
      CHECK((a == b) == (a.to_string() == b.to_string()));
}

TEST_CASE("rank subadditivity and projection coarsening") {
  auto ip3 = enumerate_ip(3);
  for (const Partition& a : ip3)
    for (const Partition& b : ip3) {
      Partition ab = a * b;
      CHECK(rank(ab) <= std::min(rank(a), rank(b)));
      CHECK(a.rho().refines(ab.rho()));
      CHECK(b.lambda().refines(ab.lambda()));
    }
}
