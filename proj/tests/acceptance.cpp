// Acceptance run: the full battery of exact structural claims, one line per
// criterion, each with a wall-clock budget.  Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "dualsym/verification.hpp"

using namespace dualsym;
namespace vf = dualsym::verification;

namespace {

struct Criterion {
  std::string title;
  double budget_seconds;
  std::function<vf::Checks()> body;
};

int run_all(const std::vector<Criterion>& criteria) {
  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    vf::Checks checks;
    bool threw = false;
    std::string what;
    try {
      checks = criterion.body();
    } catch (const std::exception& e) {
      threw = true;
      what = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool pass = !threw && !checks.empty();
    for (const auto& c : checks) pass = pass && c.pass;
    bool in_budget = elapsed <= criterion.budget_seconds;
    pass = pass && in_budget;
    std::printf("[%2d/14] %s  %s  (%.3fs of %gs budget)\n", index,
                pass ? "PASS" : "FAIL", criterion.title.c_str(), elapsed,
                criterion.budget_seconds);
    if (threw) std::printf("        threw: %s\n", what.c_str());
    if (!in_budget) std::printf("        over budget\n");
    for (const auto& c : checks)
      if (!c.pass) std::printf("        failed: %s\n", c.label.c_str());
    failures += !pass;
  }
  std::printf("%d/14 criteria passed\n",
              static_cast<int>(criteria.size()) - failures);
  return failures;
}

vf::Checks worked_products_timed() {
  // fixtures parsed outside the timing-sensitive part; the products and
  // canonical serializations are what the budget covers
  auto left1 = Partition::parse("{1,2,1'|3,4|5,2'|3',4',5'|6,7,6',7',8'|8}");
  auto right1 = Partition::parse("{1,1'|2,3,4|2',3'|5,5'|6,4'|7|6',7'|8,8'}");
  auto shown1 =
      Partition::parse("{1,2,1'|3,4|2',3'|5,5'|6,7,4',8'|6',7'|8}").to_string();
  auto left2 = Partition::parse("{1,2'|2,3,1',4'|4,3'|5,6,5',6',7'|7,8,8'}");
  auto right2 = Partition::parse("{1,2'|2,1',3'|3,4,4'|5,6',8'|6,5'|7,8,7'}");
  std::string shown2 = "{1,1',3'|2,3,4,2',4'|5,6,7,8,5',6',7',8'}";

  auto start = std::chrono::steady_clock::now();
  bool ok1 = (left1 * right1).to_string() == shown1;
  bool ok2 = (left2 * right2).to_string() == shown2;
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  vf::Checks out;
  out.push_back({"first displayed product, canonical and bit-exact", ok1});
  out.push_back({"second displayed product, canonical and bit-exact", ok2});
  out.push_back({"both products computed within 1 ms", elapsed < 0.001});
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back(
      {"cardinality: |IP_n| = sum_k S(n,k)^2 k! = 1,3,25,339,6721 for n=1..5",
       10.0, [] {
         vf::Checks all;
         for (int n = 1; n <= 5; ++n) {
           auto c = vf::counts(n);
           all.push_back(c.at(0));
         }
         return all;
       }});

  criteria.push_back(
      {"idempotent count: |E(IP_n)| = Bell(n) = 1,2,5,15,52 for n=1..5", 10.0,
       [] {
         vf::Checks all;
         for (int n = 1; n <= 5; ++n) {
           auto c = vf::counts(n);
           all.push_back(c.at(1));
         }
         return all;
       }});

  criteria.push_back({"worked products: both displayed degree-8 products "
                      "reproduce bit-exactly in canonical form",
                      1.0, worked_products_timed});

  criteria.push_back(
      {"isomorphism: the biequivalence model multiplies identically on all "
       "25^2 pairs at degree 3",
       1.0, [] { return vf::isomorphism(3); }});

  criteria.push_back(
      {"Green relations: rho/lambda/rank characterisations match the "
       "principal-ideal definitions on IP_3",
       5.0, [] { return vf::green(3); }});

  criteria.push_back({"generation: S_n with one extra element generates IP_n "
                      "exactly on the double orbit of xi (n=3,4)",
                      30.0, [] {
                        auto checks = vf::generators(3);
                        auto c4 = vf::generators(4);
                        checks.insert(checks.end(), c4.begin(), c4.end());
                        return checks;
                      }});

  criteria.push_back(
      {"ideals: the two-sided ideals of IP_3 are exactly I_1, I_2, I_3", 10.0,
       [] { return vf::ideals(3); }});

  criteria.push_back(
      {"maximal subsemigroups: exactly 5 at degree 3, each maximal and "
       "inverse-closed",
       60.0, [] { return vf::maximal(3); }});

  criteria.push_back(
      {"automorphisms: |Aut(IP_2)| = 1 and |Aut(IP_3)| = 6, all inner", 60.0,
       [] {
         auto checks = vf::automorphisms(2);
         auto c3 = vf::automorphisms(3);
         checks.insert(checks.end(), c3.begin(), c3.end());
         return checks;
       }});

  criteria.push_back(
      {"embeddings: kappa injective homomorphism IS_2 -> IP_3; D-class "
       "obstruction (n vs n+1) at n=2,3",
       5.0, [] {
         auto checks = vf::embedding(2);
         auto c3 = vf::embedding(3);
         checks.insert(checks.end(), c3.begin(), c3.end());
         return checks;
       }});

  criteria.push_back(
      {"representation: faithful exactly for rank-2 idempotent closures, "
       "degree 2^3-2 = 6, all equivalent",
       120.0, [] { return vf::representation(3); }});

  criteria.push_back(
      {"ordered elements: IOP_3 and IOP_4 closed H-cross-sections of sizes "
       "sum_k S(n,k)^2 = 11 and 87, sharing all idempotents",
       30.0, [] {
         auto checks = vf::iop(3);
         auto c4 = vf::iop(4);
         checks.insert(checks.end(), c4.begin(), c4.end());
         return checks;
       }});

  criteria.push_back(
      {"CS maximality: IP_2 with upsilon is maximal inverse in CS_2, one "
       "witness per outside element",
       10.0, [] { return vf::cs_maximal(2); }});

  criteria.push_back(
      {"property suite: associativity, unique inverses, commuting "
       "idempotents, rank bounds, order compatibility; exhaustive small, "
       ">= 100000 seeded random cases at degree 8",
       60.0, [] { return vf::properties(); }});

  return run_all(criteria);
}
