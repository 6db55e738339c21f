#include "doctest.h"

#include "contalg/ideal.hpp"

using namespace contalg;

namespace {
Ideal gen(const FiniteRing& r, std::vector<std::uint32_t> g) {
  return ideal_generated(r, g);
}
}  // namespace

TEST_CASE("principal ideals of Z6") {
  RingPtr r = make_zn(6);
  Ideal two = gen(*r, {2});
  CHECK(two.size() == 3);  // 0, 2, 4
  CHECK(two.contains(4));
  Ideal three = gen(*r, {3});
  CHECK(three.size() == 2);
  CHECK(ideal_sum(two, three).is_whole());
  CHECK(ideal_product(two, three).is_zero());
  CHECK(ideal_intersection(two, three).is_zero());

  auto all = enumerate_ideals(*r);
  CHECK(all.size() == 4);  // (0), (3), (2), R
  CHECK(all.front().is_zero());
  CHECK(all.back().is_whole());

  CHECK(is_prime(two));
  CHECK(is_prime(three));
  CHECK(is_maximal(two));
  CHECK(!is_prime(zero_ideal(*r)));

  auto mins = minimal_primes(*r);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0].describe() == "(3)");
  CHECK(mins[1].describe() == "(2)");
}

TEST_CASE("radical, annihilator and colon in Z4 and Z8") {
  RingPtr r4 = make_zn(4);
  Ideal z = zero_ideal(*r4);
  CHECK(radical(z) == gen(*r4, {2}));
  CHECK(nilradical(*r4) == gen(*r4, {2}));
  CHECK(annihilator(gen(*r4, {2})) == gen(*r4, {2}));

  RingPtr r8 = make_zn(8);
  Ideal two = gen(*r8, {2}), four = gen(*r8, {4});
  CHECK(ideal_power(two, 3).is_zero());
  CHECK(!ideal_power(two, 2).is_zero());
  CHECK(ideal_colon(four, two) == two);
  CHECK(ideal_colon_elem(zero_ideal(*r8), 4) == two);
  CHECK(ideal_power(two, 0).is_whole());
}

TEST_CASE("associated primes") {
  RingPtr r = make_zn(12);
  auto ass = associated_primes(*r);
  // Ann(6) = (2), Ann(4) = (3)
  REQUIRE(ass.size() == 2);
  CHECK(((ass[0].describe() == "(3)" && ass[1].describe() == "(2)") ||
         (ass[0].describe() == "(2)" && ass[1].describe() == "(3)")));
  for (const auto& p : ass) CHECK(is_prime(p));
}

TEST_CASE("zd degree values") {
  auto deg = [](const RingPtr& r) { return zd_degree(*r)->degree; };
  CHECK(deg(make_zn(4)) == 1);
  CHECK(deg(make_zn(8)) == 1);
  CHECK(deg(make_zn(6)) == 2);
  CHECK(deg(make_zn(12)) == 2);
  CHECK(deg(make_product(make_zn(2), make_zn(2))) == 2);
  CHECK(deg(make_zn(5)) == 1);  // field: Z(R)* empty, (0) is the single prime
}

TEST_CASE("property (A) and very few zero-divisors") {
  for (auto n : {4u, 6u, 8u, 9u, 12u, 30u}) {
    RingPtr r = make_zn(n);
    CHECK(has_property_A(*r));
    CHECK(very_few_zd(*r));
  }
}

TEST_CASE("primality") {
  CHECK(is_primal(*make_zn(4)));
  CHECK(is_primal(*make_zn(9)));
  CHECK(is_primal(*make_univariate_quotient(2, "y", {0, 0, 1})));

  PrimalityResult pr = primality(*make_zn(6));
  CHECK(!pr.primal);
  REQUIRE(pr.closure_witness.has_value());
  auto [a, b] = *pr.closure_witness;
  RingPtr r = make_zn(6);
  ElemSet z = zero_divisors(*r);
  CHECK(z.test(a));
  CHECK(z.test(b));
  CHECK(!z.test(r->add(a, b)));

  CHECK(!is_primal(*make_product(make_zn(2), make_zn(2))));
}

TEST_CASE("S(I) of (4) in Z8") {
  RingPtr r = make_zn(8);
  Ideal four = gen(*r, {4});
  ElemSet s = s_of_ideal(four);
  CHECK(s.count() == 4);  // 0, 2, 4, 6
  CHECK(s.test(2));
  CHECK(s.test(6));
  CHECK(!s.test(1));
  CHECK(is_primal_ideal(four));
}

TEST_CASE("prime_cover_locate") {
  RingPtr r = make_zn(6);
  auto mins = minimal_primes(*r);
  Ideal three = gen(*r, {3});
  auto at = prime_cover_locate(three, mins);
  REQUIRE(at.has_value());
  CHECK(mins[*at].describe() == "(3)");
  CHECK(!prime_cover_locate(whole_ring(*r), mins));
}

TEST_CASE("ideal lattice laws hold on small rings") {
  for (auto r : {make_zn(4), make_zn(6), make_zn(8), make_zn(9), make_zn(12)}) {
    auto all = enumerate_ideals(*r);
    for (const auto& i : all) {
      CHECK(i.subset_of(radical(i)));
      CHECK(radical(radical(i)) == radical(i));
      if (is_prime(i)) CHECK(radical(i) == i);
      for (const auto& j : all) {
        Ideal prod = ideal_product(i, j);
        Ideal meet = ideal_intersection(i, j);
        CHECK(prod.subset_of(meet));
        CHECK(meet.subset_of(i));
        CHECK(i.subset_of(ideal_sum(i, j)));
        CHECK(i.subset_of(ideal_colon(i, j)));
      }
    }
  }
}

TEST_CASE("ideal enumeration respects its cap") {
  Limits lim;
  lim.ideal_enum_cap = 4;
  CHECK_THROWS_AS(enumerate_ideals(*make_zn(12), lim), ResourceLimit);
}
