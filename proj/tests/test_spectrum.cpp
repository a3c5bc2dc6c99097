#include <doctest.h>

#include "hyspec/spectrum.hpp"

using namespace hyspec;

namespace {
Bitset members_of(const FiniteRing& r, std::vector<int> elems) {
  Bitset b(r.size());
  for (int e : elems) b.set(e);
  return b;
}
}  // namespace

TEST_CASE("primes of Z12") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(r);
  auto primes = spec_primes(lat);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0].members() == members_of(r, {0, 3, 6, 9}));
  CHECK(primes[1].members() == members_of(r, {0, 2, 4, 6, 8, 10}));
  CHECK_FALSE(is_prime(ideal_generate(r, {6})));
  CHECK_FALSE(is_prime(unit_ideal(r)));  // proper by definition

  // finite ring: every prime is maximal, so Spec is an antichain
  CHECK(max_ideals(primes).size() == 2);
  CHECK(min_primes(primes).size() == 2);
}

TEST_CASE("min_over and bourbaki in Z12") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(r);
  auto primes = spec_primes(lat);
  CHECK(min_over(ideal_generate(r, {6}), primes).size() == 2);
  CHECK(min_over(ideal_generate(r, {4}), primes).size() == 1);

  auto b = bourbaki(zero_ideal(r));
  REQUIRE(b.size() == 2);
  CHECK(((b[0].members() == primes[0].members() && b[1].members() == primes[1].members()) ||
         (b[0].members() == primes[1].members() && b[1].members() == primes[0].members())));

  auto aff = affiliated_primes(r);
  CHECK(aff.size() == 2);
}

TEST_CASE("fields have exactly the zero prime") {
  FiniteRing r = build_ring(RingSpec::quot_poly(2, {1, 1, 1}));
  IdealLattice lat = all_ideals(r);
  auto primes = spec_primes(lat);
  REQUIRE(primes.size() == 1);
  CHECK(primes[0].is_zero());
}

TEST_CASE("fixed place") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  Ideal i6 = ideal_generate(r, {6});
  CHECK(is_fixed_place(i6));  // (6) = (2) cap (3), both bourbaki primes of (6)
  CHECK_THROWS_AS(is_fixed_place(ideal_generate(r, {4})), NotSemiprime);
}
