#include <algorithm>
#include <set>

#include <doctest.h>

#include "hyspec/ideal.hpp"
#include "oracles.hpp"

using namespace hyspec;

namespace {
Bitset members_of(const FiniteRing& r, std::vector<int> elems) {
  Bitset b(r.size());
  for (int e : elems) b.set(e);
  return b;
}
}  // namespace

TEST_CASE("Z12 ideal lattice matches the known list") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(r);
  REQUIRE(lat.ideals.size() == 6);
  CHECK(lat.ideals[0].members() == members_of(r, {0}));
  CHECK(lat.find(members_of(r, {0, 6})) >= 0);
  CHECK(lat.find(members_of(r, {0, 4, 8})) >= 0);
  CHECK(lat.find(members_of(r, {0, 3, 6, 9})) >= 0);
  CHECK(lat.find(members_of(r, {0, 2, 4, 6, 8, 10})) >= 0);
  CHECK(lat.whole().members() == Bitset::full(12));
  CHECK(lat.find(members_of(r, {0, 2})) == -1);
}

TEST_CASE("lattice enumeration agrees with the subset brute force") {
  for (auto spec : {RingSpec::zn(12), RingSpec::zn(8),
                    RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)}),
                    RingSpec::quot_poly(2, {0, 0, 1})}) {
    FiniteRing r = build_ring(spec);
    IdealLattice lat = all_ideals(r);
    std::vector<Bitset> expect = oracles::brute_force_ideals(r);
    REQUIRE(lat.ideals.size() == expect.size());
    std::set<Bitset> got;
    for (const Ideal& I : lat.ideals) got.insert(I.members());
    for (const Bitset& b : expect) CHECK(got.count(b) == 1);
  }
}

TEST_CASE("sum, product, intersect, colon, radical in Z12") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  Ideal i4 = ideal_generate(r, {4});
  Ideal i6 = ideal_generate(r, {6});
  CHECK(sum(i4, i6).members() == members_of(r, {0, 2, 4, 6, 8, 10}));
  CHECK(intersect(i4, i6).members() == members_of(r, {0}));
  CHECK(product(i4, i6).members() == members_of(r, {0}));
  CHECK(colon(zero_ideal(r), 2).members() == members_of(r, {0, 6}));
  CHECK(annihilator(r, 4).members() == members_of(r, {0, 3, 6, 9}));
  CHECK(radical(zero_ideal(r)).members() == members_of(r, {0, 6}));
  CHECK(radical(i4).members() == members_of(r, {0, 2, 4, 6, 8, 10}));
  CHECK(colon_ideal(i6, i4).members() == members_of(r, {0, 3, 6, 9}));
}

TEST_CASE("semiprimality, both routes") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(r);
  auto primes = std::vector<Ideal>{};
  for (const Ideal& I : lat.ideals)
    if (I.members() == members_of(r, {0, 3, 6, 9}) ||
        I.members() == members_of(r, {0, 2, 4, 6, 8, 10}))
      primes.push_back(I);
  Ideal i6 = ideal_generate(r, {6});
  Ideal i4 = ideal_generate(r, {4});
  CHECK(is_semiprime(i6));
  CHECK(is_semiprime(i6, primes));
  CHECK_FALSE(is_semiprime(i4));
  CHECK_FALSE(is_semiprime(i4, primes));
}

TEST_CASE("inclusion extremes") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(r);
  std::vector<Ideal> proper;
  for (const Ideal& I : lat.ideals)
    if (I.is_proper() && !I.is_zero()) proper.push_back(I);
  auto maxl = inclusion_maximal(proper);
  auto minl = inclusion_minimal(proper);
  REQUIRE(maxl.size() == 2);  // the two primes
  REQUIRE(minl.size() == 2);  // (6) and (4) are incomparable
  std::set<Bitset> minset;
  for (const Ideal& I : minl) minset.insert(I.members());
  CHECK(minset.count(members_of(r, {0, 6})) == 1);
  CHECK(minset.count(members_of(r, {0, 4, 8})) == 1);
}
