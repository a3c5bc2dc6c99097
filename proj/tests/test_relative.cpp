#include <doctest.h>

#include "hyspec/relative.hpp"
#include "hyspec/spectrum.hpp"

using namespace hyspec;

namespace {
struct Z12 {
  FiniteRing ring = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(ring);
  std::vector<Ideal> primes = spec_primes(lat);

  Bitset members_of(std::vector<int> elems) const {
    Bitset b(ring.size());
    for (int e : elems) b.set(e);
    return b;
  }
  int idx(std::vector<int> elems) const {
    int i = lat.find(members_of(std::move(elems)));
    REQUIRE(i >= 0);
    return i;
  }
};
}  // namespace

TEST_CASE("factors of (0) in Z12 over Y = Spec") {
  Z12 z;
  SubSpace Y = make_subspace(z.ring, z.primes);
  YCache c = make_ycache(Y, z.lat);

  int i0 = z.idx({0});
  int i4 = z.idx({0, 4, 8});

  for (bool strong : {false, true}) {
    auto f = factor_indices(c, i0, strong);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == i4);

    RelativeResult rr = is_relative(c, i0, strong);
    CHECK(rr.relative);
    REQUIRE(rr.factor.has_value());
    CHECK(*rr.factor == i4);
    REQUIRE(rr.principal.has_value());
    CHECK_FALSE(z.lat.ideals[i0].members().test(*rr.principal));

    GreatestFactor g = greatest_factor(c, i0, strong);
    CHECK(g.members == z.members_of({0, 4, 8}));
    CHECK(g.is_ideal);
    CHECK(g.hyj_ok);
    CHECK(g.poset_has_max);
    CHECK(g.matches_max);
  }
}

TEST_CASE("(4) is not relative in Z12 over Y = Spec") {
  Z12 z;
  SubSpace Y = make_subspace(z.ring, z.primes);
  YCache c = make_ycache(Y, z.lat);
  int i4 = z.idx({0, 4, 8});
  for (bool strong : {false, true}) {
    CHECK(factor_indices(c, i4, strong).empty());
    RelativeResult rr = is_relative(c, i4, strong);
    CHECK_FALSE(rr.relative);
    CHECK_FALSE(rr.factor.has_value());
    CHECK_FALSE(rr.principal.has_value());
  }
}

TEST_CASE("the equivalent characterizations agree and have the right value") {
  Z12 z;
  SubSpace Y = make_subspace(z.ring, z.primes);
  YCache c = make_ycache(Y, z.lat);
  int i0 = z.idx({0});
  int i4 = z.idx({0, 4, 8});
  int i3 = z.idx({0, 3, 6, 9});

  for (bool strong : {false, true}) {
    ConditionProfile yes = hyj_equivalents(c, i0, i4, strong);
    CHECK(yes.uniform());
    CHECK(yes.all_true());

    ConditionProfile no = hyj_equivalents(c, i4, i3, strong);
    CHECK(no.uniform());
    CHECK_FALSE(no.all_true());
  }

  // every (I, J) pair: the profile is uniform and matches the direct test
  for (std::size_t i = 0; i < z.lat.ideals.size(); ++i)
    for (std::size_t j = 0; j < z.lat.ideals.size(); ++j) {
      ConditionProfile p = hyj_equivalents(c, (int)i, (int)j, false);
      CHECK(p.uniform());
      CHECK(p.all_true() == is_hyj(z.lat.ideals[i], z.lat.ideals[j], Y));
      ConditionProfile s = hyj_equivalents(c, (int)i, (int)j, true);
      CHECK(s.uniform());
      CHECK(s.all_true() == is_strong_hyj(z.lat.ideals[i], z.lat.ideals[j], Y));
    }
}

TEST_CASE("strong relative single test equals the subset oracle") {
  Z12 z;
  for (std::uint64_t m = 0; m < 4; ++m) {
    std::vector<Ideal> pts;
    for (int b = 0; b < 2; ++b)
      if ((m >> b) & 1) pts.push_back(z.primes[b]);
    SubSpace Y = make_subspace(z.ring, pts);
    for (const Ideal& I : z.lat.ideals)
      for (const Ideal& J : z.lat.ideals)
        CHECK(is_strong_hyj(I, J, Y) == is_strong_hyj_subset_oracle(I, J, Y));
  }
}

TEST_CASE("minimal-primes factor for (6) in Z12 over Y = {(2)}") {
  Z12 z;
  REQUIRE(z.primes[1].members() == z.members_of({0, 2, 4, 6, 8, 10}));
  SubSpace Y = make_subspace(z.ring, {z.primes[1]});
  YCache c = make_ycache(Y, z.lat);
  int i6 = z.idx({0, 6});

  for (bool strong : {false, true}) {
    MinPrimesFactor mp = minprimes_factor(c, i6, strong, z.primes);
    CHECK(mp.K.members() == z.members_of({0, 3, 6, 9}));
    CHECK(mp.inclusion_ok);
  }

  // over Y = Spec every minimal prime over (6) is H_Y, so K = R
  SubSpace full = make_subspace(z.ring, z.primes);
  YCache cf = make_ycache(full, z.lat);
  MinPrimesFactor mp = minprimes_factor(cf, i6, false, z.primes);
  CHECK(mp.K.members() == Bitset::full(12));
  CHECK(mp.inclusion_ok);
}
