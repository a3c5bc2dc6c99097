#include <set>

#include <doctest.h>

#include "hyspec/hy.hpp"
#include "hyspec/spectrum.hpp"
#include "oracles.hpp"

using namespace hyspec;

namespace {
struct Fixture {
  FiniteRing ring;
  IdealLattice lat;
  std::vector<Ideal> primes;
  SubSpace Y;
  explicit Fixture(RingSpec spec)
      : ring(build_ring(spec)), lat(all_ideals(ring)), primes(spec_primes(lat)),
        Y(make_subspace(ring, primes)) {}
};

Bitset members_of(const FiniteRing& r, std::vector<int> elems) {
  Bitset b(r.size());
  for (int e : elems) b.set(e);
  return b;
}
}  // namespace

TEST_CASE("H_Y ideals of Z12 with Y = Spec") {
  Fixture z(RingSpec::zn(12));
  std::set<Bitset> hy;
  for (const Ideal& I : z.lat.ideals)
    if (is_hy_ideal(I, z.Y)) hy.insert(I.members());
  std::set<Bitset> expect{
      members_of(z.ring, {0, 6}),
      members_of(z.ring, {0, 3, 6, 9}),
      members_of(z.ring, {0, 2, 4, 6, 8, 10}),
      Bitset::full(12),
  };
  CHECK(hy == expect);
  // at this scale strong and plain coincide on every instance we know of
  for (const Ideal& I : z.lat.ideals)
    CHECK(is_hy_ideal(I, z.Y) == is_strong_hy_ideal(I, z.Y));
}

TEST_CASE("closures: I_H and I_SH goldens") {
  Fixture z(RingSpec::zn(12));
  CHECK(hy_closure(zero_ideal(z.ring), z.Y).members() == members_of(z.ring, {0, 6}));
  CHECK(strong_hy_closure(ideal_generate(z.ring, {4}), z.Y).members() ==
        members_of(z.ring, {0, 2, 4, 6, 8, 10}));
  // closure against the lattice-minimum oracle, all ideals, all Y subsets
  for (std::uint64_t m = 0; m < 4; ++m) {
    std::vector<Ideal> pts;
    for (int b = 0; b < 2; ++b)
      if ((m >> b) & 1) pts.push_back(z.primes[b]);
    SubSpace Y = make_subspace(z.ring, pts);
    for (const Ideal& I : z.lat.ideals)
      CHECK(hy_closure(I, Y).members() ==
            oracles::hy_closure_oracle(I, Y, z.lat).members());
  }
}

TEST_CASE("strong single test equals the all-subsets oracle") {
  for (auto spec : {RingSpec::zn(12), RingSpec::zn(4),
                    RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)})}) {
    Fixture z(spec);
    const std::size_t k = z.primes.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      std::vector<Ideal> pts;
      for (std::size_t b = 0; b < k; ++b)
        if ((m >> b) & 1) pts.push_back(z.primes[b]);
      SubSpace Y = make_subspace(z.ring, pts);
      for (const Ideal& I : z.lat.ideals)
        CHECK(is_strong_hy_ideal(I, Y) == is_strong_hy_ideal_subset_oracle(I, Y));
    }
  }
}

TEST_CASE("condition profiles are uniform and match the subset-quantified oracles") {
  Fixture z(RingSpec::zn(12));
  for (const Ideal& I : z.lat.ideals) {
    ConditionProfile p = hy_condition_profile(I, z.Y, z.lat);
    CHECK(p.uniform());
    CHECK(p.all_true() == is_hy_ideal(I, z.Y));
    ConditionProfile s = strong_condition_profile(I, z.Y, z.lat);
    CHECK(s.uniform());
    CHECK(s.all_true() == is_strong_hy_ideal(I, z.Y));

    ConditionProfile po = hy_condition_profile_subset_oracle(I, z.Y);
    CHECK(po.uniform());
    CHECK(po.all_true() == p.all_true());
    ConditionProfile so = strong_condition_profile_subset_oracle(I, z.Y);
    CHECK(so.uniform());
    CHECK(so.all_true() == s.all_true());
  }
}

TEST_CASE("filter machinery") {
  Fixture z(RingSpec::zn(12));
  Ideal i4 = ideal_generate(z.ring, {4});
  PointSet meet = filter_intersection(i4, z.Y, z.lat);
  CHECK(meet.count() == 1);  // exactly the point (2)
  CHECK(kernel(z.Y, meet).members() == members_of(z.ring, {0, 2, 4, 6, 8, 10}));

  auto members = hy_filter_members(i4, z.Y, z.lat);
  CHECK(!members.empty());
  for (const Bitset& c : members) CHECK(hy_filter_has_member(i4, z.Y, z.lat, c));

  CHECK(is_fixed(i4, z.Y));
  CHECK(is_fixed(zero_ideal(z.ring), z.Y));

  auto maxfix = maximal_fixed(z.Y, z.lat);
  CHECK(maxfix.size() == 2);  // = maxl(Y) = the two primes
}

TEST_CASE("proper strong H_Y ideals and their maximal elements") {
  Fixture z(RingSpec::zn(12));
  auto ps = pshy(z.Y, z.lat);
  std::set<Bitset> got;
  for (const Ideal& I : ps) got.insert(I.members());
  std::set<Bitset> expect{members_of(z.ring, {0, 6}),
                          members_of(z.ring, {0, 3, 6, 9}),
                          members_of(z.ring, {0, 2, 4, 6, 8, 10})};
  CHECK(got == expect);
  CHECK(maxl_pshy(z.Y, z.lat).size() == 2);
}

TEST_CASE("fixed with respect to a subset") {
  Fixture z(RingSpec::zn(12));
  Ideal i4 = ideal_generate(z.ring, {4});
  Bitset s_only_p0(2);
  s_only_p0.set(0);  // the point (3)
  CHECK_FALSE(is_fixed_wrt(i4, s_only_p0, z.Y));
  Bitset s_only_p1(2);
  s_only_p1.set(1);  // the point (2)
  CHECK(is_fixed_wrt(i4, s_only_p1, z.Y));
  CHECK_THROWS_AS(is_fixed_wrt(i4, Bitset(5), z.Y), SNotSubsetY);
}

TEST_CASE("inverse image goldens") {
  Fixture z(RingSpec::zn(12));
  InverseImage a = hy_inverse_image(ideal_generate(z.ring, {4}), z.Y, z.lat);
  CHECK(a.members == members_of(z.ring, {0, 2, 4, 6, 8, 10}));
  CHECK(a.is_ideal);
  InverseImage b = hy_inverse_image(ideal_generate(z.ring, {6}), z.Y, z.lat);
  CHECK(b.members == members_of(z.ring, {0, 6}));
}

TEST_CASE("subrings") {
  FiniteRing f22 = build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)}));
  SubringView diag = make_subring(f22, {f22.zero(), f22.one()});
  CHECK(diag.ring.size() == 2);
  CHECK(diag.to_parent[diag.ring.one()] == f22.one());

  // a subset without the identity must be rejected
  CHECK_THROWS_AS(make_subring(f22, {f22.zero()}), NotASubring);
}

TEST_CASE("ycache agrees with the standalone functions") {
  Fixture z(RingSpec::zn(12));
  YCache c = make_ycache(z.Y, z.lat);
  for (std::size_t i = 0; i < z.lat.ideals.size(); ++i) {
    const Ideal& I = z.lat.ideals[i];
    CHECK(static_cast<bool>(c.hy[i]) == is_hy_ideal(I, z.Y));
    CHECK(static_cast<bool>(c.strong[i]) == is_strong_hy_ideal(I, z.Y));
    CHECK(z.lat.ideals[c.ih[i]].members() == hy_closure(I, z.Y).members());
    CHECK(z.lat.ideals[c.ish[i]].members() == strong_hy_closure(I, z.Y).members());
  }
}
