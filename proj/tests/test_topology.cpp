#include <doctest.h>

#include "hyspec/topology.hpp"
#include "hyspec/spectrum.hpp"

using namespace hyspec;

namespace {
struct Z12 {
  FiniteRing ring = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(ring);
  std::vector<Ideal> primes = spec_primes(lat);
  SubSpace Y = make_subspace(ring, primes);
};
}  // namespace

TEST_CASE("hull and kernel on Z12 with Y = Spec") {
  Z12 z;
  ClosedSet h0 = hull(z.Y, zero_ideal(z.ring));
  CHECK(h0.members.count() == 2);
  CHECK(kernel(z.Y, h0.members).element_list() == std::vector<int>{0, 6});

  ClosedSet h4 = hull_elem(z.Y, 4);
  CHECK(h4.members.count() == 1);  // only (2) contains 4
  CHECK(kernel(z.Y, h4.members).element_list() == std::vector<int>{0, 2, 4, 6, 8, 10});

  // hull of a raw element set equals the hull of the generated ideal
  Bitset s(12);
  s.set(4);
  s.set(6);
  CHECK(hull_set(z.Y, s).members == hull(z.Y, ideal_generate(z.ring, {4, 6})).members);
}

TEST_CASE("Y-Hilbert ideals of Z12") {
  Z12 z;
  CHECK(is_y_hilbert(ideal_generate(z.ring, {6}), z.Y));
  CHECK(is_y_hilbert(ideal_generate(z.ring, {2}), z.Y));
  CHECK_FALSE(is_y_hilbert(ideal_generate(z.ring, {4}), z.Y));
  CHECK_FALSE(is_y_hilbert(zero_ideal(z.ring), z.Y));
}

TEST_CASE("closure is a closure operator") {
  Z12 z;
  for (std::uint64_t m = 0; m < 4; ++m) {
    PointSet s(2);
    for (int b = 0; b < 2; ++b)
      if ((m >> b) & 1) s.set(b);
    ClosedSet c = closure(z.Y, s);
    CHECK(s.is_subset_of(c.members));
    CHECK(closure(z.Y, c.members).members == c.members);  // idempotent
  }
}

TEST_CASE("compactness equivalents and compactification") {
  Z12 z;
  CheckReport rep = verify_compactness_equivalents(z.Y, z.lat);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(subbasic_cover_check(z.Y, z.lat));

  Compactification c = compactification(z.Y, z.lat);
  CHECK(c.dense);
  CHECK(c.compact);
  CHECK(c.non_prime.empty());
  CHECK(c.z.size() == 2);  // finite Y already compact: Z = Y

  SubSpace empty = make_subspace(z.ring, {});
  CheckReport rep0 = verify_compactness_equivalents(empty, z.lat);
  CHECK(rep0.verdict == Verdict::Degenerate);
  CHECK(compactification(empty, z.lat).degenerate);
}
