#include "hyspec/topology.hpp"

#include <algorithm>
#include <set>

#include "hyspec/errors.hpp"
#include "hyspec/hy.hpp"
#include "hyspec/spectrum.hpp"

namespace hyspec {

std::string SubSpace::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += points[i].to_string();
  }
  return out + "}";
}

SubSpace make_subspace(const FiniteRing& ring, std::vector<Ideal> points) {
  std::set<Bitset> seen;
  for (const Ideal& P : points) {
    if (&P.ring() != &ring) throw RingMismatch("subspace point from another ring");
    if (!is_prime(P)) throw BadSpec("subspace point is not prime: " + P.to_string());
    if (!seen.insert(P.members()).second)
      throw BadSpec("duplicate subspace point: " + P.to_string());
  }
  std::sort(points.begin(), points.end(), [](const Ideal& a, const Ideal& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.members() < b.members();
  });
  return SubSpace{&ring, std::move(points)};
}

ClosedSet hull(const SubSpace& Y, const Ideal& I) {
  PointSet s(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (I.members().is_subset_of(Y.points[i].members())) s.set(i);
  return ClosedSet{&Y, s};
}

ClosedSet hull_elem(const SubSpace& Y, int a) {
  PointSet s(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (Y.points[i].contains(a)) s.set(i);
  return ClosedSet{&Y, s};
}

ClosedSet hull_set(const SubSpace& Y, const Bitset& elems) {
  PointSet s(Y.size());
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (elems.is_subset_of(Y.points[i].members())) s.set(i);
  return ClosedSet{&Y, s};
}

Ideal kernel(const SubSpace& Y, const PointSet& S) {
  Bitset meet = Bitset::full(Y.ring->size());
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (S.test(i)) meet &= Y.points[i].members();
  return Ideal(*Y.ring, meet);
}

ClosedSet closure(const SubSpace& Y, const PointSet& S) {
  return hull(Y, kernel(Y, S));
}

bool is_y_hilbert(const Ideal& I, const SubSpace& Y) {
  return kernel(Y, hull(Y, I).members) == I;
}

CompactnessResult is_compact(const SubSpace&) {
  return CompactnessResult{};  // finite spaces are compact
}

bool subbasic_cover_check(const SubSpace& Y, const IdealLattice& lattice) {
  // every subbasic closed family with empty total intersection already has a
  // finite subfamily with empty intersection; over a finite ring "finite
  // subfamily" is the family itself, so this reduces to: h_Y(I) empty
  // implies h_Y(F) empty for F = I
  for (const Ideal& I : lattice.ideals) {
    ClosedSet h = hull(Y, I);
    if (h.members.none()) {
      Bitset all(I.ring().size());
      for (int a : I.element_list()) all.set(a);
      if (hull_set(Y, all).members.any()) return false;
    }
  }
  return true;
}

CheckReport verify_compactness_equivalents(const SubSpace& Y, const IdealLattice& lattice) {
  CheckReport rep;
  rep.id = "T3.5";
  const bool compact = is_compact(Y).compact;

  auto fail = [&](const char* cond, const Ideal& I) {
    rep.fail({{"condition", cond}, {"ideal", I.to_string()}});
  };

  // (a) every proper H_Y-ideal is fixed
  for (const Ideal& I : lattice.ideals)
    if (I.is_proper() && is_hy_ideal(I, Y) && is_fixed(I, Y) != compact)
      fail("a", I);
  // (b) every proper strong H_Y-ideal is fixed
  for (const Ideal& I : lattice.ideals)
    if (I.is_proper() && is_strong_hy_ideal(I, Y) && is_fixed(I, Y) != compact)
      fail("b", I);
  // (c) every ideal inside the union of Y is fixed
  Bitset union_y(Y.ring->size());
  for (const Ideal& P : Y.points) union_y |= P.members();
  for (const Ideal& I : lattice.ideals)
    if (I.members().is_subset_of(union_y) && is_fixed(I, Y) != compact)
      fail("c", I);
  // (d) maximal proper strong H_Y-ideals lie in Y
  std::set<Bitset> ypoints;
  for (const Ideal& P : Y.points) ypoints.insert(P.members());
  for (const Ideal& M : maxl_pshy(Y, lattice))
    if (ypoints.count(M.members()) != compact) fail("d", M);

  if (Y.empty() && rep.verdict == Verdict::Pass) {
    rep.verdict = Verdict::Degenerate;
    rep.notes.push_back("Y is empty");
  }
  return rep;
}

Compactification compactification(const SubSpace& Y, const IdealLattice& lattice) {
  Compactification out;
  out.degenerate = Y.empty();

  std::set<Bitset> zset;
  std::vector<Ideal> zpoints;
  for (const Ideal& M : maxl_pshy(Y, lattice)) {
    if (!is_prime(M)) {
      out.non_prime.push_back(M);
      continue;
    }
    if (zset.insert(M.members()).second) zpoints.push_back(M);
  }
  for (const Ideal& P : Y.points)
    if (zset.insert(P.members()).second) zpoints.push_back(P);
  out.z = make_subspace(*Y.ring, std::move(zpoints));

  // density: the copy of Y inside Z closes up to all of Z
  PointSet y_in_z(out.z.size());
  std::set<Bitset> ymembers;
  for (const Ideal& P : Y.points) ymembers.insert(P.members());
  for (std::size_t i = 0; i < out.z.size(); ++i)
    if (ymembers.count(out.z.points[i].members())) y_in_z.set(i);
  out.dense = closure(out.z, y_in_z).members == Bitset::full(out.z.size());
  out.compact = is_compact(out.z).compact;
  return out;
}

}  // namespace hyspec
