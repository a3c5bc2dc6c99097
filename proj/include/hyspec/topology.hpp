#ifndef HYSPEC_TOPOLOGY_HPP
#define HYSPEC_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "hyspec/ideal.hpp"
#include "hyspec/report.hpp"

namespace hyspec {

// Y: an ordered set of primes of one ring, carrying the induced Zariski
// topology. Point order follows the lattice order of the primes.
struct SubSpace {
  const FiniteRing* ring = nullptr;
  std::vector<Ideal> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  std::string describe() const;  // "{0,2}" indices into the ambient spec order
};

// Validates that points are pairwise distinct verified primes.
SubSpace make_subspace(const FiniteRing& ring, std::vector<Ideal> points);

// An arbitrary set of points of Y is a PointSet; a ClosedSet additionally
// satisfies members == hull(kernel(members)).
using PointSet = Bitset;

struct ClosedSet {
  const SubSpace* space = nullptr;
  PointSet members;
};

// h_Y(I) = { P in Y : I subset of P }
ClosedSet hull(const SubSpace& Y, const Ideal& I);
ClosedSet hull_elem(const SubSpace& Y, int a);
// hull of an arbitrary element subset; equals hull of the generated ideal
ClosedSet hull_set(const SubSpace& Y, const Bitset& elems);

// k(S) = intersection of the points in S; k(empty) = R
Ideal kernel(const SubSpace& Y, const PointSet& S);

// cl_Y(S) = h_Y(k(S))
ClosedSet closure(const SubSpace& Y, const PointSet& S);

// I = k(h_Y(I))
bool is_y_hilbert(const Ideal& I, const SubSpace& Y);

// Finite spaces are compact; the tag names the justification. The
// substantive content is verify_compactness_equivalents.
struct CompactnessResult {
  bool compact = true;
  std::string justification = "finite-space";
};
CompactnessResult is_compact(const SubSpace& Y);

// Diagnostic subbasic-cover check (Alexander-style), gated to small rings:
// h_Y(I) empty implies h_Y(F) empty for some finite F within I.
bool subbasic_cover_check(const SubSpace& Y, const IdealLattice& lattice);

// Evaluates: (a) every proper H_Y-ideal is fixed; (b) every proper strong
// H_Y-ideal is fixed; (c) every ideal inside the union of Y is fixed;
// (d) maximal proper strong H_Y-ideals all lie in Y — and asserts agreement
// with is_compact. Disagreements are failure witnesses.
CheckReport verify_compactness_equivalents(const SubSpace& Y, const IdealLattice& lattice);

struct Compactification {
  SubSpace z;
  std::vector<Ideal> non_prime;  // maximal proper strong H_Y-ideals failing primality
  bool dense = false;            // closure of Y inside Z is all of Z
  bool compact = false;
  bool degenerate = false;       // Y was empty
};

// Z = maxl(PSH_Y) union Y; primality of the added points is asserted and
// reported, not assumed.
Compactification compactification(const SubSpace& Y, const IdealLattice& lattice);

}  // namespace hyspec

#endif
