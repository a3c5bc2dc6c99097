#ifndef HYSPEC_HY_HPP
#define HYSPEC_HY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyspec/topology.hpp"

namespace hyspec {

// Verdicts for a family of equivalent characterizations, evaluated
// independently so the verifier can assert their agreement.
struct ConditionProfile {
  std::string family;
  std::vector<std::string> labels;
  std::vector<bool> verdicts;
  std::vector<std::string> witnesses;  // parallel to verdicts; "" when true

  void add(std::string label, bool ok, std::string witness = "") {
    labels.push_back(std::move(label));
    verdicts.push_back(ok);
    witnesses.push_back(ok ? "" : std::move(witness));
  }
  bool uniform() const;
  bool all_true() const;
  bool value(const std::string& label) const;
};

// I is an H_Y-ideal: kh_Y(a) inside I for every a in I.
bool is_hy_ideal(const Ideal& I, const SubSpace& Y);

// The nine equivalent characterizations, each evaluated on its own.
// Subset quantifiers run over ideals (h_Y(S) = h_Y(<S>)).
ConditionProfile hy_condition_profile(const Ideal& I, const SubSpace& Y,
                                      const IdealLattice& lattice);

// Strong H_Y-ideal. Single test kh_Y(I) inside I; valid for finite rings
// since F -> kh_Y(F) is monotone and I is itself a finite subset of I.
bool is_strong_hy_ideal(const Ideal& I, const SubSpace& Y);

// Exhaustive all-subsets route, the independent oracle for the single-test
// reduction. Cost 2^|I|; gate by ring size at the call site.
bool is_strong_hy_ideal_subset_oracle(const Ideal& I, const SubSpace& Y);

// The twelve equivalent strong characterizations.
ConditionProfile strong_condition_profile(const Ideal& I, const SubSpace& Y,
                                          const IdealLattice& lattice);

// Full 2^N subset-quantified profiles; oracles for the ideal reduction.
ConditionProfile hy_condition_profile_subset_oracle(const Ideal& I, const SubSpace& Y);
ConditionProfile strong_condition_profile_subset_oracle(const Ideal& I, const SubSpace& Y);

// I_H: least fixpoint of J -> < union of kh_Y(a), a in J > above I.
Ideal hy_closure(const Ideal& I, const SubSpace& Y);
// I_SH = kh_Y(I): the least strong H_Y-ideal above I.
Ideal strong_hy_closure(const Ideal& I, const SubSpace& Y);

// Members of the filter generated by I: the closed sets h_Y(F) for finite
// F inside I, realized as h_Y(J') over subideals J' of I. Deduplicated.
std::vector<Bitset> hy_filter_members(const Ideal& I, const SubSpace& Y,
                                      const IdealLattice& lattice);
bool hy_filter_has_member(const Ideal& I, const SubSpace& Y,
                          const IdealLattice& lattice, const Bitset& closed);

// Intersection of all filter members; equals h_Y(I), which the
// implementation asserts.
PointSet filter_intersection(const Ideal& I, const SubSpace& Y,
                             const IdealLattice& lattice);

// Fixed: h_Y(I) nonempty. Free otherwise.
bool is_fixed(const Ideal& I, const SubSpace& Y);

// Fixed with respect to S: h_Y(I) meets S. Throws SNotSubsetY.
bool is_fixed_wrt(const Ideal& I, const PointSet& S, const SubSpace& Y);

// Inclusion-maximal fixed H_Y-ideals, computed over the lattice.
std::vector<Ideal> maximal_fixed(const SubSpace& Y, const IdealLattice& lattice);

// Proper strong H_Y-ideals and their maximal elements.
std::vector<Ideal> pshy(const SubSpace& Y, const IdealLattice& lattice);
std::vector<Ideal> maxl_pshy(const SubSpace& Y, const IdealLattice& lattice);

// { a : h_Y(a) is a filter member }. Not an ideal by construction; the flag
// records whether it happens to be one (a finding the verifier surfaces).
struct InverseImage {
  Bitset members;
  bool is_ideal = false;
};
InverseImage hy_inverse_image(const Ideal& I, const SubSpace& Y,
                              const IdealLattice& lattice);

// Restriction to a subring R': builds R' from the element subset, sends Y to
// Y' = { P cap R' }, and verifies fixed(I, Y) implies fixed(I cap R', Y').
CheckReport subring_restriction_check(const FiniteRing& ring,
                                      const std::vector<int>& subring_elements,
                                      const SubSpace& Y, const Ideal& I);

// A subring realized as a Tables ring, with the index correspondence.
struct SubringView {
  FiniteRing ring;
  std::vector<int> to_parent;    // subring index -> parent index
  std::vector<int> from_parent;  // parent index -> subring index or -1
};
SubringView make_subring(const FiniteRing& ring, std::vector<int> elements);

// Per-(ring lattice, Y) cache of hulls, kernels and the derived predicate
// tables. The verifier leans on this; results match the standalone
// functions above.
struct YCache {
  const SubSpace* Y = nullptr;
  const IdealLattice* lattice = nullptr;
  std::vector<Bitset> hull_of_elem;  // ring element -> point set
  std::vector<Bitset> kh_elem;       // ring element -> element set (an ideal)
  std::vector<Bitset> hull_of_ideal; // lattice index -> point set
  std::vector<Bitset> kh_ideal;      // lattice index -> element set
  std::vector<char> hy;              // lattice index -> is H_Y-ideal
  std::vector<char> strong;          // lattice index -> is strong H_Y-ideal
  std::vector<int> ih;               // lattice index -> index of I_H
  std::vector<int> ish;              // lattice index -> index of I_SH
  Bitset union_y;                    // union of the points, as elements
  Ideal k0;                          // kernel of all of Y

  const Ideal& ideal(int i) const { return lattice->ideals[i]; }
  bool is_hyj(int i, int j) const;              // I_i is an H_{Y J_j}-ideal
  bool is_strong_hyj(int i, int j) const;
  bool is_hyj(const Ideal& I, const Ideal& J) const;
  bool is_strong_hyj(const Ideal& I, const Ideal& J) const;
};

YCache make_ycache(const SubSpace& Y, const IdealLattice& lattice);

}  // namespace hyspec

#endif
