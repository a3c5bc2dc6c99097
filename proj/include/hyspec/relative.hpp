#ifndef HYSPEC_RELATIVE_HPP
#define HYSPEC_RELATIVE_HPP

#include <optional>
#include <vector>

#include "hyspec/hy.hpp"

namespace hyspec {

// I is an H_{YJ}-ideal: kh_Y(a) cap J inside I for every a in I.
bool is_hyj(const Ideal& I, const Ideal& J, const SubSpace& Y);
// Strong variant, single test kh_Y(I) cap J inside I (monotonicity in F).
bool is_strong_hyj(const Ideal& I, const Ideal& J, const SubSpace& Y);
// Exhaustive finite-subset route; oracle for the single-test reduction.
bool is_strong_hyj_subset_oracle(const Ideal& I, const Ideal& J, const SubSpace& Y);

// The six equivalent characterizations of "I is a (strong) H_{YJ}-ideal",
// each evaluated independently. i, j are lattice indices.
ConditionProfile hyj_equivalents(const YCache& c, int i, int j, bool strong);

// Lattice indices of the (strong) H_Y-factors of I_i: ideals J with
// J not inside I and I an H_{YJ}-ideal.
std::vector<int> factor_indices(const YCache& c, int i, bool strong);

// Relativity decided by two independent routes which must agree:
// existence of a factor in the lattice, and existence of a principal
// witness c outside I with <c> cap kh_Y(a) inside I for all a in I.
struct RelativeResult {
  bool relative = false;
  std::optional<int> factor;     // lattice index, set when relative
  std::optional<int> principal;  // witness element, set when relative
};
RelativeResult is_relative(const YCache& c, int i, bool strong);

// The closed-form candidate for the greatest factor:
//   K = { x : kh_Y(a) cap <x> inside I for all a in I }
// (strong: kh_Y(I) in place of the kh_Y(a)). The published statement swaps
// the roles of x and a; `statement_form_matches` records whether that
// variant agrees, and the remaining flags audit K against the factor poset.
struct GreatestFactor {
  Bitset members;
  bool is_ideal = false;
  bool hyj_ok = false;            // I is an H_{YK}-ideal
  bool poset_has_max = false;     // factor poset has a greatest element
  bool matches_max = false;       // ... and it equals K
  bool statement_form_matches = false;
};
GreatestFactor greatest_factor(const YCache& c, int i, bool strong);

// K = intersection of the minimal primes over I that are not (strong)
// H_Y-ideals; R when there are none. inclusion_ok records
// I_H cap K inside sqrt(I) (I_SH for the strong variant).
struct MinPrimesFactor {
  Ideal K;
  bool inclusion_ok = false;
};
MinPrimesFactor minprimes_factor(const YCache& c, int i, bool strong,
                                 const std::vector<Ideal>& primes);

}  // namespace hyspec

#endif
