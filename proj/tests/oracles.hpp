#ifndef HYSPEC_TESTS_ORACLES_HPP
#define HYSPEC_TESTS_ORACLES_HPP

// Independent brute-force reference implementations. Deliberately dumb:
// these enumerate raw subsets so the production lattice/closure code is
// checked against something that shares none of its machinery.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyspec/hy.hpp"

namespace oracles {

// every additively+multiple-closed subset containing 0; N <= 16
inline std::vector<hyspec::Bitset> brute_force_ideals(const hyspec::FiniteRing& ring) {
  const int n = ring.size();
  if (n > 16) throw std::runtime_error("oracle gated to N <= 16");
  std::vector<hyspec::Bitset> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> ring.zero()) & 1)) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = 0; b < n && ok; ++b) {
        if (((mask >> b) & 1) && !((mask >> ring.add(a, b)) & 1)) ok = false;
        if (!((mask >> ring.mul(a, b)) & 1)) ok = false;
      }
    }
    if (!ok) continue;
    hyspec::Bitset bs(n);
    for (int a = 0; a < n; ++a)
      if ((mask >> a) & 1) bs.set(a);
    out.push_back(bs);
  }
  return out;
}

// least lattice ideal J >= I with kh_Y(a) <= J for all a in J
inline hyspec::Ideal hy_closure_oracle(const hyspec::Ideal& I, const hyspec::SubSpace& Y,
                                       const hyspec::IdealLattice& lattice) {
  const hyspec::Ideal* best = nullptr;
  for (const hyspec::Ideal& J : lattice.ideals) {
    if (!I.is_subset_of(J) || !hyspec::is_hy_ideal(J, Y)) continue;
    if (!best || J.is_subset_of(*best)) best = &J;
  }
  if (!best) throw std::runtime_error("no H_Y ideal above I (impossible: R is one)");
  // minimality double-check: nothing H_Y strictly between I and best
  for (const hyspec::Ideal& J : lattice.ideals)
    if (I.is_subset_of(J) && hyspec::is_hy_ideal(J, Y) && !best->is_subset_of(J))
      throw std::runtime_error("H_Y ideals above I are not downward directed");
  return *best;
}

}  // namespace oracles

#endif
