#ifndef HYSPEC_SPECTRUM_HPP
#define HYSPEC_SPECTRUM_HPP

#include <vector>

#include "hyspec/ideal.hpp"

namespace hyspec {

// I proper and ab in I implies a in I or b in I, checked over complement
// pairs.
bool is_prime(const Ideal& I);

// Primes of the ring, in lattice order.
std::vector<Ideal> spec_primes(const IdealLattice& lattice);

// Inclusion-maximal / -minimal elements of the prime set.
std::vector<Ideal> max_ideals(const std::vector<Ideal>& primes);
std::vector<Ideal> min_primes(const std::vector<Ideal>& primes);

// Inclusion-minimal primes containing I.
std::vector<Ideal> min_over(const Ideal& I, const std::vector<Ideal>& primes);

// Bourbaki associated primes: primes of the form (I : x).
std::vector<Ideal> bourbaki(const Ideal& I);

// Semi-prime I with I = intersection of bourbaki(I); empty intersection
// denotes R. Throws NotSemiprime outside its domain.
bool is_fixed_place(const Ideal& I);

// Annihilators maximal among annihilators of nonzero elements. Each result
// is asserted prime rather than assumed.
std::vector<Ideal> affiliated_primes(const FiniteRing& ring);

}  // namespace hyspec

#endif
