#ifndef HYSPEC_IDEAL_HPP
#define HYSPEC_IDEAL_HPP

#include <map>
#include <string>
#include <vector>

#include "hyspec/bitset.hpp"
#include "hyspec/ring.hpp"

namespace hyspec {

// An ideal of a finite ring, canonically identified by its member bitset.
// The generator list is a witness only and plays no role in equality.
class Ideal {
public:
  Ideal() = default;
  Ideal(const FiniteRing& ring, Bitset members, std::vector<int> gens = {})
      : ring_(&ring), members_(std::move(members)), gens_(std::move(gens)) {}

  const FiniteRing& ring() const { return *ring_; }
  const Bitset& members() const { return members_; }
  const std::vector<int>& generators() const { return gens_; }

  bool contains(int a) const { return members_.test(a); }
  std::size_t cardinality() const { return members_.count(); }
  bool is_proper() const { return !members_.test(ring_->one()); }
  bool is_zero() const { return cardinality() == 1; }
  bool is_subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }

  std::vector<int> element_list() const { return members_.members(); }
  std::string to_string() const;  // sorted element indices, e.g. "{0,4,8}"

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

private:
  const FiniteRing* ring_ = nullptr;
  Bitset members_;
  std::vector<int> gens_;
};

// Smallest ideal containing gens: closure under addition and ring multiples.
Ideal ideal_generate(const FiniteRing& ring, const std::vector<int>& gens);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

// All ideals, each exactly once, ordered by (cardinality, bitset order).
// Principal ideals closed under pairwise sums reach every ideal of a finite
// ring.
struct IdealLattice {
  const FiniteRing* ring = nullptr;
  std::vector<Ideal> ideals;
  std::map<Bitset, int> index;  // member bitset -> position in `ideals`

  int find(const Ideal& I) const;
  int find(const Bitset& members) const;
  const Ideal& zero() const { return ideals.front(); }
  const Ideal& whole() const { return ideals.back(); }
};

IdealLattice all_ideals(const FiniteRing& ring, std::size_t max_ideals = 1u << 20);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

// (I : a) = { x : a*x in I }
Ideal colon(const Ideal& I, int a);
// (K : I) = { x : x*i in K for all i in I }
Ideal colon_ideal(const Ideal& K, const Ideal& I);
// Ann(a) = ((0) : a)
Ideal annihilator(const FiniteRing& ring, int a);

// sqrt(I) = { x : x^n in I for some n >= 1 }, elementwise power iteration.
Ideal radical(const Ideal& I);

// I = sqrt(I); cross-asserted against the intersection-of-primes route by
// is_semiprime(I, primes).
bool is_semiprime(const Ideal& I);
bool is_semiprime(const Ideal& I, const std::vector<Ideal>& primes);

// Inclusion-extremal elements of an ideal family.
std::vector<Ideal> inclusion_maximal(const std::vector<Ideal>& family);
std::vector<Ideal> inclusion_minimal(const std::vector<Ideal>& family);

}  // namespace hyspec

#endif
