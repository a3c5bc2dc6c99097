#include "hyspec/spectrum.hpp"

#include <algorithm>
#include <set>

#include "hyspec/errors.hpp"

namespace hyspec {

bool is_prime(const Ideal& I) {
  if (!I.is_proper()) return false;
  const FiniteRing& ring = I.ring();
  const int N = ring.size();
  std::vector<int> outside;
  for (int a = 0; a < N; ++a)
    if (!I.contains(a)) outside.push_back(a);
  for (int a : outside)
    for (int b : outside)
      if (I.contains(ring.mul(a, b))) return false;
  return true;
}

std::vector<Ideal> spec_primes(const IdealLattice& lattice) {
  std::vector<Ideal> out;
  for (const Ideal& I : lattice.ideals)
    if (is_prime(I)) out.push_back(I);
  return out;
}

std::vector<Ideal> max_ideals(const std::vector<Ideal>& primes) {
  return inclusion_maximal(primes);
}

std::vector<Ideal> min_primes(const std::vector<Ideal>& primes) {
  return inclusion_minimal(primes);
}

std::vector<Ideal> min_over(const Ideal& I, const std::vector<Ideal>& primes) {
  std::vector<Ideal> above;
  for (const Ideal& P : primes)
    if (I.is_subset_of(P)) above.push_back(P);
  return inclusion_minimal(above);
}

std::vector<Ideal> bourbaki(const Ideal& I) {
  const FiniteRing& ring = I.ring();
  std::set<Bitset> seen;
  std::vector<Ideal> out;
  for (int x = 0; x < ring.size(); ++x) {
    Ideal c = colon(I, x);
    if (is_prime(c) && seen.insert(c.members()).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.members() < b.members();
  });
  return out;
}

bool is_fixed_place(const Ideal& I) {
  if (!is_semiprime(I))
    throw NotSemiprime("fixed-place is defined for semi-prime ideals only");
  Bitset meet = Bitset::full(I.ring().size());
  for (const Ideal& P : bourbaki(I)) meet &= P.members();
  return meet == I.members();
}

std::vector<Ideal> affiliated_primes(const FiniteRing& ring) {
  std::vector<Ideal> anns;
  std::set<Bitset> seen;
  for (int a = 0; a < ring.size(); ++a) {
    if (a == ring.zero()) continue;
    Ideal ann = annihilator(ring, a);
    if (seen.insert(ann.members()).second) anns.push_back(ann);
  }
  std::vector<Ideal> maxl = inclusion_maximal(anns);
  for (const Ideal& P : maxl)
    if (!is_prime(P))
      throw Error("maximal annihilator is not prime: " + P.to_string());
  std::sort(maxl.begin(), maxl.end(), [](const Ideal& a, const Ideal& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.members() < b.members();
  });
  return maxl;
}

}  // namespace hyspec
