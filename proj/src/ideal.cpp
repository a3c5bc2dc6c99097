#include "hyspec/ideal.hpp"

#include <algorithm>
#include <set>

#include "hyspec/errors.hpp"

namespace hyspec {

std::string Ideal::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int a : element_list()) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

namespace {

// closure of a seed set under addition and all ring multiples
Bitset close_to_ideal(const FiniteRing& ring, Bitset seed) {
  const int N = ring.size();
  seed.set(ring.zero());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur = seed.members();
    for (int a : cur) {
      for (int b : cur) {
        int s = ring.add(a, b);
        if (!seed.test(s)) { seed.set(s); changed = true; }
      }
      for (int r = 0; r < N; ++r) {
        int m = ring.mul(r, a);
        if (!seed.test(m)) { seed.set(m); changed = true; }
      }
    }
  }
  return seed;
}

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (&I.ring() != &J.ring()) throw RingMismatch("ideals live in different rings");
}

}  // namespace

Ideal ideal_generate(const FiniteRing& ring, const std::vector<int>& gens) {
  Bitset seed(ring.size());
  for (int g : gens) {
    if (g < 0 || g >= ring.size()) throw BadSpec("generator index out of range");
    seed.set(g);
  }
  return Ideal(ring, close_to_ideal(ring, std::move(seed)), gens);
}

Ideal zero_ideal(const FiniteRing& ring) {
  Bitset b(ring.size());
  b.set(ring.zero());
  return Ideal(ring, b, {});
}

Ideal unit_ideal(const FiniteRing& ring) {
  return Ideal(ring, Bitset::full(ring.size()), {ring.one()});
}

int IdealLattice::find(const Bitset& members) const {
  auto it = index.find(members);
  return it == index.end() ? -1 : it->second;
}

int IdealLattice::find(const Ideal& I) const { return find(I.members()); }

IdealLattice all_ideals(const FiniteRing& ring, std::size_t max_ideals) {
  const int N = ring.size();
  std::set<Bitset> pool;
  std::vector<Bitset> principal;
  for (int a = 0; a < N; ++a) {
    Bitset b = ideal_generate(ring, {a}).members();
    if (pool.insert(b).second) principal.push_back(b);
  }

  // close under pairwise sums (sum of ideals = closure of the union)
  std::vector<Bitset> frontier(pool.begin(), pool.end());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& a : frontier)
      for (const auto& p : principal) {
        Bitset u = close_to_ideal(ring, a | p);
        if (pool.insert(u).second) {
          next.push_back(u);
          if (pool.size() > max_ideals)
            throw CapExceeded("ideal lattice exceeds enumeration cap");
        }
      }
    frontier = std::move(next);
  }

  IdealLattice lat;
  lat.ring = &ring;
  for (const auto& b : pool) lat.ideals.emplace_back(ring, b);
  std::sort(lat.ideals.begin(), lat.ideals.end(), [](const Ideal& a, const Ideal& b) {
    auto ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca < cb;
    return a.members() < b.members();
  });
  for (std::size_t i = 0; i < lat.ideals.size(); ++i)
    lat.index[lat.ideals[i].members()] = static_cast<int>(i);
  return lat;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return Ideal(I.ring(), close_to_ideal(I.ring(), I.members() | J.members()));
}

Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  Bitset seed(I.ring().size());
  for (int a : I.element_list())
    for (int b : J.element_list()) seed.set(I.ring().mul(a, b));
  return Ideal(I.ring(), close_to_ideal(I.ring(), std::move(seed)));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return Ideal(I.ring(), I.members() & J.members());
}

Ideal colon(const Ideal& I, int a) {
  const FiniteRing& ring = I.ring();
  Bitset b(ring.size());
  for (int x = 0; x < ring.size(); ++x)
    if (I.contains(ring.mul(a, x))) b.set(x);
  return Ideal(ring, b);
}

Ideal colon_ideal(const Ideal& K, const Ideal& I) {
  require_same_ring(K, I);
  const FiniteRing& ring = K.ring();
  Bitset b = Bitset::full(ring.size());
  for (int i : I.element_list()) b &= colon(K, i).members();
  return Ideal(ring, b);
}

Ideal annihilator(const FiniteRing& ring, int a) {
  return colon(zero_ideal(ring), a);
}

Ideal radical(const Ideal& I) {
  const FiniteRing& ring = I.ring();
  const int N = ring.size();
  Bitset b(N);
  std::vector<char> seen(N);
  for (int x = 0; x < N; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    int p = x;
    while (!seen[p]) {
      seen[p] = 1;
      if (I.contains(p)) { b.set(x); break; }
      p = ring.mul(p, x);
    }
  }
  return Ideal(ring, b);
}

bool is_semiprime(const Ideal& I) { return radical(I) == I; }

bool is_semiprime(const Ideal& I, const std::vector<Ideal>& primes) {
  bool by_radical = is_semiprime(I);
  // second route: intersection of the primes above I
  Bitset meet = Bitset::full(I.ring().size());
  for (const Ideal& P : primes)
    if (I.is_subset_of(P)) meet &= P.members();
  bool by_primes = meet == I.members();
  if (by_radical != by_primes)
    throw Error("semiprime routes disagree on " + I.to_string());
  return by_radical;
}

namespace {

std::vector<Ideal> inclusion_extremes(const std::vector<Ideal>& family, bool maximal) {
  std::vector<Ideal> out;
  for (const Ideal& I : family) {
    bool extreme = true;
    for (const Ideal& J : family) {
      if (I == J) continue;
      if (maximal ? I.is_subset_of(J) : J.is_subset_of(I)) { extreme = false; break; }
    }
    if (extreme) out.push_back(I);
  }
  return out;
}

}  // namespace

std::vector<Ideal> inclusion_maximal(const std::vector<Ideal>& family) {
  return inclusion_extremes(family, true);
}

std::vector<Ideal> inclusion_minimal(const std::vector<Ideal>& family) {
  return inclusion_extremes(family, false);
}

bool is_arithmetical(const FiniteRing& ring) {
  IdealLattice lat = all_ideals(ring);
  for (const Ideal& I : lat.ideals)
    for (const Ideal& J : lat.ideals)
      for (const Ideal& K : lat.ideals)
        if (intersect(I, sum(J, K)) != sum(intersect(I, J), intersect(I, K)))
          return false;
  return true;
}

}  // namespace hyspec
