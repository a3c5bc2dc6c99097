#ifndef HYSPEC_RING_HPP
#define HYSPEC_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyspec/errors.hpp"

namespace hyspec {

// Size caps for ring construction. Everything downstream is exhaustive, so
// construction refuses rings that would make the lattice enumeration blow up.
struct Caps {
  int structured_max = 256;  // Zn / QuotPoly / Product
  int tables_max = 64;       // raw table rings
  static constexpr int hard_max = 4096;
};

// Abstract syntax for ring construction. One of:
//   Zn(n), QuotPoly(n, f), Product(factors), Tables(...)
struct RingSpec {
  enum class Kind { Zn, QuotPoly, Product, Tables };

  Kind kind = Kind::Zn;
  int n = 0;                       // modulus for Zn / QuotPoly
  std::vector<int> poly;           // QuotPoly: coefficients of f, low degree
                                   // first, monic, degree >= 1
  std::vector<RingSpec> factors;   // Product
  int count = 0;                   // Tables
  std::vector<int> add_table;      // Tables: row-major count x count
  std::vector<int> mul_table;
  int zero = 0, one = 0;
  std::string label;               // optional display name

  static RingSpec zn(int n);
  static RingSpec quot_poly(int n, std::vector<int> f);
  static RingSpec product(std::vector<RingSpec> fs);
  static RingSpec tables(int count, std::vector<int> add, std::vector<int> mul,
                         int zero, int one, std::string label = "");

  std::string describe() const;
};

// A finite commutative unital ring with fully materialized operation tables.
// Immutable after construction.
class FiniteRing {
public:
  int size() const { return n_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int pow(int a, int k) const;  // k >= 1

  const RingSpec& spec() const { return spec_; }
  const std::string& name(int a) const { return names_[a]; }
  const std::string& label() const { return spec_.label; }

  friend FiniteRing build_ring(const RingSpec& spec, const Caps& caps);

private:
  int n_ = 0;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_;
  int zero_ = 0, one_ = 0;
  RingSpec spec_;
  std::vector<std::string> names_;
};

// Builds the ring and validates the commutative-unital-ring axioms
// exhaustively (N <= 256) or on sampled triples above that.
// Throws BadSpec / AxiomViolation / CapExceeded.
FiniteRing build_ring(const RingSpec& spec, const Caps& caps = {});

// von Neumann regularity: every a has some x with a*x*a = a.
bool is_regular(const FiniteRing& ring);

// Every element is a proper power: x = y^n for some y and n >= 2.
bool has_root_property(const FiniteRing& ring);

// Ideal lattice is distributive: I cap (J+K) = (I cap J) + (I cap K) for all
// ideal triples. Defined in ideal.cpp (needs the lattice).
bool is_arithmetical(const FiniteRing& ring);

}  // namespace hyspec

#endif
