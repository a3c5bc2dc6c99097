#ifndef HYSPEC_DSL_HPP
#define HYSPEC_DSL_HPP

#include <string>
#include <vector>

#include "hyspec/ring.hpp"

namespace hyspec {

// Grammar:
//   ring := term (" x " term)*
//   term := "Z"<int> | "GF("<int>["^"<int>]")" | "Z"<int>"[x]/(" poly ")"
//   poly := monomials over Z_n joined by "+", e.g. "x^2+x+1", "2x^2+3"
// Whitespace-insensitive; the product separator is an "x" at bracket depth 0.
RingSpec parse_ring_dsl(const std::string& text);

// Coefficients low-degree-first, reduced mod n.
std::vector<int> parse_poly(const std::string& text, int n);

// First monic polynomial of degree k over Z_p (coefficient-lexicographic
// order) whose quotient ring is a field. Brute-force; k >= 2.
std::vector<int> find_irreducible(int p, int k);

}  // namespace hyspec

#endif
