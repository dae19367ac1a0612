#pragma once

#include <vector>

#include "sk/complex.hpp"

namespace sk {

// Triples are ranked in colex order (by largest vertex, then middle, then
// smallest). The canonical labeling of a complex is the one whose triangle
// set, read as a 0/1 vector from the lowest-ranked triple upward, is
// lexicographically largest; extra edges break the remaining ties the same
// way. Found by branch and bound that assigns labels 0, 1, 2, ... in turn.
struct CanonicalForm {
  Simplex2Complex complex;
  std::vector<Vertex> labeling;  // old vertex -> canonical label
};

CanonicalForm canonical_form(const Simplex2Complex& x);

bool isomorphic(const Simplex2Complex& a, const Simplex2Complex& b);

// Position of a sorted triple in colex order.
std::size_t colex_rank(const Triangle& t);

}  // namespace sk
