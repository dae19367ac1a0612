#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sk/complex.hpp"
#include "sk/group_spec.hpp"

namespace sk {

// Triangulated disk whose boundary is the polygon 0, 1, ..., rim-1. The rim
// is cut into arcs starting at the given (increasing) positions; each arc
// gets one interior vertex coned to it, consecutive interior vertices are
// joined through the shared rim vertex, and the inner polygon is fanned.
// Vertices rim, rim+1, ... are the interior ones, one per arc.
// Triangle count: rim + 2k - 2 for k arcs.
Simplex2Complex ring_disk(std::size_t rim, const std::vector<std::size_t>& arc_starts);

// Marks: P = 0, loop "alpha" = (0,3,5), a non-bounding loop.
MarkedComplex minimal_rp2();

// Seven-vertex torus. Marks: P = 0, "alpha1" = (0,3,6), "alpha2" = (0,1,2).
MarkedComplex minimal_torus();

// RP2 minus one triangle. Marks: P, "gamma" (core), "boundary", oriented so
// that boundary - 2 gamma bounds.
MarkedComplex moebius_strip();

// Strips M_0..M_{n-1}, the core of M_k glued to the boundary of M_{k-1}.
// Marks: P, "gamma0".."gamma{n-1}", "boundary".
MarkedComplex moebius_telescope(std::size_t n);

struct CyclicTarget {
  mpz_class m;
  std::size_t n = 0;                   // floor(log2 m)
  std::vector<std::size_t> exponents;  // increasing, sum of 2^e is m
};

CyclicTarget cyclic_target(const mpz_class& m);

// Telescope of height n plus a disk along gamma_{n1} ... gamma_{n(s-1)}
// followed by the last boundary. Marks: P, "alpha" (= gamma0), "xi".
MarkedComplex complex_for_cyclic(const mpz_class& m);

// One 3-edge loop per free generator, one cyclic complex per invariant
// factor, all wedged at P, then one torus per pair of factors glued along
// their loops. Marks: P, "alpha1".."alpha{r+s}".
MarkedComplex complex_for_abelian(std::size_t rank, const std::vector<mpz_class>& chain);

// Wedge of n triangulated circles, no triangles.
MarkedComplex free_group_complex(std::size_t n);

// Chain of l seven-vertex tori joined by connected sum along triangles.
// 12 l + 2 triangles.
MarkedComplex surface_witness(std::size_t genus);

struct SurfaceBounds {
  std::size_t kappa_lo = 0;
  std::size_t kappa_hi = 0;
};

SurfaceBounds surface_bounds(std::size_t genus);

// Glues the first triangle of a to the first triangle of b. Marks of b
// whose names clash get a "_2" suffix.
MarkedComplex free_product_complex(const MarkedComplex& a, const MarkedComplex& b);

// Registry: rp2, torus, moebius, telescope:n, cyclic:m, finite_abelian:...,
// abelian:r:(...), surface:l, free:n, trivial, freeprod:(name;name;...).
MarkedComplex build_named(const std::string& name);

}  // namespace sk
