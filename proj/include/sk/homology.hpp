#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "sk/complex.hpp"
#include "sk/smith.hpp"

namespace sk {

// Rows and columns follow the orders of x.edges() and x.triangles().
// Sign convention: d[a,b] = b - a, d[a,b,c] = [b,c] - [a,c] + [a,b].
IntMatrix boundary_matrix(const Simplex2Complex& x, int k);

struct HomologySummary {
  std::array<std::size_t, 3> betti{};
  std::vector<mpz_class> h1_torsion_factors;
  mpz_class torsion_order = 1;

  bool operator==(const HomologySummary&) const = default;
};

HomologySummary homology_summary(const Simplex2Complex& x);

// Smallest k with 3^k >= t^2.
unsigned kappa_lower_torsion(const mpz_class& t);

// Signed edge chain of a closed vertex path, indexed like x.edges().
std::vector<mpz_class> loop_chain(const Simplex2Complex& x, const std::vector<Vertex>& loop);

// Decides whether an edge chain lies in the image of d2, over Z (p = 0) or
// over Z/p for a prime p. Setup cost is one elimination; each query is a
// matrix-vector product.
class BoundaryTest {
 public:
  explicit BoundaryTest(const Simplex2Complex& x, unsigned p = 0);
  bool is_boundary(const std::vector<mpz_class>& chain) const;
  unsigned modulus() const { return p_; }

 private:
  unsigned p_;
  std::size_t n_ = 0;
  // Z: U d2 V = diag.
  Diagonalization diag_;
  // Z/p: reduced column basis, pivot row per vector.
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sk
