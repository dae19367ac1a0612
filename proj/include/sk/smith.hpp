#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace sk {

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  mpz_class& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }

  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithNormalForm {
  std::vector<mpz_class> invariant_factors;  // d1 | d2 | ... | d_rank, all >= 1
  std::size_t rank = 0;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal (not normalized into a
// divisibility chain). Only U is recorded; it is what a membership test in
// the column lattice of M needs.
struct Diagonalization {
  std::vector<mpz_class> diagonal;  // nonzero entries D(0,0) .. D(rank-1, rank-1)
  IntMatrix left;                   // U, rows x rows
};

Diagonalization diagonalize_with_left(const IntMatrix& m);

// Turns a list of nonzero integers into the divisibility chain presenting
// the same abelian group. Length is preserved; entries become positive.
std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> diagonal);

// gcd of all k x k minors, 0 when they all vanish. Test oracle only; throws
// TooLarge past one million minors.
mpz_class gcd_of_minors_oracle(const IntMatrix& m, std::size_t k);

mpz_class determinant(IntMatrix m);

}  // namespace sk
