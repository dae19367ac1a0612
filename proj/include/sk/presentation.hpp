#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sk/complex.hpp"

namespace sk {

// Letters are nonzero signed 1-based generator indices: +i is a_i, -i its
// inverse.
using Word = std::vector<std::int32_t>;

struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;

  // Checks letter ranges and drops empty relators.
  static Presentation make(std::size_t generator_count, std::vector<Word> relators);
  bool operator==(const Presentation&) const = default;
};

struct PresentationStats {
  std::size_t length = 0;   // total relator length
  std::size_t c_upper = 0;  // equal to length
  std::size_t t_upper = 0;  // sum of max(|r| - 2, 0)
};

PresentationStats presentation_stats(const Presentation& p);

// Splits every relator longer than 3 with fresh generators, so that all
// relators have length <= 3.
Presentation triangularize(const Presentation& p);

// Wedge of triangulated circles (three edges per generator) with one disk
// per relator. Marks: vertex "P", loop "a<i>" per generator.
MarkedComplex presentation_to_complex(const Presentation& p);

// Generators are the edges off a breadth-first spanning tree rooted at
// vertex 0, ordered like x.edges(); one relator per triangle.
Presentation complex_to_presentation(const Simplex2Complex& x);

Presentation tietze_simplify(const Presentation& p);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // factors > 1, divisibility chain

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianization(const Presentation& p);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

// "<a1, a2 | a1^2, a1 a2 a1^-1 a2^-1>". Generator names are arbitrary
// identifiers; a relator is a whitespace-separated product of name or
// name^k tokens.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

}  // namespace sk
