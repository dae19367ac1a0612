#pragma once

#include <json.hpp>

#include "sk/bounds.hpp"
#include "sk/census.hpp"
#include "sk/colored_graph.hpp"
#include "sk/complex.hpp"
#include "sk/error.hpp"
#include "sk/homology.hpp"
#include "sk/metric.hpp"
#include "sk/presentation.hpp"

namespace sk {

// Insertion-ordered, so that output bytes depend only on the input.
using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json mpz_json(const mpz_class& v);
mpz_class mpz_from_json(const Json& j);
// {"lo": "...", "hi": "..."}, 50 significant digits rounded outward.
Json interval_json(const Interval& v);

// {"vertex_count", "triangles", "extra_edges", "marks": {"vertices", "loops"}}
Json complex_json(const MarkedComplex& x);
// Shape errors raise ParseError; content errors keep the validation codes.
MarkedComplex complex_from_json(const Json& j);

// {s0, s1, s2, euler, betti, torsion}
Json invariants_json(const Simplex2Complex& x);

// {"black", "A", "B"} with sparse rows.
Json colored_graph_json(const ColoredGraph& g);
ColoredGraph colored_graph_from_json(const Json& j);

Json certificate_json(const BoundCertificate& c);
Json census_entry_json(const CensusEntry& e);
Json systole_json(const SystoleResult& s);
Json error_json(const Error& e);

}  // namespace sk
