#pragma once

#include <string>

#include "bihom/algebra.hpp"

namespace bihom {

// Interchange format: UTF-8 JSON with every scalar written as an exact
// fraction string (-?[0-9]+(/[1-9][0-9]*)?), never a floating literal.
//
//   {
//     "name": "affine3",
//     "dim": 3,
//     "parities": [0, 0, 1],
//     "alpha": [["3","0","0"],["0","1","0"],["0","0","2"]],
//     "beta":  [["3","0","0"],["0","1","0"],["0","0","-2"]],
//     "product": [ {"i":0,"j":1,"k":0,"value":"1"}, ... ],
//     "kind_hint": "lie"            // optional: "associative" | "lie"
//   }
//
// product lists mu(e_i,e_j) = sum_k value * e_k sparsely; omitted entries
// are zero.  Serialization is canonical (sorted entries, canonical
// fractions, two-space indent), so parse . serialize round-trips to the
// byte.

/// Throws ParseError for malformed JSON or fraction literals and
/// ValidationError for well-formed documents describing invalid
/// structures (parity violations, out-of-range indices, shape errors).
BiHomSuperalgebra parse_algebra_string(const std::string& text);
BiHomSuperalgebra parse_algebra_file(const std::string& path);

std::string serialize_algebra_string(const BiHomSuperalgebra& a);
void serialize_algebra_file(const BiHomSuperalgebra& a, const std::string& path);

/// Plain square-table map document {"dim": n, "entries": [[...]]}, read
/// against the graded space of the algebra it will act on.
EvenMap parse_map_file(const std::string& path, const GradedSpace& space);

std::string kind_to_string(AlgebraKind kind);

}  // namespace bihom
