// Text formats: matrices, grafts, bouquets, polynomial text/JSON, and
// CLI subset lists.  Readers throw ParseError with 1-based line/column.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "twupoly/bouquet.hpp"
#include "twupoly/graft.hpp"
#include "twupoly/matrix.hpp"
#include "twupoly/polynomial.hpp"
#include "twupoly/twuality.hpp"

namespace twupoly {

// Matrix text format:
//   field gf2 | field gfp <p> | field q
//   n <size>
//   <n rows of n whitespace-separated entries>
SquareMatrix read_matrix(std::istream& in);
SquareMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const SquareMatrix& m);

// Graft text format:
//   vertices: a b c d
//   edges: a-b b-c      (may be empty or missing)
//   loops: b d          (marked vertices; may be empty or missing)
Graft read_graft(std::istream& in);
Graft read_graft_file(const std::string& path);
void write_graft(std::ostream& out, const Graft& g);

// Bouquet text format:
//   word: a b a c b c
//   twisted: b          (may be empty or missing)
Bouquet read_bouquet(std::istream& in);
Bouquet read_bouquet_file(const std::string& path);
void write_bouquet(std::ostream& out, const Bouquet& b);

/// JSON object {"operator": ..., "field": ..., "n": ..., "coefficients": [...]}.
std::string polynomial_json(const IntPolynomial& p, Twuality op, const std::string& field_tag,
                            int n);
/// Reads the "coefficients" array back into a polynomial.
IntPolynomial polynomial_from_json(const std::string& text);

/// Comma-separated 0-based positions; "-" is the empty set.
std::uint64_t parse_position_set(const std::string& text, int universe_size);

}  // namespace twupoly
