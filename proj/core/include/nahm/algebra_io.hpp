#pragma once

#include "nahm/lie_algebra.hpp"

namespace nahm {

/// Thrown for malformed documents, out-of-range indices, and structure
/// constants that fail the Jacobi identity (message names the first failing
/// quadruple).
class AlgebraIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON schema:
///   { "name": text, "dim": count,
///     "brackets": [ { "i": index, "j": index,
///                     "coeffs": [ { "k": index, "num": int, "den": int } ] } ] }
/// meaning [b_i, b_j] = sum (num/den) b_k with 1-based indices and i < j;
/// the antisymmetric completion is implied.
LieAlgebra parse_algebra(const std::string& json_text);
LieAlgebra parse_algebra_file(const std::string& path);
/// Parses the document structure but skips the Jacobi gate, so validators can
/// report the failing quadruples instead of rejecting outright.
LieAlgebra parse_algebra_unchecked(const std::string& json_text);
LieAlgebra parse_algebra_file_unchecked(const std::string& path);
std::string emit_algebra(const LieAlgebra& g);

/// "catalog:NAME" or a path to a JSON document.
LieAlgebra load_algebra(const std::string& spec);

}  // namespace nahm
