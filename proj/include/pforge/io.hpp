#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pforge/algebra.hpp"
#include "pforge/graded.hpp"
#include "pforge/lie.hpp"
#include "pforge/linalg.hpp"
#include "pforge/ncalg.hpp"

/// JSON wire format. Every reader rejects unknown keys, and every writer
/// emits the canonical form, so read(write(x)) == x and write(read(s)) is
/// a fixed point after one pass.
namespace pforge::io {

using Json = nlohmann::json;

/// Fails with parse-error naming line and column.
Json parse_text(std::string_view text);
/// "-" reads standard input.
Json read_file(const std::string& path);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

/// Fails with unknown-field on any key outside `allowed` and missing-field
/// for absent `required` keys.
void expect_keys(const Json& j, const std::vector<std::string>& allowed,
                 const std::vector<std::string>& required, const std::string& where);

/// Accepts integers and strings such as "-3/4".
Rational to_rational(const Json& j);
/// Integers that fit in 64 bits as numbers, everything else as a string.
Json from_rational(const Rational& q);

Vector to_vector(const Json& j, std::size_t dim);
Json from_vector(const Vector& v);
Matrix to_matrix(const Json& j, std::size_t rows, std::size_t cols);
Json from_matrix(const Matrix& m);

Poly to_poly(const Json& j, std::size_t nvars);
std::vector<Poly> to_polys(const Json& j, std::size_t nvars);
Json from_polys(const std::vector<Poly>& ps);

/// {"n", "grade", "terms": [{"idx", "coeff"}]}. Unsorted idx is normalized
/// with its permutation sign.
Multivector to_multivector(const Json& j);
Json from_multivector(const Multivector& u);
/// Same layout with "kind": "form".
Form to_form(const Json& j);
Json from_form(const Form& a);

/// {"name"?, "dim", "mult", "unit"?}
AlgebraSC to_algebra(const Json& j);
Json from_algebra(const AlgebraSC& a);
/// {"name"?, "dim", "c"} with c[i][j] the coordinates of [e_i, e_j].
LieAlgebraSC to_lie(const Json& j);
Json from_lie(const LieAlgebraSC& g);

/// List of rows.
Subspace to_subspace(const Json& j, std::size_t dim);
Json from_subspace(const Subspace& s);
/// List of square matrices, each a list of rows.
EndoList to_endos(const Json& j, std::size_t dim);
Json from_endos(const EndoList& e);

/// "1,-1/2,0" with exactly `dim` entries.
Vector parse_point(std::string_view text, std::size_t dim);

}  // namespace pforge::io
