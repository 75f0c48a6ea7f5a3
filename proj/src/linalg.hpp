#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"

namespace bk {

using Row = std::vector<felem>;
using Matrix = std::vector<Row>;

// Reduced row echelon form with zero rows dropped; canonical for a rowspace.
Matrix rref(const Field& F, Matrix rows);
std::uint32_t rank_of(const Field& F, const Matrix& rows);
// w reduced against an RREF matrix; true if it lands on zero.
bool in_rowspace(const Field& F, const Matrix& rrefm, Row w);
// RREF basis of the right kernel {x : rows * x = 0} in F^ncols.
Matrix kernel(const Field& F, const Matrix& rows, std::size_t ncols);
felem dot(const Field& F, const Row& a, const Row& b);

}  // namespace bk
