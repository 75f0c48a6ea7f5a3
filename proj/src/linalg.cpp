#include "linalg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bk {

Matrix rref(const Field& F, Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) fail(errc::shape_mismatch, "ragged matrix");

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const felem inv = F.inv(rows[pivot_row][col]);
    for (auto& v : rows[pivot_row]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const felem c = rows[r][col];
      for (std::size_t j = 0; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[pivot_row][j]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::uint32_t rank_of(const Field& F, const Matrix& rows) {
  return static_cast<std::uint32_t>(rref(F, rows).size());
}

bool in_rowspace(const Field& F, const Matrix& rrefm, Row w) {
  for (const auto& r : rrefm) {
    std::size_t lead = 0;
    while (lead < r.size() && r[lead] == 0) ++lead;
    if (lead == r.size()) continue;
    if (w[lead] == 0) continue;
    const felem c = w[lead];
    for (std::size_t j = 0; j < w.size(); ++j)
      w[j] = F.sub(w[j], F.mul(c, r[j]));
  }
  return std::all_of(w.begin(), w.end(), [](felem v) { return v == 0; });
}

Matrix kernel(const Field& F, const Matrix& rows, std::size_t ncols) {
  Matrix rr = rref(F, rows);
  std::vector<std::size_t> pivot_col(rr.size());
  std::vector<std::uint8_t> is_pivot(ncols, 0);
  for (std::size_t t = 0; t < rr.size(); ++t) {
    std::size_t lead = 0;
    while (lead < ncols && rr[t][lead] == 0) ++lead;
    pivot_col[t] = lead;
    is_pivot[lead] = 1;
  }
  Matrix basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    Row x(ncols, 0);
    x[c] = F.one();
    for (std::size_t t = 0; t < rr.size(); ++t)
      x[pivot_col[t]] = F.neg(rr[t][c]);
    basis.push_back(std::move(x));
  }
  return rref(F, std::move(basis));
}

felem dot(const Field& F, const Row& a, const Row& b) {
  if (a.size() != b.size()) fail(errc::shape_mismatch, "dot length mismatch");
  felem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

}  // namespace bk
