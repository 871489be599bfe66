#include "singkit/linalg.hpp"

namespace singkit {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    FieldElement inv = m[row][c].inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!m[row][k].is_zero()) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      FieldElement f = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).size();
}

std::vector<Vector> kernel(const Matrix& m, std::size_t cols) {
  Matrix r = m;
  auto pivots = row_reduce(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  std::size_t cols = m.empty() ? 0 : m.front().size();
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b.at(i));
  auto pivots = row_reduce(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector v(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = aug[i][cols];
  return v;
}

}  // namespace singkit
