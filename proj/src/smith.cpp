#include "hochlab/smith.hpp"

#include <stdexcept>

namespace hochlab {

std::vector<mpz_class> invariant_factors(const SparseMatrix& m, std::size_t cap) {
  const std::size_t rows = m.rows, cols = m.cols;
  if (rows * cols > cap) throw std::length_error("matrix too large for Smith normal form");
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, c] : m.columns[j]) {
      if (c.get_den() != 1) throw std::domain_error("Smith normal form needs integer entries");
      a[i][j] = c.get_num();
    }

  std::vector<mpz_class> diagonal;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the nonzero entry of least absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // Enforce divisibility of the rest of the block by the pivot.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    diagonal.push_back(abs(a[t][t]));
    ++t;
  }
  return diagonal;
}

IntegralHomology integral_homology(const SparseMatrix& in, const SparseMatrix& out, int dimension) {
  IntegralHomology h;
  const auto d_out = invariant_factors(out);
  const auto d_in = invariant_factors(in);
  h.free_rank = dimension - static_cast<int>(d_out.size()) - static_cast<int>(d_in.size());
  for (const auto& d : d_in)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

}  // namespace hochlab
