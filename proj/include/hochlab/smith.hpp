#pragma once

#include <vector>

#include "hochlab/sparse.hpp"

namespace hochlab {

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, all
// positive.  Throws on non-integral entries or when rows * cols exceeds cap.
std::vector<mpz_class> invariant_factors(const SparseMatrix& m, std::size_t cap = 1u << 20);

struct IntegralHomology {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors greater than 1
};

// H = ker(out) / im(in) for an integer complex  in: C_{n+1} -> C_n,  out: C_n -> C_{n-1}.
IntegralHomology integral_homology(const SparseMatrix& in, const SparseMatrix& out, int dimension);

}  // namespace hochlab
