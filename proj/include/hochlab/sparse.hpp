#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hochlab/linear.hpp"

namespace hochlab {

// Sparse vector over Q with strictly increasing indices and no zero entries.
using SparseVector = std::vector<std::pair<int, Scalar>>;

SparseVector sparse_from_map(const std::map<int, Scalar>& entries);
SparseVector sparse_axpy(const SparseVector& x, const Scalar& a, const SparseVector& y);  // x + a y
Scalar sparse_entry(const SparseVector& v, int index);

// Column-stored sparse matrix.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVector> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  SparseVector apply(const SparseVector& x) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Row echelon basis of a subspace.  Each stored vector is scaled to have
// leading entry 1 at its pivot (its smallest index), and carries a tag
// recording which combination of inserted "tracked" vectors it stands for.
class Echelon {
 public:
  struct Reduction {
    SparseVector residual;
    SparseVector tag;  // accumulated tag of the rows that were subtracted
  };

  // Reduces v against the stored rows.
  Reduction reduce(const SparseVector& v) const;
  // Inserts v with the given tag.  Returns false when v lies in the span.
  bool insert(const SparseVector& v, const SparseVector& tag = {});
  // Inserts an already reduced nonzero vector.
  void insert_reduced(Reduction r);

  // Adds a row whose pivot is not yet used; the row is scaled to leading 1.
  void append(SparseVector row, SparseVector tag);

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<SparseVector>& tags() const { return tags_; }
  bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

 private:
  std::unordered_map<int, std::size_t> pivot_row_;
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> tags_;
};

std::size_t rank(const SparseMatrix& m);
// Basis of the kernel of m (vectors indexed by columns).
std::vector<SparseVector> kernel(const SparseMatrix& m);

}  // namespace hochlab
