#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hochlab/cochains.hpp"
#include "hochlab/homology.hpp"
#include "hochlab/parallel.hpp"

namespace hochlab {

// Window of a complex given on a basis of keys.  With drop_outside the window
// is a quotient: terms leaving the basis are discarded, which is sound when
// the discarded keys span a subcomplex.
template <class Key>
ComplexWindow assemble_window(int lo, int hi, const std::function<std::vector<Key>(int)>& basis,
                              const std::function<Linear<Key>(const Key&)>& d, bool drop_outside) {
  ComplexWindow w;
  w.lo = lo;
  w.hi = hi;
  std::map<int, std::vector<Key>> keys;
  std::map<int, std::map<Key, int>> index;
  for (int n = lo; n <= hi; ++n) {
    keys[n] = basis(n);
    auto& ix = index[n];
    for (std::size_t i = 0; i < keys[n].size(); ++i) ix.emplace(keys[n][i], static_cast<int>(i));
    w.dims[n] = static_cast<int>(keys[n].size());
  }
  for (int n = lo + 1; n <= hi; ++n) {
    SparseMatrix m(w.dims[n - 1], w.dims[n]);
    const auto& rows = index[n - 1];
    parallel_for(keys[n].size(), [&](std::size_t j) {
      std::map<int, Scalar> column;
      for (const auto& [k, c] : d(keys[n][j])) {
        auto it = rows.find(k);
        if (it == rows.end()) {
          if (drop_outside) continue;
          throw SaturationError("differential leaves the window in degree " + std::to_string(n - 1));
        }
        column[it->second] += c;
      }
      m.columns[j] = sparse_from_map(column);
    });
    w.d.emplace(n, std::move(m));
  }
  return w;
}

}  // namespace hochlab
