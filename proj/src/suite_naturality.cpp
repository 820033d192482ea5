#include <sstream>

#include "hochlab/suites.hpp"

namespace hochlab {

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense dense_columns(const InducedMap& m) {
  Dense out(m.target_dimension, std::vector<Scalar>(m.source_dimension));
  for (int j = 0; j < m.source_dimension; ++j)
    for (const auto& [i, c] : m.columns[j]) out[i][j] = c;
  return out;
}

// Solves Q X = P for square invertible Q by Gauss-Jordan elimination.
std::optional<Dense> solve(Dense Q, Dense P) {
  const std::size_t k = Q.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && sgn(Q[pivot][col]) == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(Q[pivot], Q[col]);
    std::swap(P[pivot], P[col]);
    const Scalar inv = 1 / Q[col][col];
    for (auto& x : Q[col]) x *= inv;
    for (auto& x : P[col]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || sgn(Q[r][col]) == 0) continue;
      const Scalar f = Q[r][col];
      for (std::size_t c = 0; c < k; ++c) Q[r][c] -= f * Q[col][c];
      for (std::size_t c = 0; c < P[r].size(); ++c) P[r][c] -= f * P[col][c];
    }
  }
  return P;
}

SparseVector combine(const std::vector<SparseVector>& vectors, const std::vector<Scalar>& coefficients) {
  std::map<int, Scalar> out;
  for (std::size_t j = 0; j < vectors.size(); ++j)
    if (sgn(coefficients[j]) != 0)
      for (const auto& [i, c] : vectors[j]) out[i] += coefficients[j] * c;
  return sparse_from_map(out);
}

SparseVector subtract(const SparseVector& a, const SparseVector& b) {
  std::map<int, Scalar> out;
  for (const auto& [i, c] : a) out[i] += c;
  for (const auto& [i, c] : b) out[i] -= c;
  return sparse_from_map(out);
}

}  // namespace

void suite_naturality(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto source = Instance::load(cfg.catalogue_dir, entry);
  auto target = Instance::load(cfg.catalogue_dir, entry + "_acyclic");
  const DGCoalgebra& C = source->coalgebra;
  const DGCoalgebra& D = target->coalgebra;
  const CoalgebraMap f = CoalgebraMap::by_names(C, D);

  checks.run("coalgebra-map", "f is a morphism of DG coalgebras", [&] {
    for (const auto& law : validate(f).checks)
      if (!law.passed) return law.law + ": " + law.witness;
    return std::string();
  });

  const AlgebraMap bar_f = cobar_map(f, source->bar, target->bar);
  const AlgebraMap dual_f = dual_map(f, source->dual, target->dual);
  const int lo = -4, hi = 4, N = 6;
  auto top_c = cobar_hochschild_window(*source, lo, hi, N + 2);
  auto top_d = cobar_hochschild_window(*target, lo, hi, N + 2);
  auto top_mid = cobar_hochschild_window(bar_f, lo, hi, N + 2);
  auto bottom = dual_hochschild_window(dual_f, D.max_degree(), C.max_degree(), lo, hi);

  checks.run("square", "the naturality square commutes on homology", [&] {
    for (int n = lo + 1; n < hi; ++n) {
      auto sc = stabilized_classes(top_c.window->complex(), n, N, 1);
      auto sd = stabilized_classes(top_d.window->complex(), n, N, 1);
      auto sm = stabilized_classes(top_mid.window->complex(), n, N, 1);
      for (const auto* s : {&sc, &sd, &sm})
        if (!s->stable()) throw SaturationError("degree " + std::to_string(n) + " has not stabilized");
      auto push = map_on_classes(sc.classes, sm.classes, [&](const SparseVector& v) {
        return top_mid.vector(n, postcompose(bar_f, top_c.cochain(n, v)));
      });
      auto pull = map_on_classes(sd.classes, sm.classes, [&](const SparseVector& v) {
        return top_mid.vector(n, precompose(bar_f, top_d.cochain(n, v)));
      });
      if (!push.isomorphism() || !pull.isomorphism()) {
        std::ostringstream out;
        out << "degree " << n << ": the cobar maps are not isomorphisms on homology (" << push.verdict() << ", "
            << pull.verdict() << ")";
        return out.str();
      }
      // b = pull^-1 push a.
      auto coefficients = solve(dense_columns(pull), dense_columns(push));
      if (!coefficients) return "degree " + std::to_string(n) + ": singular comparison matrix";
      const auto bottom_classes = all_classes(bottom.window->window(), n);
      std::vector<SparseVector> down_d;
      for (const auto& r : sd.classes.basis.representatives)
        down_d.push_back(bottom.vector(n, postcompose(dual_f, D_C(D, top_d.cochain(n, r)))));
      const auto& reps = sc.classes.basis.representatives;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        auto left = bottom.vector(n, precompose(dual_f, D_C(C, top_c.cochain(n, reps[i]))));
        std::vector<Scalar> column;
        for (const auto& row : *coefficients) column.push_back(row[i]);
        auto coords = bottom_classes.reference_coordinates(subtract(left, combine(down_d, column)));
        if (!coords) return "degree " + std::to_string(n) + ": the difference is not a cycle";
        if (!coords->empty()) return "degree " + std::to_string(n) + ": class " + std::to_string(i) + " differs";
      }
    }
    return std::string();
  });
}

}  // namespace hochlab
