#include "hochlab/gerstenhaber.hpp"

#include <memory>
#include <sstream>
#include <tuple>

namespace hochlab {

namespace {

using Op = std::function<std::optional<SparseVector>(int, int, int, int)>;

SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Scalar& factor) {
  std::map<int, Scalar> out;
  for (const auto& [i, c] : a) out[i] += c;
  for (const auto& [i, c] : b) out[i] += factor * c;
  return sparse_from_map(out);
}

// Bilinear extension of a basis operation to coordinate vectors.
std::optional<SparseVector> extend(const Op& op, int n, const SparseVector& u, int m, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      auto r = op(n, i, m, j);
      if (!r) return std::nullopt;
      out = add_scaled(out, *r, a * b);
    }
  return out;
}

SparseVector unit(int i) { return SparseVector{{i, Scalar(1)}}; }

std::string name_triple(int n, int i, int m, int j, int k = 0, int l = -1) {
  std::ostringstream out;
  out << "x" << n << "." << i << ", x" << m << "." << j;
  if (l >= 0) out << ", x" << k << "." << l;
  return out.str();
}

struct Tally {
  explicit Tally(std::string name) { law.name = std::move(name); }
  GerstenhaberReport::Law law;
  void count(bool passed, const std::function<std::string()>& witness) {
    ++law.instances;
    if (passed) return;
    if (law.failures++ == 0) law.witness = witness();
  }
};

}  // namespace

bool GerstenhaberReport::ok() const {
  for (const auto& l : laws)
    if (l.failures) return false;
  return true;
}

std::string GerstenhaberReport::summary() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : laws) {
    if (!l.failures) continue;
    out << (first ? "" : "; ") << l.name << " fails on " << l.failures << " of " << l.instances << " (first at "
        << l.witness << ")";
    first = false;
  }
  return out.str();
}

GerstenhaberReport verify_gerstenhaber(const HomologyOperations& ops) {
  Tally commutative("graded commutativity"), antisymmetric("antisymmetry"), jacobi("Jacobi identity"),
      derivation("derivation law");
  std::vector<std::pair<int, int>> basis;  // (degree, index)
  for (const auto& [n, d] : ops.dims)
    for (int i = 0; i < d; ++i) basis.emplace_back(n, i);

  for (const auto& [n, i] : basis)
    for (const auto& [m, j] : basis) {
      auto xy = ops.cup(n, i, m, j), yx = ops.cup(m, j, n, i);
      if (xy && yx)
        commutative.count(add_scaled(*xy, *yx, -parity_sign(static_cast<long>(n) * m)).empty(),
                          [&] { return name_triple(n, i, m, j); });
      auto b1 = ops.bracket(n, i, m, j), b2 = ops.bracket(m, j, n, i);
      if (b1 && b2)
        antisymmetric.count(add_scaled(*b1, *b2, parity_sign(static_cast<long>(n + 1) * (m + 1))).empty(),
                            [&] { return name_triple(n, i, m, j); });
    }

  for (const auto& [n, i] : basis)
    for (const auto& [m, j] : basis)
      for (const auto& [k, l] : basis) {
        const auto x = unit(i), y = unit(j), z = unit(l);
        // {x,{y,z}}, {y,{z,x}}, {z,{x,y}} with Koszul weights.
        auto yz = ops.bracket(m, j, k, l), zx = ops.bracket(k, l, n, i), xy = ops.bracket(n, i, m, j);
        if (yz && zx && xy) {
          auto t1 = extend(ops.bracket, n, x, m + k + 1, *yz);
          auto t2 = extend(ops.bracket, m, y, k + n + 1, *zx);
          auto t3 = extend(ops.bracket, k, z, n + m + 1, *xy);
          if (t1 && t2 && t3) {
            SparseVector sum = add_scaled(SparseVector{}, *t1, parity_sign(static_cast<long>(n + 1) * (k + 1)));
            sum = add_scaled(sum, *t2, parity_sign(static_cast<long>(m + 1) * (n + 1)));
            sum = add_scaled(sum, *t3, parity_sign(static_cast<long>(k + 1) * (m + 1)));
            jacobi.count(sum.empty(), [&] { return name_triple(n, i, m, j, k, l); });
          }
        }
        // {x, yz} = {x,y} z + (-1)^{|y|(|x|+1)} y {x,z}
        auto yz_cup = ops.cup(m, j, k, l);
        auto x_y = ops.bracket(n, i, m, j), x_z = ops.bracket(n, i, k, l);
        if (yz_cup && x_y && x_z) {
          auto lhs = extend(ops.bracket, n, x, m + k, *yz_cup);
          auto r1 = extend(ops.cup, n + m + 1, *x_y, k, z);
          auto r2 = extend(ops.cup, m, y, n + k + 1, *x_z);
          if (lhs && r1 && r2) {
            auto diff = add_scaled(*lhs, *r1, -1);
            diff = add_scaled(diff, *r2, -parity_sign(static_cast<long>(m) * (n + 1)));
            derivation.count(diff.empty(), [&] { return name_triple(n, i, m, j, k, l); });
          }
        }
      }

  GerstenhaberReport report;
  for (auto* t : {&commutative, &antisymmetric, &jacobi, &derivation}) report.laws.push_back(t->law);
  return report;
}

HomologyOperations window_operations(const AlgebraCochainWindow& w, const Algebra& algebra) {
  struct State {
    std::map<int, StableClasses> classes;
    std::map<int, std::vector<AlgebraCochain>> reps;
    std::map<std::tuple<int, int, int, int, bool>, std::optional<SparseVector>> cache;
  };
  auto state = std::make_shared<State>();
  const CochainWindow& cw = *w.window;
  HomologyOperations ops;
  for (int n = cw.lo() + 1; n < cw.hi(); ++n) {
    auto classes = all_classes(cw.window(), n);
    for (const auto& r : classes.basis.representatives) state->reps[n].push_back(w.cochain(n, r).memoized());
    ops.dims[n] = classes.dimension();
    state->classes.emplace(n, std::move(classes));
  }
  auto compute = [state, &w, &algebra](int n, int i, int m, int j, bool is_bracket) -> std::optional<SparseVector> {
    const auto key = std::make_tuple(n, i, m, j, is_bracket);
    if (auto it = state->cache.find(key); it != state->cache.end()) return it->second;
    const int target = n + m + (is_bracket ? 1 : 0);
    std::optional<SparseVector> result;
    auto it = state->classes.find(target);
    if (it != state->classes.end()) {
      const auto& f = state->reps.at(n).at(i);
      const auto& g = state->reps.at(m).at(j);
      auto value = is_bracket ? gerstenhaber_bracket(algebra, f, g) : algebra_cup(algebra, f, g);
      auto coords = it->second.reference_coordinates(w.vector(target, value));
      if (!coords) throw std::logic_error("product of cycles is not a cycle in degree " + std::to_string(target));
      result = it->second.basis.solve(*coords);
      if (!result) throw std::logic_error("class outside the homology basis in degree " + std::to_string(target));
    }
    state->cache.emplace(key, result);
    return result;
  };
  ops.cup = [compute](int n, int i, int m, int j) { return compute(n, i, m, j, false); };
  ops.bracket = [compute](int n, int i, int m, int j) { return compute(n, i, m, j, true); };
  return ops;
}

}  // namespace hochlab
