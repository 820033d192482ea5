#include "hochlab/hh.hpp"

#include <stdexcept>

#include "hochlab/modular.hpp"

namespace hochlab {

Instance::Instance(std::string n, DGCoalgebra c)
    : name(std::move(n)),
      coalgebra(std::move(c)),
      dual(coalgebra),
      bar(omega_bar(coalgebra)),
      tilde(omega_tilde(coalgebra)),
      bar_tilde(tilde_A(bar)) {}

std::unique_ptr<Instance> Instance::load(const std::string& directory, const std::string& name) {
  return std::make_unique<Instance>(name, DGCoalgebra::load(directory + "/" + name + ".json"));
}

AlgebraCochainWindow cobar_hochschild_window(const AlgebraMap& coefficients, int lo, int hi, int max_level) {
  AlgebraWindowParams p;
  p.lo = lo;
  p.hi = hi;
  p.normalized = true;
  p.level = AlgebraWindowParams::Level::SourceDegree;
  p.max_level = max_level;
  p.value_min = 0;
  p.letter_min = 1;
  p.letter_max = std::max(1, max_level - 1);
  p.letter_bounds.max_length = std::max(1, max_level);
  p.value_bounds.max_length = std::max(1, max_level + hi + 1);
  return algebra_window(coefficients, p);
}

AlgebraCochainWindow cobar_hochschild_window(const Instance& inst, int lo, int hi, int max_level) {
  return cobar_hochschild_window(AlgebraMap::identity(inst.bar), lo, hi, max_level);
}

AlgebraCochainWindow dual_hochschild_window(const Instance& inst, int lo, int hi, bool normalized, int max_length) {
  const int top = inst.coalgebra.max_degree();
  AlgebraWindowParams p;
  p.lo = lo;
  p.hi = hi;
  p.normalized = normalized;
  p.level = AlgebraWindowParams::Level::Length;
  p.value_min = -top;
  p.value_max = 0;
  p.letter_min = -top;
  p.letter_max = normalized ? -1 : 0;
  // Normalized words have letters of bar degree <= -1, so their length is
  // bounded by the bar degree range.
  p.max_level = normalized ? top + hi + 1 : max_length;
  return algebra_window(AlgebraMap::identity(inst.dual), p);
}

AlgebraCochainWindow dual_hochschild_window(const AlgebraMap& coefficients, int letter_top, int value_top, int lo,
                                            int hi) {
  AlgebraWindowParams p;
  p.lo = lo;
  p.hi = hi;
  p.normalized = true;
  p.level = AlgebraWindowParams::Level::Length;
  p.value_min = -value_top;
  p.value_max = 0;
  p.letter_min = -letter_top;
  p.letter_max = -1;
  p.max_level = value_top + hi + 1;
  return algebra_window(coefficients, p);
}

Side parse_side(const std::string& name) {
  if (name == "algebra") return Side::Algebra;
  if (name == "coalgebra") return Side::Coalgebra;
  if (name == "cobar") return Side::Cobar;
  if (name == "dual") return Side::Dual;
  throw std::invalid_argument("unknown side: " + name);
}

namespace {

RankTable finite_ranks(const std::string& name, const CochainWindow& w, std::uint32_t prime) {
  RankTable t;
  t.complex = name;
  if (prime) t.complex += " over F_" + std::to_string(prime);
  for (int n = w.lo(); n <= w.hi(); ++n) t.dims.push_back(w.dim(n));
  for (int n = w.lo() + 1; n < w.hi(); ++n) {
    int r;
    if (prime)
      r = w.dim(n) - static_cast<int>(modular::rank(w.window().differential(n), prime)) -
          static_cast<int>(modular::rank(w.window().differential(n + 1), prime));
    else
      r = homology(w.window(), n).dimension();
    t.rows.push_back({n, r, r, true});
  }
  return t;
}

RankTable filtered_ranks(const std::string& name, const CochainWindow& w, int level) {
  RankTable t;
  t.complex = name;
  for (int n = w.lo(); n <= w.hi(); ++n) t.dims.push_back(w.dim(n));
  for (int n = w.lo() + 1; n < w.hi(); ++n) {
    auto s = stabilized_classes(w.complex(), n, level, 1);
    t.rows.push_back({n, s.classes.dimension(), s.near_dimension, s.stable()});
  }
  return t;
}

}  // namespace

RankTable hh_ranks(const Instance& inst, Side side, int lo, int hi, int lmax, int ncap, std::uint32_t prime) {
  if (prime && !modular::is_supported_prime(prime))
    throw std::invalid_argument("unsupported prime " + std::to_string(prime));
  if (prime && (side == Side::Algebra || side == Side::Cobar))
    throw std::invalid_argument("prime field ranks are available for the coalgebra and dual sides");
  switch (side) {
    case Side::Algebra: {
      auto w = cobar_hochschild_window(inst, lo, hi, ncap + 2);
      return filtered_ranks("normalized C*(Omega-bar C; Omega-bar C)", *w.window, ncap);
    }
    case Side::Coalgebra: {
      auto w = normalized_coalgebra_window(inst.coalgebra, inst.bar, lo, hi);
      return finite_ranks("normalized C*(C; C)", *w.window, prime);
    }
    case Side::Cobar: {
      auto w = coalgebra_window(inst.coalgebra, inst.tilde, lo, hi, lmax + 2);
      return filtered_ranks("C*(C; C) with values in Omega~ C", *w.window, lmax);
    }
    case Side::Dual: {
      auto w = dual_hochschild_window(inst, lo, hi, true);
      return finite_ranks("normalized C*(C^v; C^v)", *w.window, prime);
    }
  }
  throw std::logic_error("hh_ranks: side");
}

InducedMap map_on_classes(const StableClasses& source, const StableClasses& target,
                          const std::function<SparseVector(const SparseVector&)>& f) {
  std::vector<SparseVector> images;
  for (const auto& r : source.basis.representatives) images.push_back(f(r));
  return induced_map(source, target, images);
}

}  // namespace hochlab
