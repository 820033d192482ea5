#include <sstream>

#include "hochlab/assemble.hpp"
#include "hochlab/suites.hpp"

namespace hochlab {

namespace {

std::string square_witness(const ComplexWindow& w) {
  auto bad = w.square_failures();
  if (bad.empty()) return "";
  std::ostringstream out;
  out << "d o d != 0 entering degrees";
  for (int n : bad) out << " " << n;
  return out.str();
}

// Bar words over `letters` of length <= max_length, grouped by bar degree in [lo, hi].
std::map<int, std::vector<BarWord>> bar_basis(const Algebra& A, const std::vector<Word>& letters, int max_length,
                                              int lo, int hi) {
  std::map<int, std::vector<BarWord>> out;
  bool positive = true;
  for (const auto& a : letters) positive = positive && A.degree(a) + 1 > 0;
  BarWord w;
  std::function<void(int)> grow = [&](int degree) {
    if (degree >= lo && degree <= hi) out[degree].push_back(w);
    if (static_cast<int>(w.size()) == max_length) return;
    for (const auto& a : letters) {
      const int next = degree + A.degree(a) + 1;
      if (positive && next > hi) continue;
      w.push_back(a);
      grow(next);
      w.pop_back();
    }
  };
  grow(0);
  return out;
}

std::vector<Word> algebra_letters(const Algebra& A, int lo, int hi, int max_length, bool with_unit) {
  std::vector<Word> out;
  BasisBounds b;
  b.max_length = max_length;
  for (int d = lo; d <= hi; ++d)
    for (const auto& a : A.basis(d, b))
      if (with_unit || !A.is_unit(a)) out.push_back(a);
  return out;
}

template <class Key>
std::function<std::vector<Key>(int)> from_groups(std::map<int, std::vector<Key>> groups) {
  auto shared = std::make_shared<std::map<int, std::vector<Key>>>(std::move(groups));
  return [shared](int n) {
    auto it = shared->find(n);
    return it == shared->end() ? std::vector<Key>{} : it->second;
  };
}

}  // namespace

void suite_signs(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  const int lo = cfg.lo, hi = cfg.hi, L = cfg.lmax, N = cfg.ncap;
  const int top = C.max_degree();
  const std::string anchor = "differentials square to zero";

  auto check_window = [&](const std::string& name, const std::function<ComplexWindow()>& build) {
    checks.run("d-squared/" + name, anchor, [&] { return square_witness(build()); });
  };

  // Bar constructions over the dual algebra and over the cobar algebra.
  struct BarCase {
    std::string name;
    const Algebra* algebra;
    std::vector<Word> letters;
  };
  std::vector<BarCase> bars{{"dual", &inst->dual, algebra_letters(inst->dual, -top, 0, 1, true)},
                            {"cobar", &inst->bar, algebra_letters(inst->bar, 0, hi - 1, std::max(1, hi), true)}};
  for (const auto& bc : bars) {
    const Algebra* A = bc.algebra;
    check_window("bar-" + bc.name, [&] {
      return assemble_window<BarWord>(lo, hi, from_groups(bar_basis(*A, bc.letters, L, lo, hi)),
                                      [A](const BarWord& w) { return bar_differential(*A, w); }, false);
    });
    std::vector<Word> reduced;
    for (const auto& a : bc.letters)
      if (!A->is_unit(a)) reduced.push_back(a);
    check_window("normalized-bar-" + bc.name, [&] {
      return assemble_window<BarWord>(lo, hi, from_groups(bar_basis(*A, reduced, L, lo, hi)),
                                      [A](const BarWord& w) { return normalized_bar_differential(*A, w); }, false);
    });
  }
  check_window("two-sided-bar-dual", [&] {
    std::map<int, std::vector<TwoSidedWord>> groups;
    const Algebra& A = inst->dual;
    auto words = bar_basis(A, bars[0].letters, L, lo - 2 * top, hi);
    for (const auto& [deg, ws] : words)
      for (const auto& w : ws)
        for (int m = 0; m < C.size(); ++m)
          for (int r = 0; r < C.size(); ++r) {
            const int total = deg - C.degree(m) - C.degree(r);
            if (total >= lo && total <= hi) groups[total].push_back(TwoSidedWord{Word{m}, w, Word{r}});
          }
    return assemble_window<TwoSidedWord>(lo, hi, from_groups(groups),
                                         [&A](const TwoSidedWord& t) { return two_sided_bar_differential(A, t); },
                                         false);
  });

  // Cobar constructions; the differential never shortens words, so longer
  // words span a subcomplex.
  BasisBounds lb;
  lb.max_length = L;
  for (const auto* A : {&inst->bar, &inst->tilde}) {
    check_window(A == &inst->bar ? "cobar-reduced" : "cobar-non-counital", [&] {
      return assemble_window<Word>(lo, hi, [A, lb](int n) { return A->basis(n, lb); },
                                   [A](const Word& w) { return A->differential(w); }, true);
    });
  }
  check_window("two-sided-cobar", [&] {
    std::map<int, std::vector<CobarTriple>> groups;
    std::vector<Word> words{Word{}}, layer{Word{}};
    for (int k = 0; k < L; ++k) {
      std::vector<Word> next;
      for (const auto& w : layer)
        for (int c = 0; c < C.size(); ++c) {
          Word v = w;
          v.push_back(c);
          next.push_back(v);
        }
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    for (int r = 0; r < C.size(); ++r)
      for (const auto& w : words)
        for (int l = 0; l < C.size(); ++l) {
          CobarTriple t{r, w, l};
          const int deg = two_sided_cobar_degree(C, t);
          if (deg >= lo && deg <= hi) groups[deg].push_back(t);
        }
    return assemble_window<CobarTriple>(lo, hi, from_groups(groups),
                                        [&C](const CobarTriple& t) { return two_sided_cobar_differential(C, t); },
                                        true);
  });

  // Hochschild complexes, algebra side.
  check_window("hochschild-dual-normalized", [&] { return dual_hochschild_window(*inst, lo, hi, true).window->window(); });
  check_window("hochschild-dual", [&] { return dual_hochschild_window(*inst, lo, hi, false, L).window->window(); });
  for (bool normalized : {true, false}) {
    check_window(normalized ? "hochschild-cobar-normalized" : "hochschild-cobar", [&] {
      AlgebraWindowParams p;
      p.lo = lo;
      p.hi = hi;
      p.normalized = normalized;
      p.max_level = N;
      p.value_min = 0;
      p.letter_min = normalized ? 1 : 0;
      p.letter_max = N - 1;
      p.letter_bounds.max_length = N;
      p.value_bounds.max_length = L;
      p.value_length_quotient = true;
      return algebra_window(AlgebraMap::identity(inst->bar), p).window->window();
    });
  }

  // Hochschild complexes, coalgebra side.
  check_window("hochschild-coalgebra-normalized",
               [&] { return normalized_coalgebra_window(C, inst->bar, lo, hi).window->window(); });
  check_window("hochschild-coalgebra",
               [&] { return coalgebra_window_quotient(C, inst->tilde, lo, hi, L).window->window(); });

  // Bimodule resolutions of the cobar algebra; words longer than L on either
  // side span a subcomplex.
  for (auto kind : {BimoduleResolution::Kind::K, BimoduleResolution::Kind::KTilde}) {
    check_window(kind == BimoduleResolution::Kind::K ? "resolution-K" : "resolution-K-tilde", [&] {
      auto K = std::make_shared<BimoduleResolution>(inst->bar, kind);
      return assemble_window<Triple>(lo, hi, [K, lb](int n) { return K->basis(n, lb); },
                                     [K](const Triple& t) { return K->differential(t); }, true);
    });
  }

  // Derivation complexes.
  check_window("derivations", [&] { return derivation_window(inst->bar, false, lo, hi).window->window(); });
  check_window("extended-derivations", [&] { return derivation_window(inst->bar, true, lo, hi).window->window(); });
  check_window("derivations-of-tilde",
               [&] { return derivation_window_quotient(inst->bar_tilde, lo, hi, L).window->window(); });
}

}  // namespace hochlab
