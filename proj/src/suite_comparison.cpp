#include <random>
#include <sstream>

#include "hochlab/suites.hpp"

namespace hochlab {

namespace {

BasisBounds length_bound(int n) {
  BasisBounds b;
  b.max_length = n;
  return b;
}

// Quotient level N for the cobar-side complex; levels N+1 and N+2 confirm it.
int cobar_level(const RunConfig& cfg, const std::string& entry) {
  if (cfg.cobar_level > 0) return cfg.cobar_level;
  if (entry == "sphere2" || entry == "sphere3") return 8;
  if (entry == "projplane") return 6;
  return 4;
}

std::vector<BarWord> words_over(const std::vector<Word>& letters, std::size_t max_length, const Algebra& A,
                                int max_bar_degree) {
  std::vector<BarWord> out{BarWord{}};
  std::vector<BarWord> layer{BarWord{}};
  for (std::size_t k = 0; k < max_length; ++k) {
    std::vector<BarWord> next;
    for (const auto& w : layer)
      for (const auto& a : letters) {
        BarWord v = w;
        v.push_back(a);
        if (bar_degree(A, v) <= max_bar_degree) next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> cobar_letters(const FreeDGA& A, int max_degree, std::size_t limit) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& w : A.basis(d, length_bound(4))) out.push_back(w);
  if (out.size() > limit) out.resize(limit);
  return out;
}

bool agree_on(const AlgebraCochain& f, const AlgebraCochain& g, const std::vector<BarWord>& words,
              const Scalar& factor = 1) {
  for (const auto& w : words)
    if (f(w) != g(w).scaled(factor)) return false;
  return true;
}

// Outcome of comparing a map on window homology in one degree.
std::string map_verdict(const InducedMap& m) {
  if (m.isomorphism()) return "";
  std::ostringstream out;
  out << "degree " << m.degree << ": " << m.verdict() << " (source " << m.source_dimension << ", target "
      << m.target_dimension << ", rank " << m.rank << ")";
  return out.str();
}

std::string unstable_note(int degree, const Stabilized& s) {
  std::ostringstream out;
  out << "degree " << degree << ": rank " << s.near_dimension << " at the nearer level and "
      << s.classes.dimension() << " at the farther level";
  return out.str();
}

// Runs a per-degree homology comparison and records pass, fail or unstable.
void record_degrees(Checks& checks, const std::string& name, const std::string& anchor, int lo, int hi,
                    const std::function<std::pair<std::string, std::string>(int)>& degree_check,
                    const std::string& context = "") {
  checks.run(name, anchor, [&] {
    std::string failures, unstable;
    for (int n = lo; n <= hi; ++n) {
      auto [fail, note] = degree_check(n);
      if (!fail.empty()) failures += (failures.empty() ? "" : "; ") + fail;
      if (!note.empty()) unstable += (unstable.empty() ? "" : "; ") + note;
    }
    if (!failures.empty()) return context + failures;
    if (!unstable.empty()) throw SaturationError("unstable: " + context + unstable);
    return std::string();
  });
}

}  // namespace

// ---- ~Der A, C*(A;A) and Der A~ ----------------------------------------------------

void suite_derivation_models(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const FreeDGA& A = inst->bar;
  const FreeDGA& At = inst->bar_tilde;
  const auto words = words_over(cobar_letters(A, 3, 6), 3, A, 8);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> deg(-3, 4);
  BasisBounds four = length_bound(4);
  std::vector<std::pair<ExtendedDerivation, ExtendedDerivation>> pairs;
  auto random_xi = [&](int d) {
    std::map<int, Element> values;
    std::uniform_int_distribution<int> coin(0, 99), coeff(-3, 3);
    auto element = [&](int degree) {
      Element out;
      for (const auto& b : A.basis(degree, four))
        if (coin(rng) < 60) out.add(b, coeff(rng));
      return out;
    };
    for (const auto& g : A.generators()) values[g.id] = element(g.degree + d);
    return ExtendedDerivation{Derivation(A, d, std::move(values)), element(d - 1)};
  };
  for (int i = 0; i < cfg.samples; ++i) {
    const int d1 = deg(rng), d2 = deg(rng);
    auto a = random_xi(d1);
    auto b = random_xi(d2);
    pairs.emplace_back(std::move(a), std::move(b));
  }

  checks.run("i-chain-map", "s o i_A is a chain map", [&] {
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto& a = pairs[t].first;
      if (!agree_on(i_A(tilde_D(a)), algebra_hochschild_D(A, i_A(a)), words, -1)) return "sample " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("j-chain-map", "j_A is a chain map", [&] {
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto& a = pairs[t].first;
      if (j_A(At, tilde_D(a)) != derivation_differential(j_A(At, a))) return "sample " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("i-bracket", "s o i_A preserves brackets", [&] {
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto& [a, b] = pairs[t];
      if (!agree_on(i_A(ext_bracket(a, b)), gerstenhaber_bracket(A, i_A(a), i_A(b)), words))
        return "pair " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("j-bracket", "j_A preserves brackets", [&] {
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto& [a, b] = pairs[t];
      if (j_A(At, ext_bracket(a, b)) != derivation_bracket(j_A(At, a), j_A(At, b))) return "pair " + std::to_string(t);
    }
    return std::string();
  });

  // Homology, window [-4, 6] of ~Der A.
  const int lo = -4, hi = 6;
  auto source = derivation_window(A, true, lo, hi);
  const int N = cobar_level(cfg, entry);
  auto target = cobar_hochschild_window(*inst, lo - 1, hi - 1, N + 2);

  record_degrees(checks, "i-homology", "H(s o i_A) is an isomorphism", lo + 1, hi - 1, [&](int n) {
    auto src = all_classes(source.window->window(), n);
    auto tgt = stabilized_classes(target.window->complex(), n - 1, N, 1);
    auto m = map_on_classes(src, tgt.classes, [&](const SparseVector& v) {
      return target.vector(n - 1, i_A(source.extended_derivation(n, v)));
    });
    return std::make_pair(map_verdict(m), tgt.stable() ? std::string() : unstable_note(n - 1, tgt));
  }, "quotient level " + std::to_string(N) + ": ");

  record_degrees(checks, "j-homology", "H(j_A) is an isomorphism", lo + 1, hi - 1, [&](int n) {
    auto src = all_classes(source.window->window(), n);
    // Level of the images: value length plus degree.
    int level = 0;
    for (int i = 0; i < source.window->dim(n); ++i)
      level = std::max(level, static_cast<int>(source.window->basis_element(n, i).second.size()) + n);
    auto der = derivation_window(At, n - 1, n + 1, level + 2);
    auto tgt = stabilized_classes(der.window->complex(), n, level, 1);
    auto m = map_on_classes(src, tgt.classes, [&](const SparseVector& v) {
      return der.vector(n, j_A(At, source.extended_derivation(n, v)));
    });
    return std::make_pair(map_verdict(m), tgt.stable() ? std::string() : unstable_note(n, tgt));
  });
}

// ---- normalized versus unnormalized coalgebra complexes --------------------------------

void suite_normalization(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  const int lo = -4, hi = 4;
  auto source = normalized_coalgebra_window(C, inst->bar, lo, hi);
  (void)cfg;
  record_degrees(checks, "inclusion-homology", "the normalized inclusion is a quasi-isomorphism", lo + 1, hi - 1,
                 [&](int n) {
                   auto src = all_classes(source.window->window(), n);
                   int level = 0;
                   for (int i = 0; i < source.window->dim(n); ++i)
                     level = std::max(level, static_cast<int>(source.window->basis_element(n, i).second.size()) + n);
                   auto target = coalgebra_window(C, inst->tilde, n - 1, n + 1, level + 2);
                   auto tgt = stabilized_classes(target.window->complex(), n, level, 1);
                   auto m = map_on_classes(src, tgt.classes, [&](const SparseVector& v) {
                     return target.vector(n, inclusion_normalized(source.cochain(n, v)));
                   });
                   return std::make_pair(map_verdict(m), tgt.stable() ? std::string() : unstable_note(n, tgt));
                 });
}

// ---- D1 -------------------------------------------------------------------------------

void suite_dual_comparison(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  const auto& Av = inst->dual;
  const int lo = -4, hi = 4;

  auto normalized = normalized_coalgebra_window(C, inst->bar, lo, hi);
  auto dual = dual_hochschild_window(*inst, lo, hi, true);
  checks.run("D1-bar-bijection", "D1-bar is an isomorphism of complexes", [&]() -> std::string {
    std::map<int, std::vector<SparseVector>> columns;
    for (int n = lo; n <= hi; ++n) {
      if (normalized.window->dim(n) != dual.window->dim(n))
        return "degree " + std::to_string(n) + ": dimensions " + std::to_string(normalized.window->dim(n)) + " and " +
               std::to_string(dual.window->dim(n));
      std::vector<bool> hit(dual.window->dim(n), false);
      for (int i = 0; i < normalized.window->dim(n); ++i) {
        SparseVector e{{i, Scalar(1)}};
        auto image = dual.vector(n, D1_bar(C, normalized.cochain(n, e)));
        if (image.size() != 1 || abs(image[0].second) != 1 || hit[image[0].first])
          return "degree " + std::to_string(n) + ": basis element " + std::to_string(i) + " is not sent to a basis element";
        hit[image[0].first] = true;
        columns[n].push_back(image);
      }
    }
    for (int n = lo + 1; n <= hi; ++n) {
      const auto ds = normalized.window->window().differential(n);
      const auto dt = dual.window->window().differential(n);
      for (int i = 0; i < normalized.window->dim(n); ++i) {
        SparseVector lhs = dt.apply(columns[n][i]);
        std::map<int, Scalar> rhs;
        for (const auto& [j, c] : ds.columns[i])
          for (const auto& [k, e] : columns[n - 1][j]) rhs[k] += c * e;
        if (lhs != sparse_from_map(rhs)) return "degree " + std::to_string(n) + ": D1-bar is not a chain map";
      }
    }
    return "";
  });

  // The unnormalized windows of the product grow fastest; its degree range is narrower.
  const int span = entry == "product" ? 2 : 3;
  record_degrees(checks, "D1-homology", "H(D1) is an isomorphism", -span, span, [&](int n) {
    // Source classes in the unnormalized complex, target classes in length quotients.
    int length = 0;
    for (int i = 0; i < normalized.window->dim(n); ++i)
      length = std::max(length, static_cast<int>(normalized.window->basis_element(n, i).second.size()));
    const int level = length + n;
    auto source = coalgebra_window(C, inst->tilde, n - 1, n + 1, std::max(0, level) + 2);
    auto src = stabilized_classes(source.window->complex(), n, std::max(0, level), 1);
    const int L = length + 1;
    auto target = dual_hochschild_window(*inst, n - 1, n + 1, false, L + 2);
    auto tgt = stabilized_classes(target.window->complex(), n, L, 1);
    auto m = map_on_classes(src.classes, tgt.classes, [&](const SparseVector& v) {
      return target.vector(n, D1(C, source.cochain(n, v)));
    });
    std::string note;
    if (!src.stable()) note = unstable_note(n, src);
    if (!tgt.stable()) note += (note.empty() ? "" : "; ") + unstable_note(n, tgt);
    return std::make_pair(map_verdict(m), note);
  });

  const int L = 4;
  std::vector<Word> letters;
  for (int c = 0; c < C.size(); ++c) letters.push_back(Word{c});
  const auto all = words_over(letters, L, Av, 1 << 20);
  const auto shorter = words_over(letters, L - 1, Av, 1 << 20);
  checks.run("D1-cup", "D1 is multiplicative", [&] {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> deg(-4, 3);
    for (int t = 0; t < cfg.samples; ++t) {
      auto phi = random_coalgebra_cochain(C, inst->tilde, deg(rng), rng(), length_bound(L), false);
      auto psi = random_coalgebra_cochain(C, inst->tilde, deg(rng), rng(), length_bound(L), false);
      if (!agree_on(D1(C, coalgebra_cup(C, inst->tilde, phi, psi)), algebra_cup(Av, D1(C, phi), D1(C, psi)), all))
        return "pair " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("D1-bracket", "s D1 preserves brackets", [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_int_distribution<int> deg(-4, 3);
    for (int t = 0; t < cfg.pair_samples; ++t) {
      auto phi = random_coalgebra_cochain(C, inst->tilde, deg(rng), rng(), length_bound(L), false);
      auto psi = random_coalgebra_cochain(C, inst->tilde, deg(rng), rng(), length_bound(L), false);
      auto h = coalgebra_bracket(C, inst->tilde, phi, psi);
      if (!agree_on(D1(C, h), gerstenhaber_bracket(Av, D1(C, phi), D1(C, psi)), shorter))
        return "pair " + std::to_string(t);
    }
    return std::string();
  });
}

// ---- D2 and Gamma ----------------------------------------------------------------------

void suite_cobar_comparison(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  const FreeDGA& A = inst->bar;
  const int lo = -4, hi = 4;
  const int N = cobar_level(cfg, entry);
  auto source = cobar_hochschild_window(*inst, lo, hi, N + 2);
  auto target = normalized_coalgebra_window(C, A, lo, hi);

  record_degrees(checks, "D2-homology", "H(D2) is an isomorphism", lo + 1, hi - 1, [&](int n) {
    auto src = stabilized_classes(source.window->complex(), n, N, 1);
    auto tgt = all_classes(target.window->window(), n);
    auto m = map_on_classes(src.classes, tgt, [&](const SparseVector& v) {
      return target.vector(n, D2(C, source.cochain(n, v)));
    });
    return std::make_pair(map_verdict(m), src.stable() ? std::string() : unstable_note(n, src));
  }, "quotient level " + std::to_string(N) + ": ");

  std::vector<BarWord> words = words_over(cobar_letters(A, 6, 1 << 20), 2, A, 8);
  checks.run("D2-chain-map", "D2 is a chain map", [&] {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> deg(-4, 3);
    for (int t = 0; t < cfg.samples; ++t) {
      auto g = random_algebra_cochain(A, A, deg(rng), rng(), length_bound(5));
      if (D2(C, algebra_hochschild_D(A, g)) != coalgebra_hochschild_D(C, A, D2(C, g), true))
        return "sample " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("D2-Gamma-identity", "D2 o Gamma = id", [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_int_distribution<int> deg(-4, 3);
    for (int t = 0; t < cfg.samples; ++t) {
      auto phi = random_coalgebra_cochain(C, A, deg(rng), rng(), length_bound(4), true);
      if (!(D2(C, Gamma(C, A, phi)) == phi)) return "sample " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("D2-cup", "D2 is multiplicative", [&] {
    std::mt19937_64 rng(cfg.seed + 3);
    std::uniform_int_distribution<int> deg(-3, 2);
    for (int t = 0; t < cfg.pair_samples; ++t) {
      auto f = random_algebra_cochain(A, A, deg(rng), rng(), length_bound(4));
      auto g = random_algebra_cochain(A, A, deg(rng), rng(), length_bound(4));
      if (D2(C, algebra_cup(A, f, g)) != coalgebra_cup(C, A, D2(C, f), D2(C, g))) return "pair " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("Gamma-chain-map", "Gamma is a chain map", [&] {
    std::mt19937_64 rng(cfg.seed + 4);
    std::uniform_int_distribution<int> deg(-4, 3);
    for (int t = 0; t < cfg.samples; ++t) {
      auto phi = random_coalgebra_cochain(C, A, deg(rng), rng(), length_bound(4), true);
      if (!agree_on(Gamma(C, A, coalgebra_hochschild_D(C, A, phi, true)), algebra_hochschild_D(A, Gamma(C, A, phi)),
                    words))
        return "sample " + std::to_string(t);
    }
    return std::string();
  });
  checks.run("Gamma-bracket", "s Gamma preserves brackets", [&] {
    std::mt19937_64 rng(cfg.seed + 2);
    std::uniform_int_distribution<int> deg(-4, 3);
    int reversed = 0, other = 0, nonzero = 0;
    for (int t = 0; t < cfg.pair_samples; ++t) {
      auto phi = random_coalgebra_cochain(C, A, deg(rng), rng(), length_bound(4), true);
      auto psi = random_coalgebra_cochain(C, A, deg(rng), rng(), length_bound(4), true);
      auto lhs = Gamma(C, A, normalized_coalgebra_bracket(C, A, phi, psi));
      auto rhs = gerstenhaber_bracket(A, Gamma(C, A, phi), Gamma(C, A, psi));
      if (agree_on(lhs, rhs, words)) continue;
      if (agree_on(lhs, rhs, words, -1)) ++reversed;
      else ++other;
      ++nonzero;
    }
    if (nonzero == 0) return std::string();
    std::ostringstream out;
    out << nonzero << " of " << cfg.pair_samples << " pairs differ; in " << reversed
        << " of them Gamma[phi,psi] = -[Gamma phi, Gamma psi] exactly";
    if (other) out << "; " << other << " differ otherwise";
    return out.str();
  });
}

// ---- the composite D_C -------------------------------------------------------------------

void suite_end_to_end(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  const FreeDGA& A = inst->bar;
  const DualAlgebra& Av = inst->dual;
  const int lo = -4, hi = 4;
  const int N = cobar_level(cfg, entry);
  auto source = cobar_hochschild_window(*inst, lo, hi, N + 2);
  auto target = dual_hochschild_window(*inst, 2 * lo - 1, 2 * hi + 2, true);

  std::map<int, Stabilized> src;
  std::map<int, StableClasses> tgt;
  std::map<int, std::vector<AlgebraCochain>> reps;
  record_degrees(checks, "D_C-homology", "H(D_C) is an isomorphism", lo + 1, hi - 1, [&](int n) {
    src.emplace(n, stabilized_classes(source.window->complex(), n, N, 1));
    tgt.emplace(n, all_classes(target.window->window(), n));
    const auto& s = src.at(n);
    for (const auto& r : s.classes.basis.representatives) reps[n].push_back(source.cochain(n, r, N).memoized());
    auto m = map_on_classes(s.classes, tgt.at(n), [&](const SparseVector& v) {
      return target.vector(n, D_C(C, source.cochain(n, v)));
    });
    return std::make_pair(map_verdict(m), s.stable() ? std::string() : unstable_note(n, s));
  }, "quotient level " + std::to_string(N) + ": ");

  // Transported products of homology representatives.
  auto target_classes = [&](int n) -> const StableClasses& {
    auto it = tgt.find(n);
    if (it == tgt.end()) it = tgt.emplace(n, all_classes(target.window->window(), n)).first;
    return it->second;
  };
  auto is_boundary = [&](int n, const AlgebraCochain& x) {
    auto coords = target_classes(n).reference_coordinates(target.vector(n, x));
    if (!coords) throw std::logic_error("transported product is not a cycle");
    return coords->empty();
  };
  auto class_text = [&](int n, const AlgebraCochain& x) {
    const auto& classes = target_classes(n);
    auto coords = classes.reference_coordinates(target.vector(n, x));
    std::ostringstream out;
    out << "(";
    if (coords)
      if (auto c = classes.basis.solve(*coords))
        for (const auto& [i, a] : *c) out << " " << i << ":" << a;
    out << " )";
    return out.str();
  };
  auto difference = [](const AlgebraCochain& f, const AlgebraCochain& g, const Scalar& factor) {
    return AlgebraCochain(f.degree(), [f, g, factor](const BarWord& w) {
      Element out = f(w);
      out.add(g(w), -factor);
      return out;
    });
  };

  checks.run("D_C-cup", "H(D_C) is multiplicative", [&] {
    std::string bad;
    for (const auto& [n, rn] : reps)
      for (const auto& [m, rm] : reps) {
        if (n + m < lo + 1 || n + m > hi - 1) continue;
        for (std::size_t i = 0; i < rn.size(); ++i)
          for (std::size_t j = 0; j < rm.size(); ++j) {
            auto lhs = D_C(C, algebra_cup(A, rn[i], rm[j]));
            auto rhs = algebra_cup(Av, D_C(C, rn[i]), D_C(C, rm[j]));
            if (!is_boundary(n + m, difference(lhs, rhs, 1)) && bad.empty())
              bad = "classes " + std::to_string(n) + "." + std::to_string(i) + " and " + std::to_string(m) + "." +
                    std::to_string(j);
          }
      }
    return bad;
  });

  checks.run("D_C-bracket", "H(D_C) preserves brackets", [&] {
    int pairs = 0, zero = 0, agree = 0, reversed = 0, other = 0, outside = 0;
    std::string first, differing, saturation;
    for (const auto& [n, rn] : reps)
      for (const auto& [m, rm] : reps) {
        const int k = n + m + 1;
        if (k < lo + 1 || k > hi - 1) continue;
        for (std::size_t i = 0; i < rn.size(); ++i)
          for (std::size_t j = 0; j < rm.size(); ++j) {
            ++pairs;
            bool lhs_zero = false, rhs_zero = false;
            AlgebraCochain lhs, rhs;
            try {
              lhs = D_C(C, gerstenhaber_bracket(A, rn[i], rm[j])).memoized();
              rhs = gerstenhaber_bracket(Av, D_C(C, rn[i]), D_C(C, rm[j])).memoized();
              lhs_zero = is_boundary(k, lhs);
              rhs_zero = is_boundary(k, rhs);
            } catch (const SaturationError& e) {
              if (outside++ == 0) saturation = e.what();
              continue;
            }
            if (is_boundary(k, difference(lhs, rhs, 1))) {
              ++agree;
              if (lhs_zero && rhs_zero) ++zero;
            } else if (is_boundary(k, difference(lhs, rhs, -1))) {
              ++reversed;
              if (first.empty())
                first = "classes " + std::to_string(n) + "." + std::to_string(i) + " and " + std::to_string(m) + "." +
                        std::to_string(j);
            } else {
              if (++other <= 3) {
                differing += (differing.empty() ? "" : "; ") + std::to_string(n) + "." + std::to_string(i) + " with " +
                             std::to_string(m) + "." + std::to_string(j) + ": " + class_text(k, lhs) + " against " +
                             class_text(k, rhs);
              }
            }
          }
      }
    std::ostringstream out;
    out << pairs << " pairs: " << agree << " agree (" << zero << " both zero), " << reversed
        << " agree up to sign only, " << other << " differ, " << outside << " need sources beyond the window";
    if (!first.empty()) out << "; first sign reversal at " << first;
    if (!differing.empty()) out << "; differing classes " << differing;
    if (!saturation.empty()) out << "; first saturation: " << saturation;
    if (reversed == 0 && other == 0) {
      if (agree == 0) throw SaturationError(out.str());
      return std::string();
    }
    return out.str();
  });
}

}  // namespace hochlab
