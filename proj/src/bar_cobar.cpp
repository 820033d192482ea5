#include "hochlab/bar_cobar.hpp"

namespace hochlab {

namespace {

BarWord replace_letter(const BarWord& w, std::size_t i, const Word& letter) {
  BarWord out = w;
  out[i] = letter;
  return out;
}

BarWord merge_letters(const BarWord& w, std::size_t i, const Word& letter) {
  BarWord out(w.begin(), w.begin() + i - 1);
  out.push_back(letter);
  out.insert(out.end(), w.begin() + i + 1, w.end());
  return out;
}

int cobar_word_degree(const DGCoalgebra& c, const Word& w) {
  int total = 0;
  for (int x : w) total += c.degree(x) - 1;
  return total;
}

}  // namespace

BarElement bar_differential(const Algebra& A, const BarWord& w) {
  BarElement out;
  int eps = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [k, c] : A.differential(w[i])) out.add(replace_letter(w, i, k), -c * parity_sign(eps));
    if (i >= 1) {
      for (const auto& [k, c] : A.multiply(w[i - 1], w[i])) out.add(merge_letters(w, i, k), c * parity_sign(eps));
    }
    eps += A.degree(w[i]) + 1;
  }
  return out;
}

BarElement bar_differential(const Algebra& A, const BarElement& x) {
  BarElement out;
  for (const auto& [w, c] : x) out.add(bar_differential(A, w), c);
  return out;
}

BarElement normalized_bar_differential(const Algebra& A, const BarWord& w) {
  for (const auto& a : w)
    if (A.is_unit(a)) throw GradingError("normalized bar word contains the unit");
  BarElement out;
  for (const auto& [v, c] : bar_differential(A, w)) {
    bool degenerate = false;
    for (const auto& a : v) degenerate = degenerate || A.is_unit(a);
    if (!degenerate) out.add(v, c);
  }
  return out;
}

int two_sided_degree(const Algebra& A, const TwoSidedWord& t) {
  const auto& [m, w, n] = t;
  return A.degree(m) + bar_degree(A, w) + A.degree(n);
}

TwoSidedElement two_sided_bar_differential(const Algebra& A, const TwoSidedWord& t) {
  const auto& [m, w, n] = t;
  TwoSidedElement out;
  for (const auto& [k, c] : A.differential(m)) out.add(TwoSidedWord{k, w, n}, c);
  int eps = A.degree(m);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [k, c] : A.differential(w[i]))
      out.add(TwoSidedWord{m, replace_letter(w, i, k), n}, -c * parity_sign(eps));
    eps += A.degree(w[i]) + 1;
  }
  for (const auto& [k, c] : A.differential(n)) out.add(TwoSidedWord{m, w, k}, c * parity_sign(eps));
  if (!w.empty()) {
    BarWord tail(w.begin() + 1, w.end());
    for (const auto& [k, c] : A.multiply(m, w[0]))
      out.add(TwoSidedWord{k, tail, n}, c * parity_sign(A.degree(m)));
    int e = A.degree(m) + A.degree(w[0]) + 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
      for (const auto& [k, c] : A.multiply(w[i - 1], w[i]))
        out.add(TwoSidedWord{m, merge_letters(w, i, k), n}, c * parity_sign(e));
      e += A.degree(w[i]) + 1;
    }
    BarWord head(w.begin(), w.end() - 1);
    int last = A.degree(m) + bar_degree(A, head);
    for (const auto& [k, c] : A.multiply(w.back(), n))
      out.add(TwoSidedWord{m, head, k}, -c * parity_sign(last));
  }
  return out;
}

TwoSidedElement two_sided_bar_differential(const Algebra& A, const TwoSidedElement& x) {
  TwoSidedElement out;
  for (const auto& [t, c] : x) out.add(two_sided_bar_differential(A, t), c);
  return out;
}

Element bar_augmentation(const Algebra& A, const TwoSidedElement& x) {
  Element out;
  for (const auto& [t, c] : x) {
    const auto& [m, w, n] = t;
    if (w.empty()) out.add(A.multiply(m, n), c);
  }
  return out;
}

namespace {

FreeDGA build_cobar(const DGCoalgebra& C, bool tilde) {
  std::vector<Generator> generators;
  std::map<int, Element> differential;
  for (int i = tilde ? 0 : 1; i < C.size(); ++i) {
    generators.push_back({i, "<" + C.name(i) + ">", C.degree(i) - 1, C.degree(i)});
    Element value;
    for (const auto& [j, c] : C.differential(i)) value.add(Word{j}, -c);
    const auto terms = tilde ? C.diagonal(i) : C.reduced_diagonal(i);
    for (const auto& t : terms) value.add(Word{t.left, t.right}, t.coeff * parity_sign(C.degree(t.left)));
    differential.emplace(i, std::move(value));
  }
  return FreeDGA(std::move(generators), std::move(differential), tilde ? "Omega~C" : "Omega-C");
}

}  // namespace

FreeDGA omega_bar(const DGCoalgebra& C) { return build_cobar(C, false); }

FreeDGA omega_tilde(const DGCoalgebra& C) {
  FreeDGA out = build_cobar(C, true);
  out.set_epsilon(0);
  return out;
}

int two_sided_cobar_degree(const DGCoalgebra& C, const CobarTriple& t) {
  const auto& [r, w, l] = t;
  return C.degree(r) + cobar_word_degree(C, w) + C.degree(l);
}

CobarTripleElement two_sided_cobar_differential(const DGCoalgebra& C, const CobarTriple& t) {
  const auto& [r, w, l] = t;
  CobarTripleElement out;
  for (const auto& [k, c] : C.differential(r)) out.add(CobarTriple{k, w, l}, c);
  int eps = C.degree(r);
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (const auto& [k, c] : C.differential(w[j])) {
      Word v = w;
      v[j] = k;
      out.add(CobarTriple{r, v, l}, -c * parity_sign(eps));
    }
    for (const auto& d : C.diagonal(w[j])) {
      Word v(w.begin(), w.begin() + j);
      v.push_back(d.left);
      v.push_back(d.right);
      v.insert(v.end(), w.begin() + j + 1, w.end());
      out.add(CobarTriple{r, v, l}, d.coeff * parity_sign(eps + C.degree(d.left)));
    }
    eps += C.degree(w[j]) - 1;
  }
  for (const auto& [k, c] : C.differential(l)) out.add(CobarTriple{r, w, k}, c * parity_sign(eps));
  for (const auto& d : C.diagonal(r)) {
    Word v{d.right};
    v.insert(v.end(), w.begin(), w.end());
    out.add(CobarTriple{d.left, v, l}, -d.coeff * parity_sign(C.degree(d.left)));
  }
  for (const auto& d : C.diagonal(l)) {
    Word v = w;
    v.push_back(d.left);
    out.add(CobarTriple{r, v, d.right}, d.coeff * parity_sign(eps));
  }
  return out;
}

CobarTripleElement two_sided_cobar_differential(const DGCoalgebra& C, const CobarTripleElement& x) {
  CobarTripleElement out;
  for (const auto& [t, c] : x) out.add(two_sided_cobar_differential(C, t), c);
  return out;
}

Element bar_twisting_cochain(const BarWord& w) { return w.size() == 1 ? Element(w[0]) : Element(); }

Element cobar_twisting_cochain(int c) { return Element(Word{c}); }

CobarFreeModel cobar_free_model(const DGCoalgebra& C, int bound) {
  auto conil = check_conilpotent(C, bound);
  if (conil.status != ConilpotencyResult::Status::Conilpotent)
    throw GradingError("cobar free model needs a conilpotent coalgebra");
  CobarFreeModel model;
  FreeDGA bar = omega_bar(C);
  model.filtration = check_free_model(bar, bound);
  int top = 0;
  for (int i = 1; i < C.size(); ++i) top = std::max(top, conil.order[i]);
  for (int k = 0; k <= top; ++k) {
    std::vector<int> stage;
    for (int i = 1; i < C.size(); ++i)
      if (conil.order[i] <= k) stage.push_back(i);
    model.kernel_stages.push_back(stage);
  }
  FreeDGA tilde = omega_tilde(C);
  FreeDGA reference = tilde_A(bar);
  model.tilde_matches = true;
  for (const auto& g : tilde.generators()) {
    bool same = reference.has_generator(g.id) && reference.generator(g.id).degree == g.degree &&
                reference.generator_differential(g.id) == tilde.generator_differential(g.id);
    if (!same) {
      model.tilde_matches = false;
      model.mismatches.push_back(g.id);
    }
  }
  if (reference.generators().size() != tilde.generators().size()) model.tilde_matches = false;
  return model;
}

BarElement sigma_C(const DGCoalgebra& C, int c) {
  if (c == 0) return BarElement(BarWord{});
  BarElement out;
  for (int k = 0;; ++k) {
    if (k > 256) throw GradingError("sigma_C: coalgebra is not conilpotent");
    Linear<Word> iterate = reduced_diagonal_iterate(C, Linear<int>(c), k);
    if (iterate.empty()) break;
    for (const auto& [w, coeff] : iterate) {
      BarWord letters;
      for (int x : w) letters.push_back(Word{x});
      out.add(letters, coeff);
    }
  }
  return out;
}

BarElement sigma_C(const DGCoalgebra& C, const Linear<int>& x) {
  BarElement out;
  for (const auto& [c, coeff] : x) out.add(sigma_C(C, c), coeff);
  return out;
}

TripleElement Pi(const FreeDGA& A, const TwoSidedWord& t) {
  const auto& [m, w, n] = t;
  TripleElement out;
  if (w.empty()) {
    out.add(Triple{m, kScalarSlot, n}, 1);
  } else if (w.size() == 1) {
    for (const auto& [u, c] : universal_derivation_bar(A, w[0])) {
      const auto& [l, g, r] = u;
      out.add(Triple{concat(m, l), g, concat(r, n)}, c);
    }
  }
  return out;
}

TripleElement Pi(const FreeDGA& A, const TwoSidedElement& x) {
  TripleElement out;
  for (const auto& [t, c] : x) out.add(Pi(A, t), c);
  return out;
}

TwoSidedElement nabla_infty(const DGCoalgebra& C, const Triple& t) {
  const auto& [l, mid, r] = t;
  TwoSidedElement out;
  if (mid == kScalarSlot) {
    out.add(TwoSidedWord{l, BarWord{}, r}, 1);
    return out;
  }
  for (const auto& [w, c] : sigma_C(C, mid)) out.add(TwoSidedWord{l, w, r}, c);
  return out;
}

TwoSidedElement nabla_infty(const DGCoalgebra& C, const TripleElement& x) {
  TwoSidedElement out;
  for (const auto& [t, c] : x) out.add(nabla_infty(C, t), c);
  return out;
}

Word universal_coderivation(const Word& alpha, int v, const Word& beta) {
  Word out = alpha;
  out.push_back(v);
  out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

}  // namespace hochlab
