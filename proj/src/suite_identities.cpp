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

std::vector<BarWord> words_over(const std::vector<Word>& letters, std::size_t max_length) {
  std::vector<BarWord> out{BarWord{}};
  std::vector<BarWord> layer{BarWord{}};
  for (std::size_t k = 0; k < max_length; ++k) {
    std::vector<BarWord> next;
    for (const auto& w : layer)
      for (const auto& a : letters) {
        BarWord v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> dual_letters(const DGCoalgebra& C) {
  std::vector<Word> out;
  for (int c = 0; c < C.size(); ++c) out.push_back(Word{c});
  return out;
}

// Basis words of the cobar algebra in degrees [0, max_degree], at most `limit` of them.
std::vector<Word> cobar_letters(const FreeDGA& A, int max_degree, std::size_t limit) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& w : A.basis(d, length_bound(4))) out.push_back(w);
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::vector<Word> cobar_words(int letters, int max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int k = 0; k < max_length; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int c = 0; c < letters; ++c) {
        Word v = w;
        v.push_back(c);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string describe(const Algebra& A, const BarWord& w, int trial) {
  std::ostringstream out;
  out << "sample " << trial << " on " << format_bar_word(A, w);
  return out.str();
}

}  // namespace

void suite_beta(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  struct Case {
    std::string name;
    const Algebra* algebra;
    std::vector<BarWord> words;
  };
  std::vector<Case> cases{{"dual", &inst->dual, words_over(dual_letters(inst->coalgebra), 3)},
                          {"cobar", &inst->bar, words_over(cobar_letters(inst->bar, 3, 5), 3)}};
  for (const auto& cs : cases) {
    checks.run("beta-intertwines-differentials/" + cs.name, "beta_A((D0 + D1) g) = -D(beta_A g)", [&] {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<int> deg(-4, 4);
      const Algebra& A = *cs.algebra;
      for (int trial = 0; trial < cfg.samples; ++trial) {
        auto g = random_algebra_cochain(A, A, deg(rng), rng(), length_bound(5));
        auto Dg = algebra_hochschild_D(A, g);
        for (const auto& w : cs.words)
          if (beta_A(A, Dg, w) != coderivation_differential(A, g, w).scaled(-1)) return describe(A, w, trial);
      }
      return std::string();
    });
  }
}

void suite_gamma(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  checks.run("gamma-intertwines-differentials", "gamma_C((D0 + D1) phi) = -D(gamma_C phi)", [&] {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> deg(-4, 4);
    for (int trial = 0; trial < cfg.samples; ++trial) {
      auto phi = random_coalgebra_cochain(C, inst->tilde, deg(rng), rng(), length_bound(4), false);
      auto Dphi = coalgebra_hochschild_D(C, inst->tilde, phi, false);
      if (gamma_C(inst->tilde, Dphi) != derivation_differential(gamma_C(inst->tilde, phi)).scaled(-1))
        return "sample " + std::to_string(trial);
    }
    return std::string();
  });
  checks.run("gamma-bar-intertwines-differentials", "gamma-bar_C(D phi) = -D~(gamma-bar_C phi)", [&] {
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_int_distribution<int> deg(-4, 4);
    for (int trial = 0; trial < cfg.samples; ++trial) {
      auto psi = random_coalgebra_cochain(C, inst->bar, deg(rng), rng(), length_bound(4), true);
      auto lhs = gamma_bar_C(inst->bar, coalgebra_hochschild_D(C, inst->bar, psi, true));
      auto rhs = tilde_D(gamma_bar_C(inst->bar, psi));
      if (lhs.theta != rhs.theta.scaled(-1) || lhs.x != rhs.x.scaled(-1)) return "sample " + std::to_string(trial);
    }
    return std::string();
  });
}

void suite_cobar_model(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto model = cobar_free_model(inst->coalgebra, 64);
  checks.run("tilde-equals-tilde-of-bar", "Omega~ C = tilde_A(Omega-bar C) on generators", [&] {
    if (model.tilde_matches) return std::string();
    std::ostringstream out;
    out << "generators differ:";
    for (int g : model.mismatches) out << " " << g;
    return out.str();
  });
  checks.run("free-model-filtration", "the generator filtration of Omega-bar C is exhaustive", [&] {
    if (model.filtration.ok) return std::string();
    std::ostringstream out;
    out << "generators never absorbed:";
    for (int g : model.filtration.witness) out << " " << g;
    return out.str();
  });
}

void suite_theta_square(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  const auto& C = inst->coalgebra;
  const auto& A = inst->dual;
  checks.run("theta-square", "-gamma_C(f)^v o Theta = Theta o beta_A(D1 f)", [&] {
    const int L = 4;
    const auto words = words_over(dual_letters(C), L - 1);
    const auto candidates = cobar_words(C.size(), L);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> deg(-4, 3);
    for (int trial = 0; trial < cfg.pair_samples; ++trial) {
      auto f = random_coalgebra_cochain(C, inst->tilde, deg(rng), rng(), length_bound(L), false);
      auto F = D1(C, f);
      Derivation theta = gamma_C(inst->tilde, f);
      auto as_map = [&theta](const Word& u) { return theta(u); };
      for (const auto& w : words) {
        Functional lhs = transpose(Theta(C, w), bar_degree(A, w), as_map, theta.degree(), candidates).scaled(-1);
        if (lhs != Theta(C, beta_A(A, F, w))) return describe(A, w, trial);
      }
    }
    return std::string();
  });
}

}  // namespace hochlab
