#include "hochlab/cochains.hpp"

#include <random>

namespace hochlab {

int bar_degree(const Algebra& algebra, const BarWord& w) {
  int total = 0;
  for (const auto& a : w) total += algebra.degree(a) + 1;
  return total;
}

std::string format_bar_word(const Algebra& algebra, const BarWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "|";
    out += algebra.label(w[i]);
  }
  return out + "]";
}

AlgebraCochain AlgebraCochain::zero(int degree) { return AlgebraCochain(degree, nullptr); }

AlgebraCochain AlgebraCochain::from_table(int degree, std::map<BarWord, Element> table,
                                          std::function<bool(const BarWord&)> inside) {
  auto shared = std::make_shared<const std::map<BarWord, Element>>(std::move(table));
  return AlgebraCochain(degree, [shared, inside = std::move(inside)](const BarWord& w) {
    if (!inside(w)) throw SaturationError("cochain evaluated outside its window");
    auto it = shared->find(w);
    return it == shared->end() ? Element() : it->second;
  });
}

Element AlgebraCochain::apply(const BarElement& x) const {
  Element out;
  for (const auto& [w, c] : x) out.add((*this)(w), c);
  return out;
}

AlgebraCochain AlgebraCochain::memoized() const {
  struct Cache {
    std::mutex mutex;
    std::map<BarWord, Element> values;
  };
  auto cache = std::make_shared<Cache>();
  Rule rule = rule_;
  return AlgebraCochain(degree_, [cache, rule](const BarWord& w) {
    {
      std::lock_guard<std::mutex> lock(cache->mutex);
      auto it = cache->values.find(w);
      if (it != cache->values.end()) return it->second;
    }
    Element value = rule ? rule(w) : Element();
    std::lock_guard<std::mutex> lock(cache->mutex);
    cache->values.emplace(w, value);
    return value;
  });
}

std::uint64_t hash_bar_word(std::uint64_t seed, const BarWord& w) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  };
  mix(w.size());
  for (const auto& a : w) {
    mix(a.size() + 1000003ULL);
    for (int g : a) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(g)));
  }
  return h;
}

AlgebraCochain random_algebra_cochain(const Algebra& values, const Algebra& source, int degree,
                                      std::uint64_t seed, const BasisBounds& bounds, int density_percent) {
  const Algebra* target = &values;
  const Algebra* src = &source;
  AlgebraCochain raw(degree, [=](const BarWord& w) {
    std::mt19937_64 rng(hash_bar_word(seed, w));
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Element out;
    for (const auto& b : target->basis(bar_degree(*src, w) + degree, bounds)) {
      if (coin(rng) < density_percent) out.add(b, coeff(rng));
    }
    return out;
  });
  return raw.memoized();
}

}  // namespace hochlab
