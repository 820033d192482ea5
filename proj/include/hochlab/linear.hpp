#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hochlab {

using Scalar = mpq_class;

inline int parity_sign(long exponent) { return (exponent & 1) ? -1 : 1; }

Scalar parse_scalar(const std::string& text);
std::string scalar_string(const Scalar& value);

// A word is an ordered sequence of generator (or basis) indices.
using Word = std::vector<int>;
// A bar word is an ordered sequence of algebra basis elements.
using BarWord = std::vector<Word>;

// Finite formal linear combination of keys.  Zero coefficients are never
// stored, so structural equality is mathematical equality.
template <class Key>
class Linear {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  Linear() = default;
  Linear(const Key& key, const Scalar& coeff = 1) { add(key, coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const Linear& other, const Scalar& factor = 1) {
    if (sgn(factor) == 0) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * factor);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Linear scaled(const Scalar& factor) const {
    Linear out;
    if (sgn(factor) == 0) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * factor);
    return out;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Linear& a, const Linear& b) { return !(a == b); }
  friend Linear operator+(Linear a, const Linear& b) {
    a.add(b);
    return a;
  }
  friend Linear operator-(Linear a, const Linear& b) {
    a.add(b, -1);
    return a;
  }

 private:
  Map terms_;
};

using Element = Linear<Word>;
using BarElement = Linear<BarWord>;

inline Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace hochlab
