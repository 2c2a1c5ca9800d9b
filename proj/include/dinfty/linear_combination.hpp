#pragma once

#include "dinfty/exact.hpp"

#include <map>

namespace dinfty {

/// Finite formal sum of keys with rational coefficients. Zero coefficients are
/// dropped eagerly, so two combinations are equal iff their term maps are.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, BigRat>;

  LinearCombination() = default;

  static LinearCombination single(const Key& key, const BigRat& coeff = 1) {
    LinearCombination r;
    r.add(key, coeff);
    return r;
  }

  void add(const Key& key, const BigRat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigRat coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const BigRat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const BigRat& c) { return a *= c; }
  friend LinearCombination operator*(const BigRat& c, LinearCombination a) { return a *= c; }
  LinearCombination operator-() const { return LinearCombination(*this) *= BigRat(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace dinfty
