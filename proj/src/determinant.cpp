#include "dinfty/determinant.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace dinfty {

namespace {

std::size_t checked_size(const LaurentMatrix& m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("laurent_det: matrix is not square");
  return k;
}

}  // namespace

// Laplace expansion along rows, memoized on the set of columns still free:
// minor[S] is the determinant of the bottom |S| rows restricted to columns S.
LaurentPoly laurent_det_cofactor(const LaurentMatrix& m) {
  const std::size_t k = checked_size(m);
  if (k == 0) return LaurentPoly(1);
  if (k > 20) throw std::invalid_argument("laurent_det_cofactor: matrix too large");
  const std::uint32_t full = (1u << k) - 1u;
  std::vector<LaurentPoly> minor(std::size_t{1} << k);
  minor[0] = LaurentPoly(1);
  for (std::uint32_t cols = 1; cols <= full; ++cols) {
    const auto count = static_cast<std::size_t>(std::popcount(cols));
    const std::size_t row = k - count;
    LaurentPoly acc;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(cols & (1u << c))) continue;
      const auto& entry = m[row][c];
      const auto& rest = minor[cols & ~(1u << c)];
      if (!entry.is_zero() && !rest.is_zero()) {
        if (sign > 0)
          acc += entry * rest;
        else
          acc -= entry * rest;
      }
      sign = -sign;
    }
    minor[cols] = std::move(acc);
  }
  return minor[full];
}

LaurentPoly laurent_det_bareiss(const LaurentMatrix& input) {
  const std::size_t k = checked_size(input);
  if (k == 0) return LaurentPoly(1);
  LaurentMatrix a = input;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a[swap_row][p].is_zero()) ++swap_row;
      if (swap_row == k) return LaurentPoly();
      std::swap(a[p], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        LaurentPoly num = a[p][p] * a[i][j] - a[i][p] * a[p][j];
        auto q = LaurentPoly::divide_exact(num, prev);
        if (!q) throw std::logic_error("laurent_det_bareiss: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][p] = LaurentPoly();
    }
    prev = a[p][p];
  }
  LaurentPoly det = a[k - 1][k - 1];
  return negate ? -det : det;
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
  const std::size_t k = checked_size(m);
  return k <= kCofactorLimit ? laurent_det_cofactor(m) : laurent_det_bareiss(m);
}

}  // namespace dinfty
