#pragma once

#include "dinfty/laurent.hpp"

#include <vector>

namespace dinfty {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Exact determinant over the Laurent ring. Sizes up to kCofactorLimit use
/// cofactor expansion; larger ones use fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for a non-square matrix.
LaurentPoly laurent_det(const LaurentMatrix& m);

inline constexpr std::size_t kCofactorLimit = 8;

// Both strategies are exposed so they can be compared against each other.
LaurentPoly laurent_det_cofactor(const LaurentMatrix& m);
LaurentPoly laurent_det_bareiss(const LaurentMatrix& m);

}  // namespace dinfty
