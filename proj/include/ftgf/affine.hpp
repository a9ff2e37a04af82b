#pragma once

#include <span>
#include <vector>

#include "ftgf/field.hpp"

namespace ftgf {

/// Evaluates a GF(2)-linear map L at y from its images on the coordinate
/// basis: L(y) = sum over set coordinate bits y_k of images[k].
FieldElement linearized_eval(const FieldContext& ctx, std::span<const FieldElement> images, FieldElement y);

/// Solves L(y) = beta as an m x m linear system over GF(2) whose columns are
/// the coordinate vectors of the basis images. Returns every solution (an
/// affine subspace of size 2^nullity, or empty), each verified by
/// substitution, sorted by coordinates.
std::vector<FieldElement> affine_solve(const FieldContext& ctx, std::span<const FieldElement> images,
                                       FieldElement beta);

/// Basis images of the map z -> z^2 + z (used to solve normalized quadratics).
std::vector<FieldElement> square_plus_identity_images(const FieldContext& ctx);

}  // namespace ftgf
