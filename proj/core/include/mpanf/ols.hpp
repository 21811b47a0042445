#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mpanf {

/// Ordinary least squares via the normal equations X'X b = X'y, factored with Cholesky.
/// `design` is row-major with `columns` entries per row. Throws SingularDesign when X'X
/// is not numerically positive definite.
std::vector<double> least_squares(std::span<const double> design, std::size_t columns,
                                  std::span<const double> response);

} // namespace mpanf
