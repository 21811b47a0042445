#include "mpanf/ols.hpp"

#include "mpanf/error.hpp"

#include <cmath>
#include <string>

namespace mpanf {

std::vector<double> least_squares(std::span<const double> design, std::size_t columns,
                                  std::span<const double> response) {
	if (columns == 0 || design.size() != columns * response.size()) {
		throw Error(ErrorCode::LengthMismatch, "design matrix does not match response length");
	}
	const std::size_t rows = response.size();
	if (rows < columns) {
		throw Error(ErrorCode::SingularDesign, "fewer rows than columns");
	}

	// Normal equations, lower triangle of A = X'X and b = X'y.
	std::vector<double> a(columns * columns, 0.0);
	std::vector<double> b(columns, 0.0);
	for (std::size_t r = 0; r < rows; ++r) {
		const double *x = design.data() + r * columns;
		for (std::size_t i = 0; i < columns; ++i) {
			b[i] += x[i] * response[r];
			for (std::size_t j = 0; j <= i; ++j) {
				a[i * columns + j] += x[i] * x[j];
			}
		}
	}

	// In-place Cholesky A = L L'.
	for (std::size_t j = 0; j < columns; ++j) {
		const double scale = a[j * columns + j];
		double diag = scale;
		for (std::size_t k = 0; k < j; ++k) {
			diag -= a[j * columns + k] * a[j * columns + k];
		}
		if (!(diag > 1e-12 * scale) || !std::isfinite(diag)) {
			throw Error(ErrorCode::SingularDesign, "normal matrix is not positive definite at column " +
			                                           std::to_string(j));
		}
		const double l = std::sqrt(diag);
		a[j * columns + j] = l;
		for (std::size_t i = j + 1; i < columns; ++i) {
			double v = a[i * columns + j];
			for (std::size_t k = 0; k < j; ++k) {
				v -= a[i * columns + k] * a[j * columns + k];
			}
			a[i * columns + j] = v / l;
		}
	}

	// L z = b, then L' beta = z.
	std::vector<double> beta(columns);
	for (std::size_t i = 0; i < columns; ++i) {
		double v = b[i];
		for (std::size_t k = 0; k < i; ++k) {
			v -= a[i * columns + k] * beta[k];
		}
		beta[i] = v / a[i * columns + i];
	}
	for (std::size_t i = columns; i-- > 0;) {
		double v = beta[i];
		for (std::size_t k = i + 1; k < columns; ++k) {
			v -= a[k * columns + i] * beta[k];
		}
		beta[i] = v / a[i * columns + i];
	}
	return beta;
}

} // namespace mpanf
