#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include "phin/function_expr.hpp"
#include "phin/haar.hpp"

namespace phin {

/// phi+_{j,k}(t): 1/2 on +-[k/2^j, (k+1)/2^j), zero elsewhere.
double atom_even_eval(HaarIndex idx, double t);

/// <phi+_{j,k}, phi+_{j,k2}> = delta_{k,k2} 2^-j / 2.
double gram_even(int j, long k, long k2);

/// Sampling used by project(): `size` cell-centred points on [-L, L], where L
/// is the smallest value >= span_factor times the atom range that aligns
/// dyadic cells with whole numbers of samples.
struct ProjectionGrid {
  std::size_t size = std::size_t{1} << 14;
  double span_factor = 1.5;
};

/// Coefficients of f at level j for k = 0..kmax: cell averages of the even part,
/// and for the odd part -<H f-, phi+> / (2^-j/2). H f- is taken from the fine
/// cell means of f- by a zero-padded convolution with the exact cell-to-cell
/// Hilbert kernel, plus a moment expansion of the part of f- beyond the grid.
/// RangeError when the grid cannot resolve kmax + 1 cells.
HaarCoeffs project(const FunctionExpr& f, int j, long kmax, const ProjectionGrid& grid = {});

/// sum even[k] phi+_{j,k}(t) + odd[k] psi_{j,k}(t).
std::complex<double> reconstruct_eval(const HaarCoeffs& c, double t);

/// {"j": int, "even": [[re, im], ...], "odd": [[re, im], ...]}.
std::string to_json(const HaarCoeffs& c);
HaarCoeffs haar_coeffs_from_json(const std::string& text);

}  // namespace phin
