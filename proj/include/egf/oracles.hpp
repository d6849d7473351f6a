#pragma once

#include <vector>

#include "egf/eigen_support.hpp"
#include "egf/rational.hpp"

/* Independent reference computations used by tests and the verify suite.
 * Nothing here touches the elimination kernels or the complex machinery it
 * is used to check. */
namespace egf::oracle {

/* coefficients of the Gaussian binomial [n choose k]_q expanded from the
 * product formula ∏_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i) */
std::vector<long long> gaussian_binomial(int n, int k);

/* coefficientwise convolution of two dimension tables */
std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b);

/* Backward gradient-flow cell by floating-point integration of V' = -A V
 * down to t_end (< 0), with periodic re-orthonormalization, followed by a
 * thresholded bottom-up pivot scan. Returns the 1-based row set. */
std::vector<int> numeric_backward_cell(const std::vector<Rational>& spectrum,
                                       const QMatrix& plane, double t_end);

}  // namespace egf::oracle
