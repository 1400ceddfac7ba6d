/** @file determinant.hpp
 *  Both sides of the Jacobi-Trudi determinant.
 */
#pragma once

#include "dnjt/core.hpp"

namespace dnjt {

/// det(h_{lambda_i-mu_j-i+j, a+2(lambda_i-i)}), l = l(lambda).
ZPolynomial jt_det_h(const SkewDiagram& d, int n);
/// det(e_{lambda'_i-mu'_j-i+j, a-2(mu'_j-j+1)}), l' = lambda_1.
ZPolynomial jt_det_e(const SkewDiagram& d, int n);
/// Same h-side determinant computed on an l x l matrix with l >= l(lambda).
ZPolynomial jt_det_h_padded(const SkewDiagram& d, int n, int l);

/// Laplace expansion along the first column, minors memoized by row set.
ZPolynomial determinant(const std::vector<std::vector<ZPolynomial>>& m);

}  // namespace dnjt
