#pragma once

#include <vector>

#include "ssp/rational.hpp"

namespace ssp {

// Dense exact rational matrices, row-major.  Sizes here are tiny (lattice
// ranks), so the plain O(n^3) routines are all we need.
using Mat = std::vector<std::vector<Rat>>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
bool mat_is_symmetric(const Mat& a);
bool mat_is_square(const Mat& a);
Rat mat_det(Mat a);              // Gaussian elimination, exact
Mat mat_inverse(const Mat& a);   // throws domain_error when singular
std::vector<Rat> mat_apply(const Mat& a, const std::vector<Rat>& x);

}  // namespace ssp
