#pragma once
#include <optional>
#include <vector>

// Dense linear algebra over Z/p.  A matrix is a vector of rows acting on
// coordinate columns; entries are kept reduced to [0, p).

namespace seqop {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

long long mod_inverse(long long a, long long p);

// in-place reduced row echelon form; returns the pivot column of each pivot row
std::vector<int> row_reduce(Mat& M, long long p);

int matrix_rank(Mat M, long long p);

// basis of {x : Mx = 0}; cols is passed explicitly so M may have no rows
std::vector<Vec> kernel_basis(const Mat& M, int cols, long long p);

// coefficients x with sum_j x_j cols[j] = b, or nullopt when b is outside the span
std::optional<Vec> solve_in_span(const std::vector<Vec>& cols, const Vec& b,
                                 long long p);

}  // namespace seqop
