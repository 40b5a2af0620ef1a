#include "seqop/modp.hpp"
#include "seqop/formal.hpp"
#include <stdexcept>

namespace seqop {

long long mod_inverse(long long a, long long p) {
    a = mod(a, p);
    if (a == 0) throw std::invalid_argument("mod_inverse: not invertible");
    long long r = 1, b = a, e = p - 2;  // Fermat, p prime
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::vector<int> row_reduce(Mat& M, long long p) {
    const int rows = (int)M.size();
    const int cols = rows ? (int)M[0].size() : 0;
    for (auto& row : M)
        for (auto& v : row) v = mod(v, p);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        long long iv = mod_inverse(M[r][c], p);
        for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * iv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            long long f = M[i][c];
            for (int j = c; j < cols; ++j)
                M[i][j] = mod(M[i][j] - f * M[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int matrix_rank(Mat M, long long p) { return (int)row_reduce(M, p).size(); }

std::vector<Vec> kernel_basis(const Mat& M, int cols, long long p) {
    Mat R = M;
    std::vector<int> piv = row_reduce(R, p);
    std::vector<int> pivrow(cols, -1);
    for (int i = 0; i < (int)piv.size(); ++i) pivrow[piv[i]] = i;
    std::vector<Vec> out;
    for (int c = 0; c < cols; ++c) {
        if (pivrow[c] >= 0) continue;
        Vec v(cols, 0);
        v[c] = 1;
        for (int j = 0; j < c; ++j)
            if (pivrow[j] >= 0) v[j] = mod(-R[pivrow[j]][c], p);
        out.push_back(v);
    }
    return out;
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& cols, const Vec& b,
                                 long long p) {
    const int n = (int)b.size();
    const int k = (int)cols.size();
    Mat A(n, Vec(k + 1, 0));
    for (int j = 0; j < k; ++j) {
        if ((int)cols[j].size() != n)
            throw std::invalid_argument("solve_in_span: column length");
        for (int i = 0; i < n; ++i) A[i][j] = mod(cols[j][i], p);
    }
    for (int i = 0; i < n; ++i) A[i][k] = mod(b[i], p);
    std::vector<int> piv = row_reduce(A, p);
    Vec x(k, 0);
    for (int i = 0; i < (int)piv.size(); ++i) {
        if (piv[i] == k) return std::nullopt;  // pivot in the constant column
        x[piv[i]] = A[i][k];
    }
    return x;
}

}  // namespace seqop
