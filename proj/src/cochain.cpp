#include "seqop/cochain.hpp"
#include <functional>
#include <stdexcept>

namespace seqop {

CochainAlgebra::CochainAlgebra(const FiniteSimplicialSet& X, bool reduced)
    : X_(&X), reduced_(reduced) {
    if (reduced && !X.basepoint())
        throw std::invalid_argument("reduced cochains need a basepoint");
}

int CochainAlgebra::cochain_id(int dim, int idx) const {
    X_->name(dim, idx);  // range check
    if (reduced_ && dim == 0 && idx == *X_->basepoint())
        throw std::invalid_argument("the basepoint dual is not a reduced cochain");
    auto key = std::pair{dim, idx};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    pool_.push_back(key);
    index_.emplace(key, (int)pool_.size() - 1);
    return (int)pool_.size() - 1;
}

std::pair<int, int> CochainAlgebra::simplex_of(int id) const {
    return pool_.at(id);
}

int CochainAlgebra::degree(int id) const { return pool_.at(id).first; }

ASum CochainAlgebra::differential(int id) const {
    const auto [n, idx] = pool_.at(id);
    ASum out;
    for (int y = 0; y < X_->count(n + 1); ++y) {
        long long c = 0;
        for (int j = 0; j <= n + 1; ++j) {
            DegSimplex fj = X_->face(n + 1, y, j);
            if (fj.nondegenerate() && fj.base_id == idx) c += sign_pow(j);
        }
        if (c != 0) add_term(out, cochain_id(n + 1, y), c);
    }
    return out;
}

ASum CochainAlgebra::act(const Seq& f, const std::vector<int>& xs) const {
    const int m = (int)f.size();
    const int k = arity(f);
    if ((int)xs.size() != k) throw std::invalid_argument("act: arity mismatch");
    if (m == 0 || !is_nondeg(f, k))
        throw std::invalid_argument("act: not a basis operation");
    long long qsum = 0;
    std::vector<int> qs(k);
    for (int i = 0; i < k; ++i) {
        qs[i] = degree(xs[i]);
        qsum += qs[i];
    }
    ASum out;
    const long long N = qsum - seqop::degree(f);
    if (N < 0 || N > X_->top_dimension()) return out;
    long long glob = 0;
    {
        const std::vector<int> fib = fiber_sizes(f, k);
        long long before = 0;
        for (int i = 0; i < k; ++i) {
            glob += (long long)(fib[i] - 1) * before;
            before += qs[i];
        }
    }
    for (int y = 0; y < X_->count((int)N); ++y) {
        if (reduced_ && N == 0 && y == *X_->basepoint()) continue;
        const DegSimplex top = X_->nondeg((int)N, y);
        long long coeff = 0;
        std::vector<int> cut(m + 1, 0);
        cut[m] = (int)N;
        std::function<void(int)> walk = [&](int q) {
            if (q == m) {
                std::vector<std::vector<int>> A(k + 1);
                long long s = glob;
                std::vector<int> dims(m);
                for (int t = 0; t < m; ++t) {
                    dims[t] = cut[t + 1] - cut[t];
                    auto& ai = A[f[t]];
                    int start = cut[t];
                    if (!ai.empty() && ai.back() == start) start++;
                    for (int v = start; v <= cut[t + 1]; ++v) ai.push_back(v);
                    for (int t2 = t + 1; t2 < m; ++t2)
                        if (f[t2] == f[t]) {
                            s += (long long)ai.size() - 1;
                            break;
                        }
                }
                for (int i = 1; i <= k; ++i) {
                    DegSimplex r = X_->restrict(top, A[i]);
                    const auto& [di, xi] = pool_[xs[i - 1]];
                    if (!r.nondegenerate() || r.base_dim != di ||
                        r.base_id != xi)
                        return;
                }
                for (int t = 0; t < m; ++t)
                    for (int t2 = t + 1; t2 < m; ++t2)
                        if (f[t] > f[t2]) s += (long long)dims[t] * dims[t2];
                coeff += sign_pow(s);
                return;
            }
            for (int v = cut[q - 1]; v <= (int)N; ++v) {
                cut[q] = v;
                walk(q + 1);
            }
        };
        walk(1);
        if (coeff != 0) add_term(out, cochain_id((int)N, y), coeff);
    }
    return out;
}

std::string CochainAlgebra::show(int id) const {
    const auto [n, idx] = pool_.at(id);
    return X_->name(n, idx) + "*";
}

std::vector<int> CochainAlgebra::basis(int deg) const {
    std::vector<int> out;
    if (deg < 0) return out;
    for (int idx = 0; idx < X_->count(deg); ++idx) {
        if (reduced_ && deg == 0 && idx == *X_->basepoint()) continue;
        out.push_back(cochain_id(deg, idx));
    }
    return out;
}

Mat cochain_boundary_matrix(const CochainAlgebra& A, int n, long long p) {
    const std::vector<int> src = A.basis(n);
    const std::vector<int> dst = A.basis(n + 1);
    std::map<int, int> row;
    for (int i = 0; i < (int)dst.size(); ++i) row[dst[i]] = i;
    Mat M(dst.size(), Vec(src.size(), 0));
    for (int j = 0; j < (int)src.size(); ++j)
        for (const auto& [id, c] : A.differential(src[j]))
            M[row.at(id)][j] = mod(c, p);
    return M;
}

HomologySlice cochain_homology(const CochainAlgebra& A, int n, long long p) {
    if (n < 0) throw std::invalid_argument("cochain_homology: negative degree");
    Mat d_in;
    if (n == 0) {
        d_in.assign(A.basis(0).size(), Vec{});
    } else {
        d_in = cochain_boundary_matrix(A, n - 1, p);
    }
    return homology_slice(d_in, cochain_boundary_matrix(A, n, p), p);
}

LoopCohomologyTable loop_cohomology(const FiniteSimplicialSet& X, long long p,
                                    int cutoff) {
    if (!X.basepoint())
        throw std::invalid_argument("loop_cohomology: the space must be pointed");
    if (X.count(1) > 0)
        throw std::invalid_argument(
            "loop_cohomology: nondegenerate 1-simplices present");
    if (cutoff < 1)
        throw std::invalid_argument("loop_cohomology: cutoff must be positive");
    CochainAlgebra A(X, true);
    BarComplex C(A, cutoff);
    BarCohomology H(C, p);
    PhiTable tab = build_phi((int)p, cutoff - 1);
    LoopCohomologyTable out;
    out.p = p;
    out.cutoff = cutoff;
    for (int n = 0; n <= H.top_degree(); ++n) out.dims.push_back(H.dim(n));
    for (int q = 1; q <= H.top_degree(); ++q) {
        if (p * q + 1 > cutoff) break;  // operations certifiable up to here
        for (int j = 0; j < H.dim(q); ++j) {
            CohomologyClass c{q, Vec(H.dim(q), 0)};
            c.coords[j] = 1;
            const int smax = (p == 2) ? q + 1 : q / 2;
            for (int s = 0; s <= smax; ++s) {
                const int target =
                    (p == 2) ? q + s : q + 2 * s * ((int)p - 1);
                if (target > H.top_degree()) break;
                out.ops.push_back({q, j, s, false, target,
                                   steenrod_P(H, tab, s, c).coords});
                if (p > 2 && target + 1 <= H.top_degree())
                    out.ops.push_back({q, j, s, true, target + 1,
                                       steenrod_beta_P(H, tab, s, c).coords});
            }
        }
    }
    return out;
}

}  // namespace seqop
