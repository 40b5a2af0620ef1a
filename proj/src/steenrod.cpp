#include "seqop/steenrod.hpp"
#include "seqop/phi.hpp"
#include <algorithm>
#include <stdexcept>

namespace seqop {

std::vector<std::tuple<int, int, long long>> w_boundary(int index, int p) {
    std::vector<std::tuple<int, int, long long>> out;
    if (index <= 0) return out;
    if (index % 2 == 1) {
        out.push_back({1, index - 1, 1});
        out.push_back({0, index - 1, -1});
    } else {
        for (int j = 0; j < p; ++j) out.push_back({j, index - 1, 1});
    }
    return out;
}

static std::vector<int> rotation(int p) {
    std::vector<int> T(p);
    for (int i = 0; i < p - 1; ++i) T[i] = i + 2;
    T[p - 1] = 1;
    return T;
}

PhiTable build_phi(int p, int top) {
    if (p < 2) throw std::invalid_argument("build_phi: p must be at least 2");
    const std::vector<int> T = rotation(p);
    PhiTable tab;
    tab.p = p;
    Seq e0(p);
    for (int i = 0; i < p; ++i) e0[i] = i + 1;
    OpSum first;
    add_term(first, e0, 1LL);
    tab.cells.push_back(first);
    for (int i = 1; i <= top; ++i) {
        OpSum y;
        for (const auto& [pow, cell, c] : w_boundary(i, p)) {
            OpSum moved = tab.cells[cell];
            for (int t = 0; t < pow; ++t) moved = sigma_action(moved, T);
            add(y, moved, c);
        }
        if (!is_zero(boundary(y)))
            throw std::logic_error("build_phi: boundary image is not a cycle");
        OpSum ph = contracting_H(y);
        if (boundary(ph) != y)
            throw std::logic_error("build_phi: homotopy failed to split");
        tab.cells.push_back(ph);
    }
    return tab;
}

static int rank_of_columns(const std::vector<Vec>& cols, long long p) {
    if (cols.empty()) return 0;
    const int n = (int)cols[0].size();
    Mat M(n, Vec(cols.size(), 0));
    for (int j = 0; j < (int)cols.size(); ++j)
        for (int i = 0; i < n; ++i) M[i][j] = cols[j][i];
    return matrix_rank(M, p);
}

HomologySlice homology_slice(const Mat& d_in, const Mat& d_out, long long p) {
    const int s = (int)d_in.size();
    const int r = s ? (int)d_in[0].size() : 0;
    for (const auto& row : d_out)
        if ((int)row.size() != s)
            throw std::invalid_argument("homology_slice: shape mismatch");
    for (int j = 0; j < r; ++j)
        for (const auto& row : d_out) {
            long long acc = 0;
            for (int i = 0; i < s; ++i) acc += mod(row[i] * d_in[i][j], p);
            if (mod(acc, p) != 0)
                throw std::invalid_argument(
                    "homology_slice: differentials do not compose to zero");
        }
    HomologySlice H;
    H.p = p;
    for (int j = 0; j < r; ++j) {
        Vec col(s);
        for (int i = 0; i < s; ++i) col[i] = mod(d_in[i][j], p);
        H.image.push_back(col);
    }
    std::vector<Vec> span = H.image;
    int rank = rank_of_columns(span, p);
    for (const Vec& z : kernel_basis(d_out, s, p)) {
        span.push_back(z);
        int next = rank_of_columns(span, p);
        if (next > rank) {
            rank = next;
            H.reps.push_back(z);
        } else {
            span.pop_back();
        }
    }
    return H;
}

Vec HomologySlice::reduce(const Vec& cocycle) const {
    std::vector<Vec> cols = image;
    cols.insert(cols.end(), reps.begin(), reps.end());
    auto x = solve_in_span(cols, cocycle, p);
    if (!x)
        throw std::invalid_argument("reduce: vector is not a cocycle here");
    return Vec(x->end() - reps.size(), x->end());
}

BarComplex::BarComplex(const EAlgebra& A, int cap) : A_(&A), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("BarComplex: negative cap");
    std::vector<int> letters;
    for (int d = 2; d <= cap + 1; ++d)
        for (int id : A.basis(d)) letters.push_back(id);
    slices_.resize(cap + 1);
    index_.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        slices_[n] = bar_words(A, letters, n);
        std::sort(slices_[n].begin(), slices_[n].end());
        for (int j = 0; j < (int)slices_[n].size(); ++j)
            index_[n][slices_[n][j]] = j;
    }
}

const std::vector<Word>& BarComplex::slice(int n) const {
    if (n < 0 || n > cap_)
        throw std::invalid_argument("slice: degree outside the truncation");
    return slices_[n];
}

Vec BarComplex::coords(int n, const BarSum& x, long long p) const {
    if (n < 0 || n > cap_)
        throw std::invalid_argument("coords: degree outside the truncation");
    Vec v(slices_[n].size(), 0);
    for (const auto& [w, c] : x) {
        auto it = index_[n].find(w);
        if (it == index_[n].end()) {
            if (mod(c, p) == 0) continue;
            throw std::invalid_argument("coords: word outside the slice");
        }
        v[it->second] = mod(v[it->second] + c, p);
    }
    return v;
}

BarSum BarComplex::from_coords(int n, const Vec& v) const {
    if (n < 0 || n > cap_ || v.size() != slices_[n].size())
        throw std::invalid_argument("from_coords: bad coordinates");
    BarSum out;
    for (int j = 0; j < (int)v.size(); ++j)
        if (v[j] != 0) add_term(out, slices_[n][j], v[j]);
    return out;
}

Mat BarComplex::boundary_matrix(int n, long long p) const {
    if (n < 0 || n >= cap_)
        throw std::invalid_argument("boundary_matrix: target beyond the cap");
    const int s = (int)slices_[n].size();
    const int t = (int)slices_[n + 1].size();
    Mat M(t, Vec(s, 0));
    for (int j = 0; j < s; ++j) {
        Vec col = coords(n + 1, bar_boundary(*A_, slices_[n][j]), p);
        for (int i = 0; i < t; ++i) M[i][j] = col[i];
    }
    return M;
}

BarCohomology::BarCohomology(const BarComplex& C, long long p)
    : C_(&C), p_(p) {
    for (int n = 0; n < C.cap(); ++n) {
        Mat d_in;
        if (n == 0) {
            d_in.assign(C.slice(0).size(), Vec{});
        } else {
            d_in = C.boundary_matrix(n - 1, p);
        }
        h_.push_back(homology_slice(d_in, C.boundary_matrix(n, p), p));
    }
}

int BarCohomology::dim(int n) const {
    if (n < 0 || n > top_degree())
        throw std::invalid_argument("dim: degree outside the truncation");
    return h_[n].dim();
}

BarSum BarCohomology::representative(int n, int j) const {
    if (n < 0 || n > top_degree() || j < 0 || j >= dim(n))
        throw std::invalid_argument("representative: no such class");
    return C_->from_coords(n, h_[n].reps[j]);
}

bool BarCohomology::is_cocycle(int n, const BarSum& x) const {
    if (n < 0 || n > top_degree())
        throw std::invalid_argument("is_cocycle: degree outside the truncation");
    return is_zero(bar_boundary(C_->algebra(), x), p_);
}

Vec BarCohomology::class_of(int n, const BarSum& cocycle) const {
    if (n < 0 || n > top_degree())
        throw std::invalid_argument("class_of: degree outside the truncation");
    return h_[n].reduce(C_->coords(n, cocycle, p_));
}

long long nu_factor(int q, long long p) {
    const long long m = (p - 1) / 2;
    long long fact = 1;
    for (long long i = 2; i <= m; ++i) fact = fact * i % p;
    long long val = 1;
    for (int i = 0; i < q; ++i) val = val * fact % p;
    long long e = m * q * (long long)(q - 1) / 2;
    return mod(sign_pow(e) * val, p);
}

CohomologyClass steenrod_D(const BarCohomology& H, const PhiTable& tab, int i,
                           const CohomologyClass& c) {
    const int p = tab.p;
    const int q = c.degree;
    if (H.prime() != p)
        throw std::invalid_argument("steenrod_D: prime mismatch");
    if ((int)c.coords.size() != H.dim(q))
        throw std::invalid_argument("steenrod_D: class coordinates");
    if ((long long)p * q + 1 > H.complex().cap())
        throw std::domain_error(
            "steenrod_D: truncation too small, cap must exceed p*degree");
    const int target = p * q - i;
    if (target < 0 || target > H.top_degree())
        throw std::domain_error("steenrod_D: result degree outside the range");
    if (i < 0) return {target, Vec(H.dim(target), 0)};
    if (i >= (int)tab.cells.size())
        throw std::invalid_argument("steenrod_D: phi table too short");
    BarSum rep;
    for (int j = 0; j < H.dim(q); ++j)
        add(rep, H.representative(q, j), c.coords[j]);
    BarSum u = phi_lin(H.complex().algebra(), tab.cells[i],
                       std::vector<BarSum>((size_t)p, rep));
    return {target, H.class_of(target, u)};
}

CohomologyClass steenrod_P(const BarCohomology& H, const PhiTable& tab, int s,
                           const CohomologyClass& c) {
    if (s < 0) throw std::invalid_argument("steenrod_P: negative s");
    const int q = c.degree;
    if (tab.p == 2) return steenrod_D(H, tab, q - s, c);
    CohomologyClass out =
        steenrod_D(H, tab, (q - 2 * s) * (tab.p - 1), c);
    long long coeff =
        mod(sign_pow(s) * mod_inverse(nu_factor(q, tab.p), tab.p), tab.p);
    for (auto& v : out.coords) v = v * coeff % tab.p;
    return out;
}

CohomologyClass steenrod_beta_P(const BarCohomology& H, const PhiTable& tab,
                                int s, const CohomologyClass& c) {
    if (tab.p == 2)
        throw std::invalid_argument(
            "steenrod_beta_P: Bockstein composite needs an odd prime");
    if (s < 0) throw std::invalid_argument("steenrod_beta_P: negative s");
    const int q = c.degree;
    CohomologyClass out =
        steenrod_D(H, tab, (q - 2 * s) * (tab.p - 1) - 1, c);
    long long coeff =
        mod(sign_pow(s) * mod_inverse(nu_factor(q, tab.p), tab.p), tab.p);
    for (auto& v : out.coords) v = v * coeff % tab.p;
    return out;
}

}  // namespace seqop
