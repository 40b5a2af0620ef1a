#pragma once
#include "seqop/bar.hpp"
#include "seqop/modp.hpp"
#include <tuple>

// Steenrod operations on the cohomology of a truncated bar complex.  The
// cyclic group of order p acts on the operad through the rotation T; the
// standard resolution W has cells e_i with d e_{2i+1} = (T - 1) e_{2i} and
// d e_{2i+2} = (1 + T + ... + T^{p-1}) e_{2i+1}.  A chain map W -> E sends
// e_0 to (1 2 .. p) and lifts each boundary image through the contracting
// homotopy; operations are read off by evaluating the images on p copies of
// a cocycle.

namespace seqop {

// d e_i as (T power, cell index, coefficient) terms
std::vector<std::tuple<int, int, long long>> w_boundary(int index, int p);

struct PhiTable {
    int p = 2;
    std::vector<OpSum> cells;  // cells[i] = image of e_i
};

// equivariant chain map on cells e_0..e_top; throws when a lift fails to
// split its boundary (does not happen in the range this library covers)
PhiTable build_phi(int p, int top);

// H^n of one degree of a finite cochain complex slice.  d_in maps C^{n-1}
// into C^n (rows = dim C^n) and d_out maps C^n onward; representatives are
// cocycle coordinate vectors extending a basis of the incoming image.
struct HomologySlice {
    long long p = 0;
    std::vector<Vec> image;
    std::vector<Vec> reps;
    int dim() const { return (int)reps.size(); }
    // class coordinates of a cocycle; throws when the vector is not one
    Vec reduce(const Vec& cocycle) const;
};

// validates that d_out composed with d_in vanishes mod p and rejects otherwise
HomologySlice homology_slice(const Mat& d_in, const Mat& d_out, long long p);

// the bar complex of an algebra with enumerable basis, truncated at bar
// degree cap: slices hold every word whose letters the algebra provides
class BarComplex {
public:
    BarComplex(const EAlgebra& A, int cap);
    const EAlgebra& algebra() const { return *A_; }
    int cap() const { return cap_; }
    const std::vector<Word>& slice(int n) const;
    // coordinates in the degree-n slice, coefficients reduced mod p
    Vec coords(int n, const BarSum& x, long long p) const;
    BarSum from_coords(int n, const Vec& v) const;
    // matrix of the bar differential from slice n to slice n + 1, n < cap
    Mat boundary_matrix(int n, long long p) const;

private:
    const EAlgebra* A_;
    int cap_;
    std::vector<std::vector<Word>> slices_;
    std::vector<std::map<Word, int>> index_;
};

// cohomology of the truncation in degrees 0..cap-1 over Z/p
class BarCohomology {
public:
    BarCohomology(const BarComplex& C, long long p);
    const BarComplex& complex() const { return *C_; }
    long long prime() const { return p_; }
    int top_degree() const { return C_->cap() - 1; }
    int dim(int n) const;
    BarSum representative(int n, int j) const;
    bool is_cocycle(int n, const BarSum& x) const;
    Vec class_of(int n, const BarSum& cocycle) const;

private:
    const BarComplex* C_;
    long long p_;
    std::vector<HomologySlice> h_;
};

struct CohomologyClass {
    int degree = 0;
    Vec coords;
};

// nu(q) = (-1)^{m q(q-1)/2} (m!)^q mod p with m = (p-1)/2
long long nu_factor(int q, long long p);

// D_i(c): the class of the table cell e_i evaluated on p copies of a
// representative; lands in degree p*deg(c) - i, zero when i < 0.  Throws
// when the truncation cannot certify the answer (cap must exceed p*deg(c)).
CohomologyClass steenrod_D(const BarCohomology& H, const PhiTable& tab, int i,
                           const CohomologyClass& c);

// P^s (Sq^s at p = 2) and the Bockstein composite beta P^s (odd p only)
CohomologyClass steenrod_P(const BarCohomology& H, const PhiTable& tab, int s,
                           const CohomologyClass& c);
CohomologyClass steenrod_beta_P(const BarCohomology& H, const PhiTable& tab,
                                int s, const CohomologyClass& c);

}  // namespace seqop
