#pragma once
#include "seqop/simplicial.hpp"
#include "seqop/steenrod.hpp"

// Normalized cochains of a finite simplicial set as an algebra over the
// sequence operad.  A surjection f acts through interval cuts: the value of
// f(z_1..z_k) on an N-simplex sums over cut points 0 = n_0 <= .. <= n_m = N,
// evaluating z_i on the face spanned by the intervals with f(q) = i (zero
// whenever that face is degenerate), with the certified sign model: interval
// permutation, inner-interval position, and a per-argument global term.

namespace seqop {

class CochainAlgebra : public EAlgebra {
public:
    // reduced drops the basepoint dual in degree zero (and requires one)
    CochainAlgebra(const FiniteSimplicialSet& X, bool reduced);
    const FiniteSimplicialSet& space() const { return *X_; }
    bool reduced() const { return reduced_; }

    // the dual basis cochain of a nondegenerate simplex
    int cochain_id(int dim, int idx) const;
    std::pair<int, int> simplex_of(int id) const;

    int degree(int id) const override;
    ASum differential(int id) const override;
    using EAlgebra::differential;
    ASum act(const Seq& f, const std::vector<int>& xs) const override;
    std::string show(int id) const override;
    std::vector<int> basis(int deg) const override;

private:
    const FiniteSimplicialSet* X_;
    bool reduced_;
    mutable std::vector<std::pair<int, int>> pool_;
    mutable std::map<std::pair<int, int>, int> index_;
};

// differential matrix of the cochain complex from degree n to n + 1
Mat cochain_boundary_matrix(const CochainAlgebra& A, int n, long long p);
// H^n of the cochain complex over Z/p in the elementary basis
HomologySlice cochain_homology(const CochainAlgebra& A, int n, long long p);

// the loop-space pipeline: bar cohomology of the reduced cochains with its
// operation table; X must be pointed with no nondegenerate 1-simplices
struct OperationEntry {
    int degree = 0;     // degree of the source class
    int index = 0;      // which class in that degree
    int s = 0;          // P^s or Sq^s
    bool bockstein = false;
    int target = 0;     // degree of the value
    Vec value;          // class coordinates of the value
};

struct LoopCohomologyTable {
    long long p = 2;
    int cutoff = 0;
    std::vector<int> dims;  // dim H^n for n = 0..cutoff-1
    std::vector<OperationEntry> ops;
};

LoopCohomologyTable loop_cohomology(const FiniteSimplicialSet& X, long long p,
                                    int cutoff);

}  // namespace seqop
