#pragma once
#include "seqop/indexing.hpp"
#include "seqop/operad.hpp"

// The coefficient elements C(f; e^1..e^k): for f of arity k and copy counts
// e = (e_1..e_k) an element of the operad in arity sum(e), defined by a
// recursion over the differential and two-slot splittings.  The recursion is
// C(f; e) = s_a(X1 + X2) with a = sum(e_i over i < f(1)) + 1, X1 the
// differential contribution and X2 the signed sum over two-slot index pairs;
// d C = X1 + X2 + X3 with X3 the copy-merging terms.

namespace seqop {

// interchange sign exponent for a two-slot splitting
long long theta_exponent(const Seq& f, const Block& E1, const Block& E2,
                         const PosSet& S1, const PosSet& S2);

const OpSum& coefficient(const Seq& f, const std::vector<int>& es);
OpSum coeff_x1(const Seq& f, const std::vector<int>& es);
OpSum coeff_x2(const Seq& f, const std::vector<int>& es);
OpSum coeff_x3(const Seq& f, const std::vector<int>& es);

std::size_t coefficient_cache_size();
void clear_coefficient_cache();

// block permutation of the copies induced by sigma on the arguments, and the
// Koszul exponent of the transport identity
// C(f diamond sigma; e) * c = (-1)^xi (C(f; e sigma) diamond block_perm)
std::vector<int> block_perm(const std::vector<int>& sigma,
                            const std::vector<int>& es);
long long xi_exponent(const std::vector<int>& sigma, const std::vector<int>& es);

// necessary conditions on a support term g of C(f; e): boundary values
// repeat, singleton values are flanked by equal neighbors, each argument
// block appears in nondecreasing order, and pairwise complexity grows by at
// most one over that of f
bool structural_check(const Seq& f, const std::vector<int>& es, const Seq& g);

}  // namespace seqop
