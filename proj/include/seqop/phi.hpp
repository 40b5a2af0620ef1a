#pragma once
#include "seqop/bar.hpp"
#include "seqop/coefficients.hpp"

// The chain maps Phi_k: E(k) (x) (BA)^k -> BA.  A single operation f acts on
// bar words by summing over all l-indices (E, S): each slot j contributes the
// factor C(f_{S_j}; E_j) applied to the letters selected by E_j, and the slots
// are concatenated into one bar word with the interchange sign kappa.

namespace seqop {

// f applied to arity(f) bar words over A; zero when some slot degenerates
BarSum phi(const EAlgebra& A, const Seq& f, const std::vector<Word>& words);

// linear extension to sums of operations and sums of words
BarSum phi_lin(const EAlgebra& A, const OpSum& ops,
               const std::vector<BarSum>& words);

// concatenation product on the operad: g's values shifted past arity(f)
Seq concat_prod(const Seq& f, const Seq& g);

// expansion of C(f.g; ps ++ qs) over the l-indices of g: each term composes
// C((12); 1, l) with C(f; ps) and the slot coefficients of g, realigned by
// sigma_alpha and signed by the interchange exponent varpi
OpSum concat_coefficient_rhs(const Seq& f, const Seq& g,
                             const std::vector<int>& ps,
                             const std::vector<int>& qs);

// the product on BA induced by the identity operation (12)
BarSum bar_product(const EAlgebra& A, const BarSum& a, const BarSum& b);

}  // namespace seqop
