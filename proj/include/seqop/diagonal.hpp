#pragma once
#include "seqop/ealgebra.hpp"
#include "seqop/indexing.hpp"

// The diagonal E -> E (x) E: sum over valuewise overlapping partitions into
// two pieces, both surjective, with the interchange sign on fiber degrees.
// Through it a pair of algebras becomes an algebra on tensor-product pairs.

namespace seqop {

using TensorOp = std::pair<Seq, Seq>;
using TensorOpSum = Sum<TensorOp>;

TensorOpSum diagonal(const Seq& f);
TensorOpSum diagonal(const OpSum& x);

// differential of the tensor square, Koszul sign past the first factor
TensorOpSum tensor_boundary(const TensorOpSum& x);

// composition on the tensor square; the second factors pass the first-factor
// arguments with a Koszul interchange
TensorOpSum tensor_gamma(const TensorOpSum& g,
                         const std::vector<TensorOpSum>& args);

// simultaneous symmetric action on both factors
TensorOpSum tensor_sigma_action(const TensorOpSum& x,
                                const std::vector<int>& sigma);

std::string show_tensor_sum(const TensorOpSum& x);

// A (x) B with basis pairs of ids; operations route the first leg of the
// diagonal to A and the second to B
class TensorEAlgebra : public EAlgebra {
public:
    TensorEAlgebra(const EAlgebra& A, const EAlgebra& B) : A_(A), B_(B) {}
    int pair_id(int a, int b) const;
    std::pair<int, int> factors(int id) const;
    int degree(int id) const override;
    ASum differential(int id) const override;
    using EAlgebra::differential;
    ASum act(const Seq& f, const std::vector<int>& xs) const override;
    std::string show(int id) const override;

private:
    const EAlgebra& A_;
    const EAlgebra& B_;
    mutable std::vector<std::pair<int, int>> pool_;
    mutable std::map<std::pair<int, int>, int> index_;
};

}  // namespace seqop
