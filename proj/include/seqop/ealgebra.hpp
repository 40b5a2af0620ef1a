#pragma once
#include "seqop/operad.hpp"
#include <memory>
#include <string>

// Algebras over the sequence operad.  Basis elements are interned ints; act
// applies an operation to basis arguments and carries every internal sign, so
// linear extension (act_lin) multiplies coefficients with no sign bookkeeping.

namespace seqop {

using ASum = Sum<int>;  // formal sum of algebra basis elements

class EAlgebra {
public:
    virtual ~EAlgebra() = default;
    virtual int degree(int id) const = 0;
    virtual ASum differential(int id) const = 0;
    // f(x_1..x_k) for basis arguments, arity(f) = k
    virtual ASum act(const Seq& f, const std::vector<int>& xs) const = 0;
    virtual std::string show(int id) const = 0;
    // basis elements of a given degree, for algebras that can enumerate them
    virtual std::vector<int> basis(int deg) const;

    ASum differential(const ASum& x) const;
};

ASum act_lin(const EAlgebra& A, const OpSum& ops, const std::vector<ASum>& args);

// The free algebra on graded generators: basis pairs (g, y_1..y_n) with g an
// operad element of arity n and y_i generators, y's sorted, identified along
// the symmetric action on repeated generators (orbits with a sign conflict
// collapse to zero).
class FreeEAlgebra : public EAlgebra {
public:
    // returns the basis id of the generator's unit word
    int add_generator(const std::string& name, int deg);
    // assign d(generator); terms must have degree deg + 1
    void set_differential(int gen_basis_id, const ASum& da);

    // the element g(y_1..y_n) for generator basis ids; empty when the
    // symmetric identification kills it
    ASum element(const Seq& g, const std::vector<int>& gen_words) const;

    int degree(int id) const override;
    ASum differential(int id) const override;
    using EAlgebra::differential;
    ASum act(const Seq& f, const std::vector<int>& xs) const override;
    std::string show(int id) const override;
    // every surviving canonical element of the given degree (finite since
    // generators have positive degree and operations add theirs)
    std::vector<int> basis(int deg) const override;

private:
    struct Basis {
        Seq g;
        std::vector<int> ys;  // generator indices
        auto operator<=>(const Basis&) const = default;
    };

    int intern(const Basis& b) const;
    // canonical form of (g, ys) with coefficient c
    std::pair<Basis, long long> canonical(Seq g, std::vector<int> ys,
                                          long long c) const;

    std::vector<std::string> names_;
    std::vector<int> gdeg_;
    std::vector<ASum> dgen_;
    mutable std::vector<Basis> pool_;
    mutable std::map<Basis, int> index_;
};

}  // namespace seqop
