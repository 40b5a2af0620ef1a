#pragma once
#include "seqop/surjection.hpp"

// The sequence operad: differential, symmetric action, composition, and the
// arity-lowering maps r_a, iota_a, s_a with their contracting homotopy H.
// Every sign convention here is pinned by the identity suites in the tests
// (d^2 = 0, ds_a + s_a d = id + iota_a r_a, Leibniz, gamma associativity).

namespace seqop {

// d f = sum_q (-1)^{pre(f(q)) + pos(q)} (f minus entry q), degenerate terms dropped;
// pre(v) = sum_{i<v} (|f^-1(i)| - 1), pos(q) = number of earlier entries equal to f(q)
OpSum boundary(const Seq& f);
OpSum boundary(const OpSum& x);

// right action f . sigma: values relabeled by sigma^-1, Koszul sign over the
// inversions of sigma weighted by the block degrees |f^-1(v)| - 1
OpSum sigma_action(const Seq& f, const std::vector<int>& sigma);
OpSum sigma_action(const OpSum& x, const std::vector<int>& sigma);

// s_a prepends a with sign (-1)^{sum_{i<a}(|f^-1(i)|-1)}, zero if f starts with a;
// iota_a shifts values >= a up and prepends a; r_a deletes a unique occurrence of a
// (zero otherwise), shifts values > a down, and carries the homotopy sign -1
OpSum s_a(const Seq& f, int a);
OpSum iota_a(const Seq& f, int a);
OpSum r_a(const Seq& f, int a);
OpSum contracting_H(const OpSum& x);

template <class F>
inline OpSum op_mapped(const OpSum& x, F op) {
    return mapped<Seq>(x, op);
}

// operad composition gamma(g; f_1..f_l), l = arity(g); the word model splits the
// j-th argument over the occurrences of value j in g via overlapping partitions
OpSum gamma(const Seq& g, const std::vector<Seq>& fs);
OpSum gamma(const OpSum& g, const std::vector<OpSum>& fs);

// partial composition x o_i y and full composition (gamma against units elsewhere)
OpSum compose(const OpSum& x, int i, const OpSum& y);
OpSum full_compose(const OpSum& x, const std::vector<OpSum>& ys);

inline int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

inline std::vector<int> perm_inverse(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = (int)i + 1;
    return inv;
}

inline std::vector<int> identity_perm(int k) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i + 1;
    return p;
}

}  // namespace seqop
