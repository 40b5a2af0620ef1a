#include "seqop/diagonal.hpp"

#include "seqop/operad.hpp"

#include <set>

namespace seqop {

namespace {

long long delta_exponent(const Seq& f, const PosSet& S1, const PosSet& S2,
                         int k) {
    std::vector<long long> n1(k + 1, 0), n2(k + 1, 0);
    for (int q : S1) n1[f[q]] += 1;
    for (int q : S2) n2[f[q]] += 1;
    auto nrm = [](long long n) { return n > 0 ? n - 1 : 0; };
    long long t = 0;
    for (int i = 1; i <= k; ++i)
        for (int i2 = 1; i2 < i; ++i2) t += nrm(n1[i]) * nrm(n2[i2]);
    return t;
}

}  // namespace

TensorOpSum diagonal(const Seq& f) {
    const int k = arity(f);
    TensorOpSum out;
    for (auto& S : value_covers(f, 2)) {
        bool full = true;
        for (auto& Sj : S) {
            std::set<int> vals;
            for (int q : Sj) vals.insert(f[q]);
            if ((int)vals.size() != k) {
                full = false;
                break;
            }
        }
        if (!full) continue;
        auto a = restrict_to(f, S[0]);
        auto b = restrict_to(f, S[1]);
        if (!a || !b) continue;
        add_term(out, TensorOp{*a, *b},
                 sign_pow(delta_exponent(f, S[0], S[1], k)));
    }
    return out;
}

TensorOpSum diagonal(const OpSum& x) {
    TensorOpSum out;
    for (auto& [f, c] : x) add(out, diagonal(f), c);
    return out;
}

TensorOpSum tensor_boundary(const TensorOpSum& x) {
    TensorOpSum out;
    for (auto& [t, c] : x) {
        auto& [a, b] = t;
        for (auto& [a2, c2] : boundary(a)) add_term(out, TensorOp{a2, b}, c * c2);
        long long s = sign_pow(degree(a));
        for (auto& [b2, c2] : boundary(b))
            add_term(out, TensorOp{a, b2}, c * c2 * s);
    }
    return out;
}

TensorOpSum tensor_gamma(const TensorOpSum& g,
                         const std::vector<TensorOpSum>& args) {
    TensorOpSum out;
    const int l = (int)args.size();
    std::vector<std::vector<std::pair<TensorOp, long long>>> items;
    for (auto& a : args) {
        if (a.empty()) return out;
        items.emplace_back(a.begin(), a.end());
    }
    for (auto& [gt, cg] : g) {
        auto& [g1, g2] = gt;
        std::vector<size_t> idx(l, 0);
        for (;;) {
            long long c = cg;
            std::vector<OpSum> as(l), bs(l);
            long long eps = 0, bsum = 0;
            for (int i = 0; i < l; ++i) {
                auto& [t, ct] = items[i][idx[i]];
                c *= ct;
                as[i] = OpSum{{t.first, 1}};
                bs[i] = OpSum{{t.second, 1}};
                eps += (long long)degree(g2) * degree(t.first);
                eps += bsum * degree(t.first);
                bsum += degree(t.second);
            }
            OpSum left = gamma(OpSum{{g1, 1}}, as);
            OpSum right = gamma(OpSum{{g2, 1}}, bs);
            long long s = sign_pow(eps) * c;
            for (auto& [la, lc] : left)
                for (auto& [rb, rc] : right)
                    add_term(out, TensorOp{la, rb}, s * lc * rc);
            int i = l - 1;
            while (i >= 0 && ++idx[i] == items[i].size()) {
                idx[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

TensorOpSum tensor_sigma_action(const TensorOpSum& x,
                                const std::vector<int>& sigma) {
    TensorOpSum out;
    for (auto& [t, c] : x) {
        for (auto& [a2, c2] : sigma_action(t.first, sigma))
            for (auto& [b2, c3] : sigma_action(t.second, sigma))
                add_term(out, TensorOp{a2, b2}, c * c2 * c3);
    }
    return out;
}

std::string show_tensor_sum(const TensorOpSum& x) {
    return show_sum<TensorOp>(x, [](const TensorOp& t) {
        return show_seq(t.first) + " (x) " + show_seq(t.second);
    });
}

int TensorEAlgebra::pair_id(int a, int b) const {
    auto key = std::make_pair(a, b);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = (int)pool_.size();
    pool_.push_back(key);
    index_.emplace(key, id);
    return id;
}

std::pair<int, int> TensorEAlgebra::factors(int id) const {
    return pool_.at(id);
}

int TensorEAlgebra::degree(int id) const {
    auto [a, b] = factors(id);
    return A_.degree(a) + B_.degree(b);
}

ASum TensorEAlgebra::differential(int id) const {
    auto [a, b] = factors(id);
    ASum out;
    for (auto& [a2, c] : A_.differential(a)) add_term(out, pair_id(a2, b), c);
    long long s = sign_pow(A_.degree(a));
    for (auto& [b2, c] : B_.differential(b))
        add_term(out, pair_id(a, b2), c * s);
    return out;
}

ASum TensorEAlgebra::act(const Seq& f, const std::vector<int>& xs) const {
    const int k = arity(f);
    std::vector<int> as(k), bs(k);
    for (int i = 0; i < k; ++i) {
        auto [a, b] = factors(xs[i]);
        as[i] = a;
        bs[i] = b;
    }
    ASum out;
    for (auto& [t, c] : diagonal(f)) {
        auto& [g1, g2] = t;
        const long long g2deg = seqop::degree(g2);
        long long eps = 0, bsum = 0;
        for (int i = 0; i < k; ++i) {
            eps += g2deg * A_.degree(as[i]);
            eps += bsum * A_.degree(as[i]);
            bsum += B_.degree(bs[i]);
        }
        ASum left = A_.act(g1, as);
        if (left.empty()) continue;
        ASum right = B_.act(g2, bs);
        long long s = c * sign_pow(eps);
        for (auto& [la, lc] : left)
            for (auto& [rb, rc] : right)
                add_term(out, pair_id(la, rb), s * lc * rc);
    }
    return out;
}

std::string TensorEAlgebra::show(int id) const {
    auto [a, b] = factors(id);
    return A_.show(a) + " (x) " + B_.show(b);
}

}  // namespace seqop
