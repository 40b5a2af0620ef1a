#include "seqop/phi.hpp"

#include <set>
#include <stdexcept>

namespace seqop {

namespace {

// interchange exponent for assembling the slot factors of one l-index into a
// single bar word; letter degrees enter through their bar degrees deg - 1
long long kappa_exponent(const EAlgebra& A, const Seq& f, const Decomp& E,
                         const Cover& S, const std::vector<Word>& words) {
    const int l = (int)E.size();
    const int k = arity(f);
    std::vector<std::vector<int>> eE(l, std::vector<int>(k + 1, 0));
    for (int j = 0; j < l; ++j)
        for (auto& [i, r] : E[j]) eE[j][i] += 1;
    auto ldeg = [&](int i, int r) {
        return (long long)A.degree(words[i - 1][r]) - 1;
    };
    auto exi = [&](int j, int i) {
        long long s = 0;
        for (auto& [i2, r] : E[j])
            if (i2 == i) s += ldeg(i2, r);
        return s;
    };
    auto nfib = [&](int j, int i) {
        long long c = 0;
        for (int q : S[j])
            if (f[q] == i) ++c;
        return c > 0 ? c - 1 : 0;
    };
    auto fSdeg = [&](int j) {
        std::set<int> vals;
        for (int q : S[j]) vals.insert(f[q]);
        return (long long)S[j].size() - (long long)vals.size();
    };
    long long t = 0;
    for (int j = 0; j < l; ++j)
        for (int j2 = j + 1; j2 < l; ++j2)
            for (int i = 1; i <= k; ++i)
                for (int i2 = 1; i2 < i; ++i2)
                    t += nfib(j, i) * nfib(j2, i2) + exi(j, i) * exi(j2, i2);
    for (int j = 0; j < l; ++j)
        for (int j2 = 0; j2 < j; ++j2) {
            long long s = 0;
            for (int i = 1; i <= k; ++i) s += exi(j2, i);
            t += fSdeg(j) * s;
        }
    for (int j = 0; j < l; ++j) {
        for (int i = 1; i <= k; ++i)
            for (int i2 = i; i2 <= k; ++i2)
                t += eE[j][i2] * exi(j, i);
        for (int i = 1; i <= k; ++i) {
            long long tt = 0;
            for (auto& [i2, r] : E[j])
                if (i2 == i) {
                    tt += 1;
                    t += tt * ldeg(i, r);
                }
        }
    }
    return t;
}

// interchange exponent for the concatenation-product expansion of C, in the
// closed form with the global correction (l + p)|g| + p(q - l)
long long varpi_exponent(const Seq& g, const Decomp& E, const Cover& S, int l,
                         int p_tot, int q_tot) {
    const int r = arity(g);
    std::vector<std::vector<long long>> ecnt(l, std::vector<long long>(r + 1, 0));
    std::vector<std::vector<long long>> ncnt(l, std::vector<long long>(r + 1, 0));
    std::vector<long long> gdeg(l, 0), esz(l, 0);
    for (int j = 0; j < l; ++j) {
        for (auto& [i, cp] : E[j]) ecnt[j][i] += 1;
        std::set<int> vals;
        for (int q : S[j]) {
            ncnt[j][g[q]] += 1;
            vals.insert(g[q]);
        }
        gdeg[j] = (long long)S[j].size() - (long long)vals.size();
        esz[j] = (long long)E[j].size();
    }
    auto nrm = [](long long n) { return n > 0 ? n - 1 : 0; };
    long long w = 0;
    for (int j = 0; j < l; ++j)
        for (int jp = j + 1; jp < l; ++jp)
            for (int i = 1; i <= r; ++i)
                for (int i2 = 1; i2 < i; ++i2)
                    w += nrm(ncnt[j][i]) * nrm(ncnt[jp][i2]);
    for (int j = 0; j < l; ++j)
        for (int jp = 0; jp < j; ++jp)
            for (int i = 1; i <= r; ++i)
                for (int i2 = 1; i2 <= i; ++i2)
                    w += ecnt[j][i] * ecnt[jp][i2];
    long long run = 0;
    for (int j = 0; j < l; ++j) {
        w += (long long)(l - (j + 1)) * esz[j] + gdeg[j] * ((j + 1) + run);
        run += esz[j];
    }
    w += (long long)(l + p_tot) * degree(g) + (long long)p_tot * (q_tot - l);
    return w;
}

}  // namespace

BarSum phi(const EAlgebra& A, const Seq& f, const std::vector<Word>& words) {
    const int k = arity(f);
    if ((int)words.size() != k)
        throw std::invalid_argument("phi: word count does not match arity");
    std::vector<int> es(k);
    int p = 0;
    for (int i = 0; i < k; ++i) {
        es[i] = (int)words[i].size();
        p += es[i];
    }
    BarSum out;
    for (int l = 1; l <= p; ++l) {
        for (auto& [E, S] : l_indices(f, es, l)) {
            bool ok = true;
            std::vector<std::vector<std::pair<int, long long>>> factors;
            for (int j = 0; j < l; ++j) {
                auto fS = restrict_to(f, S[j]);
                if (!fS) {
                    ok = false;
                    break;
                }
                const OpSum& Cj = coefficient(*fS, eargs(E[j]));
                if (Cj.empty()) {
                    ok = false;
                    break;
                }
                std::vector<ASum> letters;
                for (auto& [i, r] : E[j])
                    letters.push_back(ASum{{words[i - 1][r], 1}});
                ASum fac = act_lin(A, Cj, letters);
                if (fac.empty()) {
                    ok = false;
                    break;
                }
                factors.emplace_back(fac.begin(), fac.end());
            }
            if (!ok) continue;
            long long kp = kappa_exponent(A, f, E, S, words);
            std::vector<size_t> idx(l, 0);
            for (;;) {
                Word w(l);
                long long c = sign_pow(kp);
                for (int j = 0; j < l; ++j) {
                    w[j] = factors[j][idx[j]].first;
                    c *= factors[j][idx[j]].second;
                }
                add_term(out, w, c);
                int j = l - 1;
                while (j >= 0 && ++idx[j] == factors[j].size()) {
                    idx[j] = 0;
                    --j;
                }
                if (j < 0) break;
            }
        }
    }
    return out;
}

BarSum phi_lin(const EAlgebra& A, const OpSum& ops,
               const std::vector<BarSum>& words) {
    BarSum out;
    const int k = (int)words.size();
    std::vector<std::vector<std::pair<Word, long long>>> items;
    for (auto& ws : words) {
        if (ws.empty()) return out;
        items.emplace_back(ws.begin(), ws.end());
    }
    for (auto& [fb, cf] : ops) {
        std::vector<size_t> idx(k, 0);
        for (;;) {
            std::vector<Word> ws(k);
            long long c = cf;
            for (int i = 0; i < k; ++i) {
                ws[i] = items[i][idx[i]].first;
                c *= items[i][idx[i]].second;
            }
            add(out, phi(A, fb, ws), c);
            int i = k - 1;
            while (i >= 0 && ++idx[i] == items[i].size()) {
                idx[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

Seq concat_prod(const Seq& f, const Seq& g) {
    const int k = arity(f);
    Seq h = f;
    for (int v : g) h.push_back(v + k);
    return h;
}

OpSum concat_coefficient_rhs(const Seq& f, const Seq& g,
                             const std::vector<int>& ps,
                             const std::vector<int>& qs) {
    int p_tot = 0, q_tot = 0;
    for (int v : ps) p_tot += v;
    for (int v : qs) q_tot += v;
    const OpSum Cf = coefficient(f, ps);
    OpSum out;
    for (int l = 1; l <= q_tot; ++l) {
        const OpSum Cl = coefficient(Seq{1, 2}, {1, l});
        for (auto& [E, S] : l_indices(g, qs, l)) {
            bool ok = true;
            std::vector<OpSum> args{Cf};
            for (int j = 0; j < l; ++j) {
                auto gS = restrict_to(g, S[j]);
                if (!gS) {
                    ok = false;
                    break;
                }
                const OpSum& Cj = coefficient(*gS, eargs(E[j]));
                if (Cj.empty()) {
                    ok = false;
                    break;
                }
                args.push_back(Cj);
            }
            if (!ok) continue;
            OpSum term = gamma(Cl, args);
            if (term.empty()) continue;
            auto sig = sigma_alpha(qs, E);
            std::vector<int> hat(p_tot + (int)sig.size());
            for (int v = 0; v < p_tot; ++v) hat[v] = v + 1;
            for (size_t v = 0; v < sig.size(); ++v) hat[p_tot + v] = p_tot + sig[v];
            OpSum moved;
            for (auto& [h, c] : term) add(moved, sigma_action(h, hat), c);
            add(out, moved, sign_pow(varpi_exponent(g, E, S, l, p_tot, q_tot)));
        }
    }
    return out;
}

BarSum bar_product(const EAlgebra& A, const BarSum& a, const BarSum& b) {
    return phi_lin(A, OpSum{{Seq{1, 2}, 1}}, {a, b});
}

}  // namespace seqop
