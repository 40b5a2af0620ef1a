#include "seqop/coefficients.hpp"
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace seqop {

long long theta_exponent(const Seq& f, const Block& E1, const Block& E2,
                         const PosSet& S1, const PosSet& S2) {
    int k = arity(f);
    std::set<int> v1, v2;
    for (int q : S1) v1.insert(f[q]);
    for (int q : S2) v2.insert(f[q]);
    long long d1 = (long long)S1.size() - (long long)v1.size();
    long long d2 = (long long)S2.size() - (long long)v2.size();
    std::vector<long long> e1(k + 1, 0), e2(k + 1, 0);
    for (const auto& [i, rpos] : E1) e1[i]++;
    for (const auto& [i, rpos] : E2) e2[i]++;
    long long se1 = 0, se2 = 0;
    for (int i = 1; i <= k; ++i) { se1 += e1[i]; se2 += e2[i]; }
    long long t = 1 + d1 + se1 * (d2 + se2 - 1);
    long long T3 = 0;
    auto nrm = [](long long n) { return n > 0 ? n - 1 : 0; };
    for (int i = 1; i <= k; ++i)
        for (int ip = 1; ip < i; ++ip) {
            T3 += e1[i] * e2[ip];
            long long n1 = 0, n2 = 0;
            for (int q : S1) if (f[q] == i) n1++;
            for (int q : S2) if (f[q] == ip) n2++;
            t += nrm(n1) * nrm(n2);
        }
    return t + T3;
}

namespace {
std::map<std::pair<Seq, std::vector<int>>, OpSum>& memo() {
    static std::map<std::pair<Seq, std::vector<int>>, OpSum> m;
    return m;
}
}

std::size_t coefficient_cache_size() { return memo().size(); }
void clear_coefficient_cache() { memo().clear(); }

OpSum coeff_x1(const Seq& f, const std::vector<int>& es) {
    OpSum out;
    for (const auto& [g, c] : boundary(f)) add(out, coefficient(g, es), c);
    return out;
}

OpSum coeff_x2(const Seq& f, const std::vector<int>& es) {
    OpSum out;
    for (const auto& [E, S] : l_indices(f, es, 2)) {
        auto fS1 = restrict_to(f, S[0]);
        auto fS2 = restrict_to(f, S[1]);
        if (!fS1 || !fS2) continue;
        const OpSum& C1 = coefficient(*fS1, eargs(E[0]));
        const OpSum& C2 = coefficient(*fS2, eargs(E[1]));
        if (C1.empty() || C2.empty()) continue;
        long long th = theta_exponent(f, E[0], E[1], S[0], S[1]);
        OpSum prod = gamma(OpSum{{{1, 2}, 1}}, {C1, C2});
        OpSum term = sigma_action(prod, sigma_alpha(es, E));
        add(out, term, sign_pow(th));
    }
    return out;
}

OpSum coeff_x3(const Seq& f, const std::vector<int>& es) {
    OpSum out;
    int k = arity(f);
    int tot = 0;
    for (int e : es) tot += e;
    for (int i = 1; i <= k; ++i) {
        for (int t = 1; t < es[i - 1]; ++t) {
            long long lam = 1 + t + degree(f);
            for (int ip = i; ip <= k; ++ip) lam += es[ip - 1];
            std::vector<int> es2 = es;
            es2[i - 1] -= 1;
            const OpSum& Cm = coefficient(f, es2);
            std::vector<OpSum> args(tot - 1, OpSum{{{1}, 1}});
            int off = 0;
            for (int j = 0; j < i - 1; ++j) off += es[j];
            args[off + t - 1] = OpSum{{{1, 2}, 1}};
            add(out, gamma(Cm, args), sign_pow(lam));
        }
    }
    return out;
}

const OpSum& coefficient(const Seq& f, const std::vector<int>& es) {
    int k = arity(f);
    if ((int)es.size() != k || !is_nondeg(f))
        throw std::invalid_argument("coefficient: need nondegenerate f with one count per value");
    for (int e : es)
        if (e < 1) throw std::invalid_argument("coefficient: counts must be positive");
    auto key = std::make_pair(f, es);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
    OpSum res;
    if (f == Seq{1} && es == std::vector<int>{1}) {
        add_term(res, Seq{1}, 1);
    } else {
        int a = 1;
        for (int i = 0; i < f[0] - 1; ++i) a += es[i];
        OpSum X = coeff_x1(f, es);
        add(X, coeff_x2(f, es));
        res = op_mapped(X, [&](const Seq& b) { return s_a(b, a); });
    }
    return memo().emplace(std::move(key), std::move(res)).first->second;
}

std::vector<int> block_perm(const std::vector<int>& sigma,
                            const std::vector<int>& es) {
    int k = (int)sigma.size();
    std::vector<int> inv = perm_inverse(sigma);
    std::vector<int> esig(k);
    for (int j = 0; j < k; ++j) esig[j] = es[inv[j] - 1];
    int tot = 0;
    for (int e : es) tot += e;
    std::vector<int> pi(tot, 0);
    int offi = 0;
    for (int i = 1; i <= k; ++i) {
        int j = sigma[i - 1];
        int offj = 0;
        for (int t = 0; t < j - 1; ++t) offj += esig[t];
        for (int rr = 0; rr < es[i - 1]; ++rr) pi[offi + rr] = offj + rr + 1;
        offi += es[i - 1];
    }
    return pi;
}

long long xi_exponent(const std::vector<int>& sigma, const std::vector<int>& es) {
    long long t = 0;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t ip = i + 1; ip < es.size(); ++ip)
            if (sigma[i] > sigma[ip]) t += (long long)es[i] * es[ip];
    return t;
}

bool structural_check(const Seq& f, const std::vector<int>& es, const Seq& g) {
    int k = arity(f);
    int kk = arity(g);
    if (g.size() >= 2) {
        std::vector<int> occ = fiber_sizes(g, kk);
        if (occ[g.front() - 1] < 2 || occ[g.back() - 1] < 2) return false;
        for (int v = 1; v <= kk; ++v)
            if (occ[v - 1] == 1) {
                PosSet pos = fiber(g, v);
                int q = pos[0];
                if (q == 0 || q + 1 == (int)g.size() || g[q - 1] != g[q + 1])
                    return false;
            }
    }
    std::vector<std::pair<int, int>> blocks;  // value range of each argument
    int off = 0;
    for (int e : es) {
        blocks.push_back({off + 1, off + e});
        off += e;
    }
    for (const auto& [lo, hi] : blocks) {
        int prev = 0;
        for (int x : g)
            if (lo <= x && x <= hi) {
                if (x < prev) return false;
                prev = x;
            }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Seq gsub, fsub;
            for (int x : g)
                if ((blocks[i].first <= x && x <= blocks[i].second) ||
                    (blocks[j].first <= x && x <= blocks[j].second))
                    gsub.push_back(x);
            for (int x : f)
                if (x == i + 1 || x == j + 1) fsub.push_back(x);
            if (complexity(gsub) > complexity(fsub) + 1) return false;
        }
    return true;
}

}  // namespace seqop
