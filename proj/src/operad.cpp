#include "seqop/operad.hpp"
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace seqop {

OpSum boundary(const Seq& f) {
    OpSum out;
    int k = arity(f);
    std::vector<int> fib = fiber_sizes(f, k);
    std::vector<int> pre(k + 1, 0);
    for (int i = 1; i <= k; ++i) pre[i] = pre[i - 1] + fib[i - 1] - 1;
    std::vector<int> pos(k + 1, 0);
    for (int q = 0; q < (int)f.size(); ++q) {
        int v = f[q];
        Seq g;
        g.reserve(f.size() - 1);
        g.insert(g.end(), f.begin(), f.begin() + q);
        g.insert(g.end(), f.begin() + q + 1, f.end());
        if (is_nondeg(g, k))
            add_term(out, g, sign_pow(pre[v - 1] + pos[v]));
        pos[v]++;
    }
    return out;
}

OpSum boundary(const OpSum& x) {
    return op_mapped(x, [](const Seq& f) { return boundary(f); });
}

OpSum sigma_action(const Seq& f, const std::vector<int>& sigma) {
    int k = (int)sigma.size();
    if (arity(f) != k) throw std::invalid_argument("sigma_action: arity mismatch");
    std::vector<int> inv = perm_inverse(sigma);
    Seq g(f.size());
    for (size_t q = 0; q < f.size(); ++q) g[q] = inv[f[q] - 1];
    std::vector<int> dblk = fiber_sizes(f, k);
    for (int& n : dblk) n -= 1;
    long long e = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sigma[i] > sigma[j])
                e += (long long)dblk[sigma[i] - 1] * dblk[sigma[j] - 1];
    OpSum out;
    add_term(out, g, sign_pow(e));
    return out;
}

OpSum sigma_action(const OpSum& x, const std::vector<int>& sigma) {
    return op_mapped(x, [&](const Seq& f) { return sigma_action(f, sigma); });
}

OpSum s_a(const Seq& f, int a) {
    OpSum out;
    if (!f.empty() && f[0] == a) return out;
    std::vector<int> fib = fiber_sizes(f);
    long long e = 0;
    for (int i = 1; i < a && i <= (int)fib.size(); ++i) e += fib[i - 1] - 1;
    Seq g;
    g.reserve(f.size() + 1);
    g.push_back(a);
    g.insert(g.end(), f.begin(), f.end());
    add_term(out, g, sign_pow(e));
    return out;
}

OpSum iota_a(const Seq& f, int a) {
    Seq g;
    g.reserve(f.size() + 1);
    g.push_back(a);
    for (int v : f) g.push_back(v >= a ? v + 1 : v);
    OpSum out;
    add_term(out, g, 1);
    return out;
}

OpSum r_a(const Seq& f, int a) {
    OpSum out;
    std::vector<int> fib = fiber(f, a);
    if (fib.size() != 1) return out;
    Seq g;
    g.reserve(f.size() - 1);
    for (int q = 0; q < (int)f.size(); ++q) {
        if (q == fib[0]) continue;
        g.push_back(f[q] > a ? f[q] - 1 : f[q]);
    }
    if (!is_nondeg(g)) return out;
    add_term(out, g, -1);
    return out;
}

OpSum contracting_H(const OpSum& x) {
    OpSum out;
    for (const auto& [f0, c0] : x) {
        int p = arity(f0);
        for (int k = 0; k < p; ++k) {
            OpSum y;
            add_term(y, f0, c0);
            for (int t = 0; t < k; ++t)
                y = op_mapped(y, [](const Seq& f) { return r_a(f, 1); });
            y = op_mapped(y, [](const Seq& f) { return s_a(f, 1); });
            for (int t = 0; t < k; ++t)
                y = op_mapped(y, [](const Seq& f) { return iota_a(f, 1); });
            add(out, y, sign_pow(k));
        }
    }
    return out;
}

// weakly increasing (r-1)-tuples over [1..m]: the cut positions splitting an
// argument of length m over the r occurrences of its value
static std::vector<std::vector<int>> cut_tuples(int m, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if ((int)cur.size() == r - 1) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= m; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

OpSum gamma(const Seq& g, const std::vector<Seq>& fs) {
    int l = arity(g);
    if ((int)fs.size() != l) throw std::invalid_argument("gamma: arity mismatch");
    OpSum out;
    std::vector<int> karr(l), marr(l), koff(l + 1, 0);
    for (int j = 0; j < l; ++j) {
        karr[j] = arity(fs[j]);
        marr[j] = (int)fs[j].size();
        koff[j + 1] = koff[j] + karr[j];
    }
    std::vector<std::vector<int>> occ(l);  // occ[j][s] = g-position of occurrence s of value j+1
    for (int t = 0; t < (int)g.size(); ++t) occ[g[t] - 1].push_back(t);
    std::vector<int> r(l);
    for (int j = 0; j < l; ++j) r[j] = (int)occ[j].size();
    std::vector<std::vector<std::vector<int>>> cuts(l);
    for (int j = 0; j < l; ++j) cuts[j] = cut_tuples(marr[j], r[j]);

    std::vector<size_t> pick(l, 0);
    for (;;) {
        // zones[j][s] = inclusive 1-based argument range assigned to occurrence s
        std::vector<std::vector<std::pair<int, int>>> zones(l);
        for (int j = 0; j < l; ++j) {
            const std::vector<int>& c = cuts[j][pick[j]];
            std::vector<int> b;
            b.push_back(1);
            b.insert(b.end(), c.begin(), c.end());
            b.push_back(marr[j]);
            for (int s = 0; s < r[j]; ++s) zones[j].push_back({b[s], b[s + 1]});
        }
        Seq h;
        std::vector<std::array<int, 3>> post;  // (g-position t, value index j, argument position x)
        {
            std::vector<int> cnt(l, 0);
            for (int t = 0; t < (int)g.size(); ++t) {
                int j = g[t] - 1;
                int s = cnt[j]++;
                auto [lo, hi] = zones[j][s];
                for (int x = lo; x <= hi; ++x) {
                    h.push_back(fs[j][x - 1] + koff[j]);
                    post.push_back({t, j, x});
                }
            }
        }
        if (is_nondeg(h, koff[l])) {
            std::vector<std::vector<int>> copies(koff[l] + 1);
            for (int idx = 0; idx < (int)post.size(); ++idx)
                copies[koff[post[idx][1]] + fs[post[idx][1]][post[idx][2] - 1]].push_back(idx);
            std::vector<int> tgtpos(post.size(), -1);
            int ntgt = 0;
            for (int w = 1; w <= koff[l]; ++w)
                for (size_t i = 1; i < copies[w].size(); ++i) tgtpos[copies[w][i]] = ntgt++;
            std::map<std::pair<int, int>, int> emind;  // (t, x) -> index in h
            for (int idx = 0; idx < (int)post.size(); ++idx)
                emind[{post[idx][0], post[idx][2]}] = idx;
            std::vector<int> perm;
            perm.reserve(ntgt);
            bool ok = true;
            // a cut element's copy in the zone after the cut
            for (int j = 0; j < l && ok; ++j)
                for (int s = 1; s < r[j] && ok; ++s) {
                    int c = cuts[j][pick[j]][s - 1];
                    auto it = emind.find({occ[j][s], c});
                    if (it == emind.end() || tgtpos[it->second] < 0) { ok = false; break; }
                    perm.push_back(tgtpos[it->second]);
                }
            // repeated values inside an argument: copies at the first zone containing them
            for (int j = 0; j < l && ok; ++j)
                for (int u = 1; u <= karr[j] && ok; ++u) {
                    std::vector<int> fib;
                    for (int x = 1; x <= marr[j]; ++x)
                        if (fs[j][x - 1] == u) fib.push_back(x);
                    for (size_t t = 1; t < fib.size() && ok; ++t) {
                        int x = fib[t];
                        int s = -1;
                        for (int ss = 0; ss < r[j]; ++ss)
                            if (zones[j][ss].first <= x && x <= zones[j][ss].second) { s = ss; break; }
                        auto it = emind.find({occ[j][s], x});
                        if (it == emind.end() || tgtpos[it->second] < 0) { ok = false; break; }
                        perm.push_back(tgtpos[it->second]);
                    }
                }
            if (!ok || (int)perm.size() != ntgt)
                throw std::logic_error("gamma: incoherent copy bijection");
            {
                std::vector<char> seen(ntgt, 0);
                for (int v : perm) {
                    if (v < 0 || v >= ntgt || seen[v])
                        throw std::logic_error("gamma: incoherent copy bijection");
                    seen[v] = 1;
                }
            }
            add_term(out, h, perm_sign(perm));
        }
        int j = l - 1;
        while (j >= 0 && ++pick[j] == cuts[j].size()) pick[j--] = 0;
        if (j < 0) break;
    }
    return out;
}

OpSum gamma(const OpSum& g, const std::vector<OpSum>& fs) {
    OpSum out;
    for (const auto& [gb, cg] : g) {
        std::vector<Seq> pickf(fs.size());
        std::function<void(size_t, long long)> rec = [&](size_t j, long long c) {
            if (j == fs.size()) {
                add(out, gamma(gb, pickf), c);
                return;
            }
            for (const auto& [fb, cf] : fs[j]) {
                pickf[j] = fb;
                rec(j + 1, c * cf);
            }
        };
        rec(0, cg);
    }
    return out;
}

OpSum compose(const OpSum& x, int i, const OpSum& y) {
    if (x.empty() || y.empty()) return {};
    int k = arity(x.begin()->first);
    if (i < 1 || i > k) throw std::invalid_argument("compose: position out of range");
    std::vector<OpSum> ys(k);
    for (int j = 0; j < k; ++j) {
        if (j + 1 == i) ys[j] = y;
        else add_term(ys[j], Seq{1}, 1);
    }
    return gamma(x, ys);
}

OpSum full_compose(const OpSum& x, const std::vector<OpSum>& ys) {
    if (x.empty()) return {};
    if ((int)ys.size() != arity(x.begin()->first))
        throw std::invalid_argument("full_compose: arity mismatch");
    return gamma(x, ys);
}

}  // namespace seqop
