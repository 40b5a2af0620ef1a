#include "seqop/indexing.hpp"
#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace seqop {

namespace {

// weakly increasing e-tuples over 0..n-1
std::vector<std::vector<int>> cwr(int n, int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if ((int)cur.size() == e) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// strictly increasing s-tuples over 0..n-1
std::vector<std::vector<int>> combos(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if ((int)cur.size() == s) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<Decomp> elem_decomps(const std::vector<int>& es, int l) {
    std::vector<std::vector<std::vector<int>>> per;
    for (int e : es) per.push_back(cwr(l, e));
    std::vector<Decomp> out;
    std::vector<size_t> pick(es.size(), 0);
    if (es.empty()) return out;
    for (;;) {
        Decomp E(l);
        for (size_t i = 0; i < es.size(); ++i) {
            const std::vector<int>& asg = per[i][pick[i]];
            for (size_t rpos = 0; rpos < asg.size(); ++rpos)
                E[asg[rpos]].push_back({(int)i + 1, (int)rpos});
        }
        bool full = true;
        for (const Block& b : E)
            if (b.empty()) full = false;
        if (full) {
            for (Block& b : E) std::sort(b.begin(), b.end());
            out.push_back(std::move(E));
        }
        int i = (int)es.size() - 1;
        while (i >= 0 && ++pick[i] == per[i].size()) pick[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::vector<std::vector<PosSet>> overlapping_partitions(const PosSet& F, int s) {
    std::vector<std::vector<PosSet>> out;
    int n = (int)F.size();
    if (s == 1) {
        out.push_back({F});
        return out;
    }
    for (const std::vector<int>& cuts : cwr(n, s - 1)) {
        std::vector<int> b;
        b.push_back(0);
        b.insert(b.end(), cuts.begin(), cuts.end());
        b.push_back(n - 1);
        std::vector<PosSet> pieces;
        for (int t = 0; t < s; ++t)
            pieces.emplace_back(F.begin() + b[t], F.begin() + b[t + 1] + 1);
        out.push_back(std::move(pieces));
    }
    return out;
}

std::vector<Cover> value_covers(const Seq& f, int l) {
    int k = arity(f);
    // per value: a slot subset J together with an overlapping partition of
    // the value's fiber over J
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<PosSet>>>> per(k);
    for (int i = 1; i <= k; ++i) {
        PosSet F = fiber(f, i);
        for (int s = 1; s <= l; ++s)
            for (const std::vector<int>& J : combos(l, s))
                for (auto& pieces : overlapping_partitions(F, s))
                    per[i - 1].push_back({J, pieces});
    }
    std::vector<Cover> out;
    std::vector<size_t> pick(k, 0);
    if (k == 0) return out;
    for (;;) {
        std::vector<std::set<int>> S(l);
        for (int i = 0; i < k; ++i) {
            const auto& [J, pieces] = per[i][pick[i]];
            for (size_t t = 0; t < J.size(); ++t)
                S[J[t]].insert(pieces[t].begin(), pieces[t].end());
        }
        bool full = true;
        for (const auto& Sj : S)
            if (Sj.empty()) full = false;
        if (full) {
            Cover cov;
            for (const auto& Sj : S) cov.emplace_back(Sj.begin(), Sj.end());
            out.push_back(std::move(cov));
        }
        int i = k - 1;
        while (i >= 0 && ++pick[i] == per[i].size()) pick[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::vector<LIndex> l_indices(const Seq& f, const std::vector<int>& es, int l) {
    std::vector<Decomp> eds = elem_decomps(es, l);
    std::vector<LIndex> out;
    for (Cover& S : value_covers(f, l)) {
        std::vector<std::set<int>> tags(l);
        for (int j = 0; j < l; ++j)
            for (int q : S[j]) tags[j].insert(f[q]);
        for (const Decomp& E : eds) {
            bool match = true;
            for (int j = 0; j < l && match; ++j) {
                std::set<int> et;
                for (const auto& [i, rpos] : E[j]) et.insert(i);
                if (et != tags[j]) match = false;
            }
            if (match) out.push_back({E, S});
        }
    }
    return out;
}

std::optional<Seq> restrict_to(const Seq& f, const PosSet& S) {
    std::vector<int> vals;
    for (int q : S) vals.push_back(f[q]);
    std::vector<int> sorted_vals = vals;
    std::sort(sorted_vals.begin(), sorted_vals.end());
    sorted_vals.erase(std::unique(sorted_vals.begin(), sorted_vals.end()),
                      sorted_vals.end());
    std::map<int, int> rel;
    for (size_t i = 0; i < sorted_vals.size(); ++i) rel[sorted_vals[i]] = (int)i + 1;
    Seq g;
    for (int v : vals) g.push_back(rel[v]);
    for (size_t q = 0; q + 1 < g.size(); ++q)
        if (g[q] == g[q + 1]) return std::nullopt;
    return g;
}

std::vector<int> eargs(const Block& E) {
    std::map<int, int> cnt;
    for (const auto& [i, rpos] : E) cnt[i]++;
    std::vector<int> out;
    for (const auto& [i, c] : cnt) out.push_back(c);
    return out;
}

std::vector<int> sigma_alpha(const std::vector<int>& es, const Decomp& E) {
    int tot = 0;
    for (int e : es) tot += e;
    std::map<ElemKey, int> mu;
    int nxt = 1;
    for (const Block& Ej : E)
        for (const ElemKey& el : Ej) mu[el] = nxt++;
    std::vector<int> sig(tot, 0);
    int off = 0;
    for (size_t i = 0; i < es.size(); ++i) {
        for (int rr = 0; rr < es[i]; ++rr)
            sig[off + rr] = mu.at({(int)i + 1, rr});
        off += es[i];
    }
    return sig;
}

}  // namespace seqop
