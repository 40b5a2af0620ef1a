#include "seqop/ealgebra.hpp"
#include <set>
#include <sstream>
#include <stdexcept>

namespace seqop {

std::vector<int> EAlgebra::basis(int) const {
    throw std::logic_error("basis enumeration not available for this algebra");
}

ASum EAlgebra::differential(const ASum& x) const {
    ASum out;
    for (const auto& [id, c] : x) add(out, differential(id), c);
    return out;
}

ASum act_lin(const EAlgebra& A, const OpSum& ops, const std::vector<ASum>& args) {
    ASum out;
    std::vector<int> xs(args.size());
    std::function<void(size_t, long long, const Seq&)> rec =
        [&](size_t j, long long c, const Seq& f) {
            if (j == args.size()) {
                add(out, A.act(f, xs), c);
                return;
            }
            for (const auto& [id, ci] : args[j]) {
                xs[j] = id;
                rec(j + 1, c * ci, f);
            }
        };
    for (const auto& [f, cf] : ops) rec(0, cf, f);
    return out;
}

int FreeEAlgebra::add_generator(const std::string& name, int deg) {
    if (deg < 1) throw std::invalid_argument("generator degree must be positive");
    names_.push_back(name);
    gdeg_.push_back(deg);
    dgen_.push_back({});
    return intern({Seq{1}, {(int)names_.size() - 1}});
}

void FreeEAlgebra::set_differential(int gen_basis_id, const ASum& da) {
    const Basis& b = pool_.at(gen_basis_id);
    if (b.g != Seq{1}) throw std::invalid_argument("not a generator");
    int j = b.ys[0];
    for (const auto& [id, c] : da)
        if (degree(id) != gdeg_[j] + 1)
            throw std::invalid_argument("differential must raise degree by one");
    dgen_[j] = da;
}

int FreeEAlgebra::intern(const Basis& b) const {
    auto it = index_.find(b);
    if (it != index_.end()) return it->second;
    pool_.push_back(b);
    index_.emplace(b, (int)pool_.size() - 1);
    return (int)pool_.size() - 1;
}

std::pair<FreeEAlgebra::Basis, long long> FreeEAlgebra::canonical(
    Seq g, std::vector<int> ys, long long c) const {
    int n = (int)ys.size();
    auto transpose = [&](int p) {
        std::vector<int> sp = identity_perm(n);
        std::swap(sp[p], sp[p + 1]);
        return sp;
    };
    bool done = false;
    while (!done) {
        done = true;
        for (int p = 0; p + 1 < n; ++p)
            if (ys[p] > ys[p + 1]) {
                done = false;
                OpSum moved = sigma_action(g, transpose(p));
                c *= moved.begin()->second *
                     sign_pow((long long)gdeg_[ys[p]] * gdeg_[ys[p + 1]]);
                g = moved.begin()->first;
                std::swap(ys[p], ys[p + 1]);
            }
    }
    std::vector<int> stab;
    for (int p = 0; p + 1 < n; ++p)
        if (ys[p] == ys[p + 1]) stab.push_back(p);
    if (!stab.empty()) {
        // signed orbit of g under the transpositions fixing ys
        std::map<Seq, long long> orbit{{g, 1}};
        std::vector<Seq> queue{g};
        while (!queue.empty()) {
            Seq cur = queue.back();
            queue.pop_back();
            long long cs = orbit[cur];
            for (int p : stab) {
                OpSum moved = sigma_action(cur, transpose(p));
                long long s =
                    cs * moved.begin()->second * sign_pow(gdeg_[ys[p]]);
                const Seq& g2 = moved.begin()->first;
                auto it = orbit.find(g2);
                if (it == orbit.end()) {
                    orbit.emplace(g2, s);
                    queue.push_back(g2);
                } else if (it->second != s) {
                    return {{Seq{1}, {}}, 0};  // orbit carries both signs
                }
            }
        }
        c *= orbit.begin()->second;
        g = orbit.begin()->first;
    }
    return {{std::move(g), std::move(ys)}, c};
}

ASum FreeEAlgebra::element(const Seq& g, const std::vector<int>& gen_words) const {
    std::vector<int> ys;
    for (int id : gen_words) {
        const Basis& b = pool_.at(id);
        if (b.g != Seq{1}) throw std::invalid_argument("not a generator");
        ys.push_back(b.ys[0]);
    }
    auto [b, c] = canonical(g, ys, 1);
    ASum out;
    if (c != 0) add_term(out, intern(b), c);
    return out;
}

int FreeEAlgebra::degree(int id) const {
    const Basis& b = pool_.at(id);
    int d = seqop::degree(b.g);
    for (int y : b.ys) d += gdeg_[y];
    return d;
}

ASum FreeEAlgebra::differential(int id) const {
    Basis b = pool_.at(id);
    ASum out;
    for (const auto& [g2, c2] : boundary(b.g)) {
        auto [key, c3] = canonical(g2, b.ys, c2);
        if (c3 != 0) add_term(out, intern(key), c3);
    }
    long long pre = seqop::degree(b.g);
    for (size_t t = 0; t < b.ys.size(); ++t) {
        int y = b.ys[t];
        if (!dgen_[y].empty()) {
            std::vector<ASum> args;
            for (size_t u = 0; u < b.ys.size(); ++u) {
                if (u == t) {
                    args.push_back(dgen_[y]);
                } else {
                    ASum unit;
                    add_term(unit, intern({Seq{1}, {b.ys[u]}}), 1LL);
                    args.push_back(unit);
                }
            }
            OpSum gs;
            add_term(gs, b.g, 1);
            add(out, act_lin(*this, gs, args), sign_pow(pre));
        }
        pre += gdeg_[y];
    }
    return out;
}

ASum FreeEAlgebra::act(const Seq& f, const std::vector<int>& xs) const {
    if ((int)xs.size() != arity(f))
        throw std::invalid_argument("act: arity mismatch");
    std::vector<Seq> gs;
    std::vector<int> ys;
    long long om = 0, seen = 0;
    for (int id : xs) {
        const Basis& b = pool_.at(id);
        om += (long long)seqop::degree(b.g) * seen;
        for (int y : b.ys) seen += gdeg_[y];
        gs.push_back(b.g);
        ys.insert(ys.end(), b.ys.begin(), b.ys.end());
    }
    ASum out;
    for (const auto& [h, c2] : gamma(f, gs)) {
        auto [key, c3] = canonical(h, ys, c2);
        if (c3 != 0) add_term(out, intern(key), c3 * sign_pow(om));
    }
    return out;
}

std::vector<int> FreeEAlgebra::basis(int deg) const {
    // walk sorted generator multisets, fill the remaining degree with an
    // operad element, keep the surviving canonical forms
    std::set<Basis> keep;
    std::vector<int> ys;
    std::function<void(int, int)> rec = [&](int start, int used) {
        if (!ys.empty() && used <= deg) {
            int opdeg = deg - used;
            int n = (int)ys.size();
            for (const Seq& f : all_nondeg(n, n + opdeg)) {
                auto [b, c] = canonical(f, ys, 1);
                if (c != 0) keep.insert(b);
            }
        }
        for (int j = start; j < (int)names_.size(); ++j) {
            if (used + gdeg_[j] > deg) continue;
            ys.push_back(j);
            rec(j, used + gdeg_[j]);
            ys.pop_back();
        }
    };
    rec(0, 0);
    std::vector<int> out;
    for (const Basis& b : keep) out.push_back(intern(b));
    return out;
}

std::string FreeEAlgebra::show(int id) const {
    const Basis& b = pool_.at(id);
    if (b.g == Seq{1}) return names_.at(b.ys[0]);
    std::ostringstream os;
    os << show_seq(b.g) << "(";
    for (size_t i = 0; i < b.ys.size(); ++i) {
        if (i) os << ",";
        os << names_.at(b.ys[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace seqop
