#include "seqop/simplicial.hpp"
#include "json.hpp"
#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace seqop {

int FiniteSimplicialSet::add_simplex(int dim, const std::string& name) {
    if (dim < 0) throw std::invalid_argument("add_simplex: negative dimension");
    if (find(name)) throw std::invalid_argument("add_simplex: duplicate name " + name);
    if ((int)names_.size() <= dim) {
        names_.resize(dim + 1);
        faces_.resize(dim + 1);
    }
    names_[dim].push_back(name);
    faces_[dim].push_back({});
    return (int)names_[dim].size() - 1;
}

void FiniteSimplicialSet::set_faces(int dim, int idx, std::vector<DegSimplex> faces) {
    if (dim < 1) throw std::invalid_argument("set_faces: vertices have no faces");
    name(dim, idx);  // range check
    if ((int)faces.size() != dim + 1)
        throw std::invalid_argument("set_faces: need dim + 1 faces");
    faces_[dim][idx] = std::move(faces);
}

void FiniteSimplicialSet::set_basepoint(int idx) {
    name(0, idx);
    base_ = idx;
}

int FiniteSimplicialSet::count(int dim) const {
    if (dim < 0 || dim >= (int)names_.size()) return 0;
    return (int)names_[dim].size();
}

const std::string& FiniteSimplicialSet::name(int dim, int idx) const {
    if (idx < 0 || idx >= count(dim))
        throw std::invalid_argument("no such simplex");
    return names_[dim][idx];
}

std::optional<std::pair<int, int>> FiniteSimplicialSet::find(
    const std::string& name) const {
    for (int d = 0; d < (int)names_.size(); ++d)
        for (int i = 0; i < (int)names_[d].size(); ++i)
            if (names_[d][i] == name) return std::pair{d, i};
    return std::nullopt;
}

DegSimplex FiniteSimplicialSet::nondeg(int dim, int idx) const {
    name(dim, idx);
    DegSimplex x{dim, idx, std::vector<int>(dim + 1)};
    for (int i = 0; i <= dim; ++i) x.vmap[i] = i;
    return x;
}

DegSimplex FiniteSimplicialSet::face(int dim, int idx, int i) const {
    name(dim, idx);
    if (i < 0 || i > dim) throw std::invalid_argument("face: index out of range");
    const auto& fs = faces_[dim][idx];
    if ((int)fs.size() != dim + 1)
        throw std::invalid_argument("face: table not set for " + name(dim, idx));
    return fs[i];
}

DegSimplex FiniteSimplicialSet::face(const DegSimplex& x, int i) const {
    const int n = x.dim();
    if (n == 0 || i < 0 || i > n)
        throw std::invalid_argument("face: index out of range");
    std::vector<int> vals = x.vmap;
    const int u = vals[i];
    vals.erase(vals.begin() + i);
    if (std::find(vals.begin(), vals.end(), u) != vals.end())
        return {x.base_dim, x.base_id, vals};
    // the vertex u of the base disappears: compose with its table face
    DegSimplex fy = face(x.base_dim, x.base_id, u);
    std::vector<int> out(vals.size());
    for (size_t t = 0; t < vals.size(); ++t)
        out[t] = fy.vmap[vals[t] < u ? vals[t] : vals[t] - 1];
    return {fy.base_dim, fy.base_id, out};
}

DegSimplex FiniteSimplicialSet::degeneracy(const DegSimplex& x, int j) const {
    if (j < 0 || j > x.dim())
        throw std::invalid_argument("degeneracy: index out of range");
    DegSimplex y = x;
    y.vmap.insert(y.vmap.begin() + j, x.vmap[j]);
    return y;
}

DegSimplex FiniteSimplicialSet::restrict(const DegSimplex& x,
                                         const std::vector<int>& keep) const {
    if (keep.empty()) throw std::invalid_argument("restrict: empty vertex set");
    DegSimplex cur = x;
    for (int i = x.dim(); i >= 0; --i)
        if (!std::binary_search(keep.begin(), keep.end(), i)) cur = face(cur, i);
    return cur;
}

void FiniteSimplicialSet::validate() const {
    for (int n = 1; n <= top_dimension(); ++n)
        for (int idx = 0; idx < count(n); ++idx) {
            const auto& fs = faces_[n][idx];
            if ((int)fs.size() != n + 1)
                throw std::invalid_argument("validate: missing faces of " +
                                            name(n, idx));
            for (const DegSimplex& f : fs) {
                if (f.dim() != n - 1)
                    throw std::invalid_argument("validate: face dimension of " +
                                                name(n, idx));
                name(f.base_dim, f.base_id);  // base exists
                int prev = -1;
                int seen = -1;
                for (int v : f.vmap) {
                    if (v < prev || v > f.base_dim || v < 0 || v > prev + 1)
                        throw std::invalid_argument(
                            "validate: vertex map of a face of " + name(n, idx));
                    prev = v;
                    seen = std::max(seen, v);
                }
                if (seen != f.base_dim)
                    throw std::invalid_argument(
                        "validate: face map not onto its base in " + name(n, idx));
            }
        }
    for (int n = 2; n <= top_dimension(); ++n)
        for (int idx = 0; idx < count(n); ++idx)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    DegSimplex lhs = face(face(n, idx, j), i);
                    DegSimplex rhs = face(face(n, idx, i), j - 1);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "validate: d_" << i << " d_" << j << " != d_"
                           << j - 1 << " d_" << i << " on " << name(n, idx);
                        throw std::invalid_argument(os.str());
                    }
                }
    if (base_ && count(0) <= *base_)
        throw std::invalid_argument("validate: basepoint out of range");
}

std::string FiniteSimplicialSet::show(const DegSimplex& x) const {
    std::string out;
    for (int t = x.dim() - 1; t >= 0; --t)
        if (x.vmap[t] == x.vmap[t + 1]) out += "s" + std::to_string(t) + " ";
    return out + name(x.base_dim, x.base_id);
}

FiniteSimplicialSet standard_simplex(int n) {
    if (n < 0) throw std::invalid_argument("standard_simplex: negative n");
    FiniteSimplicialSet X;
    // subsets of {0..n} in lexicographic order per size
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (!cur.empty()) subsets[(int)cur.size() - 1].push_back(cur);
        for (int v = from; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    auto label = [](const std::vector<int>& s) {
        std::string out;
        for (int v : s) out += std::to_string(v);
        return out;
    };
    for (int d = 0; d <= n; ++d)
        for (const auto& s : subsets[d]) X.add_simplex(d, label(s));
    for (int d = 1; d <= n; ++d)
        for (int idx = 0; idx < (int)subsets[d].size(); ++idx) {
            std::vector<DegSimplex> fs;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> s = subsets[d][idx];
                s.erase(s.begin() + i);
                auto at = X.find(label(s));
                fs.push_back(X.nondeg(d - 1, at->second));
            }
            X.set_faces(d, idx, std::move(fs));
        }
    X.set_basepoint(0);
    X.validate();
    return X;
}

FiniteSimplicialSet boundary_quotient(int n) {
    if (n < 2)
        throw std::invalid_argument("boundary_quotient: need dimension >= 2");
    FiniteSimplicialSet X;
    X.add_simplex(0, "*");
    X.add_simplex(n, "c");
    DegSimplex collapsed{0, 0, std::vector<int>(n, 0)};
    X.set_faces(n, 0, std::vector<DegSimplex>(n + 1, collapsed));
    X.set_basepoint(0);
    X.validate();
    return X;
}

FiniteSimplicialSet projective_plane() {
    FiniteSimplicialSet X;
    X.add_simplex(0, "v");
    X.add_simplex(1, "e");
    X.add_simplex(2, "t");
    DegSimplex v = X.nondeg(0, 0);
    DegSimplex e = X.nondeg(1, 0);
    X.set_faces(1, 0, {v, v});
    X.set_faces(2, 0, {e, X.degeneracy(v, 0), e});
    X.set_basepoint(0);
    X.validate();
    return X;
}

FiniteSimplicialSet load_simplicial_set(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("simplicial set: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimensions"))
        throw std::invalid_argument("simplicial set: need a \"dimensions\" object");
    FiniteSimplicialSet X;
    std::vector<std::pair<int, std::string>> order;
    for (const auto& [key, arr] : doc["dimensions"].items()) {
        int d;
        try {
            d = std::stoi(key);
        } catch (...) {
            throw std::invalid_argument("simplicial set: dimension key " + key);
        }
        if (!arr.is_array())
            throw std::invalid_argument("simplicial set: names must be arrays");
        for (const auto& nm : arr) order.push_back({d, nm.get<std::string>()});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [d, nm] : order) X.add_simplex(d, nm);
    auto parse_face = [&X](const std::string& entry) {
        std::istringstream is(entry);
        std::vector<std::string> tokens;
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
        if (tokens.empty())
            throw std::invalid_argument("simplicial set: empty face entry");
        auto at = X.find(tokens.back());
        if (!at)
            throw std::invalid_argument("simplicial set: unknown simplex " +
                                        tokens.back());
        DegSimplex x = X.nondeg(at->first, at->second);
        for (int t = (int)tokens.size() - 2; t >= 0; --t) {
            const std::string& s = tokens[t];
            if (s.size() < 2 || s[0] != 's')
                throw std::invalid_argument("simplicial set: bad token " + s);
            int j;
            try {
                j = std::stoi(s.substr(1));
            } catch (...) {
                throw std::invalid_argument("simplicial set: bad token " + s);
            }
            x = X.degeneracy(x, j);
        }
        return x;
    };
    if (doc.contains("faces"))
        for (const auto& [nm, arr] : doc["faces"].items()) {
            auto at = X.find(nm);
            if (!at)
                throw std::invalid_argument("simplicial set: unknown simplex " + nm);
            std::vector<DegSimplex> fs;
            for (const auto& entry : arr) fs.push_back(parse_face(entry.get<std::string>()));
            X.set_faces(at->first, at->second, std::move(fs));
        }
    if (doc.contains("basepoint")) {
        auto at = X.find(doc["basepoint"].get<std::string>());
        if (!at || at->first != 0)
            throw std::invalid_argument("simplicial set: basepoint must be a vertex");
        X.set_basepoint(at->second);
    }
    X.validate();
    return X;
}

}  // namespace seqop
