#include "doctest.h"
#include "seqop/operad.hpp"

#include <algorithm>
#include <tuple>

using namespace seqop;

namespace {

OpSum one(const Seq& f, long long c = 1) {
    OpSum x;
    add_term(x, f, c);
    return x;
}

OpSum parse_sum(const std::string& text) {
    // "+(121)-(212)" style used by the fixtures below
    OpSum out;
    size_t i = 0;
    while (i < text.size()) {
        long long sgn = 1;
        if (text[i] == '+') i++;
        else if (text[i] == '-') { sgn = -1; i++; }
        size_t j = text.find(')', i);
        REQUIRE(j != std::string::npos);
        auto f = parse_seq(text.substr(i, j - i + 1));
        REQUIRE(f.has_value());
        add_term(out, *f, sgn);
        i = j + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("sequence parsing and printing") {
    CHECK(parse_seq("(12131)") == Seq{1, 2, 1, 3, 1});
    CHECK(parse_seq("(1 2 1 3 1)") == Seq{1, 2, 1, 3, 1});
    CHECK(parse_seq("1,2,1") == Seq{1, 2, 1});
    CHECK(parse_seq("(7)") == Seq{7});
    CHECK(parse_seq("(10 2 10)") == Seq{10, 2, 10});
    CHECK(parse_seq("") == std::nullopt);
    CHECK(parse_seq("(1a2)") == std::nullopt);
    CHECK(show_seq({1, 2, 1, 3, 1}) == "(12131)");
    CHECK(show_seq({10, 2, 10}) == "(10 2 10)");
    for (int k = 1; k <= 3; ++k)
        for (int m = k; m <= 5; ++m)
            for (const Seq& f : all_nondeg(k, m))
                CHECK(parse_seq(show_seq(f)) == f);
}

TEST_CASE("nondegeneracy, degree, complexity") {
    CHECK(is_nondeg({1, 2, 1}));
    CHECK(!is_nondeg({1, 1, 2}));
    CHECK(!is_nondeg({1, 3}));       // not surjective
    CHECK(is_nondeg({}));            // the arity-0 element
    CHECK(!is_nondeg({}, 1));
    CHECK(is_nondeg({1, 2}, 2));
    CHECK(!is_nondeg({1, 2}, 3));
    CHECK(degree(Seq{1, 2, 1, 3, 1}) == 2);
    CHECK(complexity({1, 2}) == 1);
    CHECK(complexity({1, 2, 1}) == 2);
    CHECK(complexity({1, 2, 1, 2}) == 3);
    CHECK(complexity({1, 2, 3, 2, 1}) == 2);
}

TEST_CASE("differential fixtures") {
    CHECK(boundary(Seq{1, 2, 1}) == parse_sum("-(12)+(21)"));
    CHECK(boundary(Seq{2, 1, 2}) == parse_sum("+(12)-(21)"));
    CHECK(boundary(Seq{1, 2, 1, 2}) == parse_sum("+(121)+(212)"));
    CHECK(boundary(Seq{1, 2, 3, 1}) == parse_sum("-(123)+(231)"));
    CHECK(boundary(Seq{1, 2, 1, 3, 1}) == parse_sum("+(1213)-(1231)+(2131)"));
    CHECK(boundary(Seq{1, 2, 3, 1, 2}) == parse_sum("+(1231)-(1232)-(1312)+(2312)"));
    CHECK(boundary(Seq{1, 2}).empty());
    CHECK(boundary(Seq{1}).empty());
}

TEST_CASE("d squared is zero") {
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= m; ++k)
            for (const Seq& f : all_nondeg(k, m))
                CHECK(boundary(boundary(f)).empty());
}

TEST_CASE("symmetric action fixtures") {
    CHECK(sigma_action(Seq{1, 2, 1}, {2, 1}) == parse_sum("+(212)"));
    CHECK(sigma_action(Seq{1, 2, 1, 2}, {2, 1}) == parse_sum("-(2121)"));
    CHECK(sigma_action(Seq{1, 2, 3, 1}, {2, 3, 1}) == parse_sum("+(3123)"));
    CHECK(sigma_action(Seq{1, 2, 1, 3, 1}, {3, 1, 2}) == parse_sum("+(23212)"));
}

TEST_CASE("symmetric action is a right action commuting with d") {
    std::vector<std::vector<int>> perms3 = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                            {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= std::min(m, 3); ++k) {
            std::vector<std::vector<int>> perms;
            if (k == 1) perms = {{1}};
            else if (k == 2) perms = {{1, 2}, {2, 1}};
            else perms = perms3;
            for (const Seq& f : all_nondeg(k, m))
                for (const auto& sg : perms) {
                    CHECK(boundary(sigma_action(f, sg)) ==
                          sigma_action(boundary(f), sg));
                    for (const auto& rh : perms) {
                        std::vector<int> comp(k);
                        for (int i = 0; i < k; ++i) comp[i] = sg[rh[i] - 1];
                        CHECK(sigma_action(sigma_action(f, sg), rh) ==
                              sigma_action(f, comp));
                    }
                }
        }
}

TEST_CASE("contracting homotopy identity") {
    // d s_a + s_a d = id + iota_a r_a on every basis element
    for (int m = 1; m <= 7; ++m)
        for (int k = 1; k <= m; ++k)
            for (const Seq& f : all_nondeg(k, m))
                for (int a = 1; a <= k; ++a) {
                    CAPTURE(show_seq(f));
                    CAPTURE(a);
                    OpSum lhs = boundary(s_a(f, a));
                    add(lhs, op_mapped(boundary(f),
                                       [&](const Seq& b) { return s_a(b, a); }));
                    OpSum rhs = one(f);
                    add(rhs, op_mapped(r_a(f, a),
                                       [&](const Seq& b) { return iota_a(b, a); }));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("H splits the differential on boundaries") {
    // d(H(y)) = y whenever y is a boundary; this is what makes H usable to
    // lift cycles degree by degree
    for (int m = 2; m <= 7; ++m)
        for (int k = 1; k <= m; ++k)
            for (const Seq& f : all_nondeg(k, m)) {
                OpSum y = boundary(f);
                if (y.empty()) continue;
                CHECK(boundary(contracting_H(y)) == y);
            }
    // and on the degree-zero cycles seeding the diagonal approximations
    for (int p : {2, 3}) {
        Seq e0;
        for (int v = 1; v <= p; ++v) e0.push_back(v);
        std::vector<int> t;  // cyclic rotation (2 3 .. p 1)
        for (int v = 2; v <= p; ++v) t.push_back(v);
        t.push_back(1);
        OpSum y = sigma_action(e0, t);
        add(y, one(e0), -1);
        CHECK(boundary(contracting_H(y)) == y);
    }
}

TEST_CASE("composition fixtures") {
    CHECK(gamma(Seq{1, 2}, {Seq{1, 2, 1}, Seq{1}}) == parse_sum("+(1213)"));
    CHECK(gamma(Seq{1, 2, 1}, {Seq{1, 2}, Seq{1}}) == parse_sum("+(1232)+(1312)"));
    CHECK(gamma(Seq{1, 2}, {Seq{1, 2}, Seq{1, 2}}) == parse_sum("+(1234)"));
    CHECK(gamma(Seq{1, 2, 1}, {Seq{1, 2, 1}, Seq{1, 2}}) ==
          parse_sum("-(121341)-(123421)+(134121)"));
}

TEST_CASE("composition units") {
    for (const Seq& g : {Seq{1}, Seq{1, 2}, Seq{1, 2, 1}, Seq{1, 2, 1, 2},
                         Seq{1, 2, 3}, Seq{1, 2, 3, 2, 1}}) {
        std::vector<Seq> units(arity(g), Seq{1});
        CHECK(gamma(g, units) == one(g));
        CHECK(gamma(Seq{1}, {g}) == one(g));
    }
}

namespace {
const std::vector<std::pair<Seq, std::vector<Seq>>> kGammaCases = {
    {{1, 2}, {{1}, {1}}},
    {{1, 2}, {{1, 2, 1}, {1}}},
    {{1, 2}, {{1}, {1, 2, 1}}},
    {{1, 2, 1}, {{1, 2}, {1}}},
    {{1, 2, 1}, {{1}, {1, 2}}},
    {{1, 2, 1}, {{1, 2, 1}, {1}}},
    {{1, 2, 1}, {{2, 1}, {1}}},
    {{1, 2, 1, 2}, {{1, 2}, {1, 2}}},
    {{1, 2, 1}, {{1, 2}, {1, 2}}},
    {{1, 2, 3}, {{1}, {1, 2, 1}, {1}}},
    {{1, 2, 1, 3}, {{1, 2}, {1}, {1, 2}}},
    {{1, 2, 3, 1}, {{1, 2, 1}, {1}, {1}}},
    {{2, 1, 2}, {{1, 2, 1}, {1, 2}}},
    {{1, 2, 1}, {{1, 2, 1}, {2, 1}}},
    {{1, 2, 1, 2, 1}, {{1, 2, 1}, {1}}},
};
}

TEST_CASE("composition satisfies Leibniz") {
    for (const auto& [g, fs] : kGammaCases) {
        OpSum lhs = boundary(gamma(g, fs));
        std::vector<OpSum> args;
        for (const Seq& f : fs) args.push_back(one(f));
        OpSum rhs = gamma(boundary(g), args);
        for (size_t j = 0; j < fs.size(); ++j) {
            long long e = degree(g);
            for (size_t i = 0; i < j; ++i) e += degree(fs[i]);
            std::vector<OpSum> a2 = args;
            a2[j] = boundary(fs[j]);
            add(rhs, gamma(one(g), a2), sign_pow(e));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("composition associativity") {
    const std::vector<std::tuple<Seq, std::vector<Seq>, std::vector<Seq>>> cases = {
        {{1, 2}, {{1, 2}, {1}}, {{1, 2, 1}, {1}, {1}}},
        {{1, 2}, {{1}, {1, 2}}, {{1}, {2, 1}, {1, 2, 1}}},
        {{1, 2, 1}, {{1, 2}, {1}}, {{1, 2, 1}, {1}, {1}}},
        {{1, 2, 1}, {{1, 2}, {1}}, {{1}, {1, 2, 1}, {1}}},
        {{1, 2}, {{1, 2, 1}, {1}}, {{1, 2}, {1}, {1}}},
        {{1, 2, 1, 2}, {{1, 2}, {1}}, {{1}, {1, 2}, {1}}},
        {{1, 2}, {{1, 2}, {1, 2}}, {{1, 2, 1}, {1}, {1}, {1, 2}}},
    };
    for (const auto& [g, fs, hs] : cases) {
        std::vector<OpSum> hsum;
        for (const Seq& h : hs) hsum.push_back(one(h));
        OpSum lhs = gamma(gamma(g, fs), hsum);
        std::vector<std::vector<Seq>> blocks;
        size_t off = 0;
        for (const Seq& f : fs) {
            blocks.push_back(std::vector<Seq>(hs.begin() + off,
                                              hs.begin() + off + arity(f)));
            off += arity(f);
        }
        long long e = 0;
        for (size_t j = 0; j < fs.size(); ++j) {
            long long hdeg = 0, fdeg = 0;
            for (const Seq& h : blocks[j]) hdeg += degree(h);
            for (size_t i = j + 1; i < fs.size(); ++i) fdeg += degree(fs[i]);
            e += hdeg * fdeg;
        }
        std::vector<OpSum> inner;
        for (size_t j = 0; j < fs.size(); ++j)
            inner.push_back(gamma(fs[j], blocks[j]));
        OpSum rhs = scaled(gamma(one(g), inner), sign_pow(e));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("partial composition matches gamma against units") {
    OpSum x = one(Seq{1, 2, 1});
    OpSum y = one(Seq{1, 2});
    CHECK(compose(x, 1, y) == gamma(x, {y, one(Seq{1})}));
    CHECK(compose(x, 2, y) == gamma(x, {one(Seq{1}), y}));
    CHECK(full_compose(x, {y, y}) == gamma(x, {y, y}));
}

namespace {
std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}
}

TEST_CASE("composition is equivariant in each slot") {
    // gamma(h; g1 . sigma, g2) = gamma(h; g1, g2) . (sigma embedded on the
    // first block), and symmetrically for the second slot
    auto embed = [](const std::vector<int>& sig, int n1, int n2, bool first) {
        std::vector<int> p;
        if (first) {
            p = sig;
            for (int v = n1 + 1; v <= n1 + n2; ++v) p.push_back(v);
        } else {
            for (int v = 1; v <= n1; ++v) p.push_back(v);
            for (int s : sig) p.push_back(n1 + s);
        }
        return p;
    };
    for (const Seq& h : {Seq{1, 2}, Seq{2, 1}, Seq{1, 2, 1}, Seq{2, 1, 2},
                         Seq{1, 2, 1, 2}})
        for (const Seq& g1 : {Seq{1, 2}, Seq{2, 1}, Seq{1, 2, 1}})
            for (const Seq& g2 : {Seq{1}, Seq{1, 2}, Seq{2, 1}}) {
                int n1 = arity(g1), n2 = arity(g2);
                OpSum base = gamma(h, {g1, g2});
                for (const auto& sig : all_perms(n1)) {
                    OpSum lhs = gamma(one(h), {sigma_action(g1, sig), one(g2)});
                    CHECK(lhs == sigma_action(base, embed(sig, n1, n2, true)));
                }
                for (const auto& sig : all_perms(n2)) {
                    OpSum lhs = gamma(one(h), {one(g1), sigma_action(g2, sig)});
                    CHECK(lhs == sigma_action(base, embed(sig, n1, n2, false)));
                }
            }
}
