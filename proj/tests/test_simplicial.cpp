#include "doctest.h"
#include "seqop/cochain.hpp"
#include "seqop/phi.hpp"

#include <random>
#include <stdexcept>
#include <string>

using namespace seqop;

namespace {

using NamedSum = std::vector<std::pair<std::string, long long>>;

ASum coch(const CochainAlgebra& A, const NamedSum& vals) {
    ASum z;
    for (const auto& [nm, c] : vals) {
        auto at = A.space().find(nm);
        REQUIRE(at.has_value());
        add_term(z, A.cochain_id(at->first, at->second), c);
    }
    return z;
}

ASum unit(const CochainAlgebra& A, const std::string& nm) {
    return coch(A, {{nm, 1}});
}

OpSum one(const Seq& f, long long c = 1) {
    OpSum x;
    add_term(x, f, c);
    return x;
}

// pseudo-random integer cochain of the given degree, coefficients in [-3, 3]
ASum random_cochain(const CochainAlgebra& A, int deg, unsigned seed) {
    std::mt19937 rng(seed);
    ASum z;
    for (int id : A.basis(deg)) add_term(z, id, (long long)(rng() % 7) - 3);
    return z;
}

}  // namespace

TEST_CASE("face calculus on the standard simplex") {
    FiniteSimplicialSet X = standard_simplex(3);
    CHECK(X.count(0) == 4);
    CHECK(X.count(1) == 6);
    CHECK(X.count(2) == 4);
    CHECK(X.count(3) == 1);
    DegSimplex tetra = X.nondeg(3, 0);
    DegSimplex r = X.restrict(tetra, {0, 2, 3});
    CHECK(r.nondegenerate());
    CHECK(X.name(r.base_dim, r.base_id) == "023");
    auto e01 = X.find("01");
    REQUIRE(e01.has_value());
    DegSimplex s = X.degeneracy(X.nondeg(1, e01->second), 0);
    CHECK(s.dim() == 2);
    CHECK(!s.nondegenerate());
    // d_0 s_0 = d_1 s_0 = id, d_2 s_0 = s_0 d_1
    CHECK(X.face(s, 0) == X.nondeg(1, e01->second));
    CHECK(X.face(s, 1) == X.nondeg(1, e01->second));
    DegSimplex last = X.face(s, 2);
    CHECK(!last.nondegenerate());
    CHECK(X.show(last) == "s0 0");
    CHECK_THROWS_AS(X.restrict(tetra, {}), std::invalid_argument);
}

TEST_CASE("builders validate their face tables") {
    FiniteSimplicialSet P = projective_plane();
    CHECK(P.show(P.face(2, 0, 1)) == "s0 v");
    CHECK(P.show(P.face(2, 0, 0)) == "e");
    FiniteSimplicialSet S = boundary_quotient(2);
    CHECK(S.count(0) == 1);
    CHECK(S.count(1) == 0);
    CHECK(S.count(2) == 1);
    CHECK(S.basepoint() == 0);
    // a deliberately inconsistent table is rejected
    FiniteSimplicialSet B;
    B.add_simplex(0, "a");
    B.add_simplex(0, "b");
    B.add_simplex(1, "e");
    B.add_simplex(2, "t");
    B.set_faces(1, 0, {B.nondeg(0, 1), B.nondeg(0, 0)});
    B.set_faces(2, 0,
                {B.nondeg(1, 0), B.degeneracy(B.nondeg(0, 0), 0),
                 B.degeneracy(B.nondeg(0, 1), 0)});
    CHECK_THROWS_AS(B.validate(), std::invalid_argument);
}

TEST_CASE("structured text loading") {
    const std::string text = R"({
        "dimensions": {"0": ["v"], "1": ["e"], "2": ["t"]},
        "faces": {"e": ["v", "v"], "t": ["e", "s0 v", "e"]},
        "basepoint": "v"
    })";
    FiniteSimplicialSet X = load_simplicial_set(text);
    FiniteSimplicialSet P = projective_plane();
    CHECK(X.count(1) == 1);
    CHECK(X.basepoint() == P.basepoint());
    for (int i = 0; i <= 2; ++i) CHECK(X.face(2, 0, i) == P.face(2, 0, i));
    CHECK_THROWS_AS(load_simplicial_set("{"), std::invalid_argument);
    CHECK_THROWS_AS(load_simplicial_set(R"({"dimensions": {"0": ["v"]},
        "faces": {"w": []}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_simplicial_set(R"({"dimensions": {"1": ["e"]},
        "faces": {"e": ["x1 e", "e"]}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_simplicial_set(R"({"dimensions": {"0": ["v"], "1": ["e"]},
        "faces": {"e": ["v", "v"]}, "basepoint": "e"})"),
                    std::invalid_argument);
}

TEST_CASE("interval cuts reproduce frozen action values") {
    FiniteSimplicialSet D3 = standard_simplex(3);
    CochainAlgebra A3(D3, false);
    ASum z1 = coch(A3, {{"01", 3}, {"03", 3}, {"13", -3}, {"23", -1}});
    ASum z2 = coch(A3, {{"01", 1}, {"03", 3}, {"12", -1}, {"13", -1}, {"23", -1}});
    CHECK(act_lin(A3, one({1, 2}), {z1, z2}) ==
          coch(A3, {{"012", -3}, {"013", -3}}));
    CHECK(act_lin(A3, one({1, 2, 1}), {z1, z2}) ==
          coch(A3, {{"01", 3}, {"03", 9}, {"13", 3}, {"23", 1}}));
    CHECK(act_lin(A3, one({2, 1, 2}), {z1, z2}) ==
          coch(A3, {{"01", -3}, {"03", -9}, {"13", -3}, {"23", -1}}));

    FiniteSimplicialSet D4 = standard_simplex(4);
    CochainAlgebra A4(D4, false);
    ASum w1 = coch(A4, {{"012", 3}, {"014", 3}, {"024", -3}, {"034", -1},
                        {"123", 1}, {"234", 3}});
    ASum w2 = coch(A4, {{"012", 1}, {"014", 3}, {"023", -1}, {"024", -1},
                        {"034", -1}, {"123", -2}, {"124", 3}, {"134", 2},
                        {"234", 2}});
    CHECK(act_lin(A4, one({1, 2, 1, 2}), {w1, w2}) ==
          coch(A4, {{"012", 3}, {"014", 9}, {"024", 3}, {"034", 1},
                    {"123", -2}, {"234", 6}}));
    ASum u1 = coch(A4, {{"012", -2}, {"013", 1}, {"014", 3}, {"023", 3},
                        {"024", 3}, {"034", -3}, {"123", -1}, {"124", -3},
                        {"234", 3}});
    ASum u2 = coch(A4, {{"01", -2}, {"02", -3}, {"03", 2}, {"12", -1},
                        {"13", -2}, {"14", -2}, {"24", 2}});
    ASum u3 = coch(A4, {{"01", 1}, {"02", -1}, {"03", 3}, {"04", -2},
                        {"12", 2}, {"13", -1}, {"14", 3}, {"23", -2},
                        {"24", -1}});
    CHECK(act_lin(A4, one({1, 2, 1, 3, 1}), {u1, u2, u3}) ==
          coch(A4, {{"012", -8}, {"013", -2}, {"014", 18}, {"023", -18},
                    {"024", -9}, {"123", 2}, {"124", 3}}));
}

TEST_CASE("the cup product is the Alexander-Whitney cup") {
    FiniteSimplicialSet D2 = standard_simplex(2);
    CochainAlgebra A(D2, false);
    CHECK(act_lin(A, one({1, 2}), {unit(A, "01"), unit(A, "12")}) ==
          unit(A, "012"));
    CHECK(act_lin(A, one({1, 2}), {unit(A, "01"), unit(A, "02")}).empty());
    CHECK(act_lin(A, one({1, 2}), {unit(A, "0"), unit(A, "0")}) ==
          unit(A, "0"));
    CHECK(act_lin(A, one({1, 2}), {unit(A, "0"), unit(A, "1")}).empty());
    CHECK(act_lin(A, one({1, 2}), {unit(A, "0"), unit(A, "01")}) ==
          unit(A, "01"));
    CHECK(act_lin(A, one({1, 2}), {unit(A, "01"), unit(A, "1")}) ==
          unit(A, "01"));
    CHECK(act_lin(A, one({1, 2}), {unit(A, "01"), unit(A, "0")}).empty());
}

TEST_CASE("the action is a chain map over the integers") {
    struct Case {
        Seq f;
        std::vector<int> degs;
    };
    const std::vector<Case> pool = {
        {{1, 2}, {1, 1}},       {{1, 2}, {1, 2}},    {{2, 1}, {2, 1}},
        {{1, 2, 1}, {1, 1}},    {{1, 2, 1}, {2, 1}}, {{1, 2, 1}, {1, 2}},
        {{2, 1, 2}, {1, 1}},    {{1, 2, 1, 2}, {2, 2}},
        {{1, 2, 3}, {1, 1, 1}}, {{1, 2, 1, 3}, {1, 1, 1}},
        {{1, 2, 3, 2}, {1, 1, 1}},
        {{1, 2, 1, 3, 1}, {1, 1, 1}},
    };
    int cases = 0;
    for (const auto& [f, degs] : pool) {
        int qsum = 0;
        for (int q : degs) qsum += q;
        const int N = qsum - degree(f);
        if (N < 0) continue;
        FiniteSimplicialSet X = standard_simplex(N + 1);
        CochainAlgebra A(X, false);
        for (unsigned seed : {11u, 12u}) {
            std::vector<ASum> zs;
            for (size_t i = 0; i < degs.size(); ++i)
                zs.push_back(random_cochain(A, degs[i], seed + 17 * (unsigned)i));
            ASum lhs = A.differential(act_lin(A, one(f), zs));
            ASum rhs = act_lin(A, boundary(f), zs);
            long long pre = degree(f);
            for (size_t i = 0; i < zs.size(); ++i) {
                std::vector<ASum> moved = zs;
                moved[i] = A.differential(zs[i]);
                add(rhs, act_lin(A, one(f), moved), sign_pow(pre));
                pre += degs[i];
            }
            CAPTURE(show_seq(f));
            CHECK(lhs == rhs);
            ++cases;
        }
    }
    CHECK(cases == 24);
}

TEST_CASE("projective plane cohomology carries the first square") {
    FiniteSimplicialSet P = projective_plane();
    CochainAlgebra A(P, false);
    ASum e = unit(A, "e");
    ASum t = unit(A, "t");
    CHECK(A.differential(e) == scaled(t, 2));
    CHECK(cochain_homology(A, 0, 2).dim() == 1);
    CHECK(cochain_homology(A, 1, 2).dim() == 1);
    CHECK(cochain_homology(A, 2, 2).dim() == 1);
    CHECK(cochain_homology(A, 1, 3).dim() == 0);
    CHECK(cochain_homology(A, 2, 3).dim() == 0);
    // the top square of the degree-one class: e* cup e* represents Sq^1
    ASum sq = act_lin(A, one({1, 2}), {e, e});
    CHECK(sq == t);
    HomologySlice H2 = cochain_homology(A, 2, 2);
    Vec cls = H2.reduce(Vec{1});
    CHECK(cls == Vec{1});  // nonzero: Sq^1 sends H^1 onto H^2
    // cup-1 witness: d((121)(z, z)) = (12)(z, z) + (21)(z, z) mod 2
    ASum lhs = A.differential(act_lin(A, one({1, 2, 1}), {e, e}));
    ASum rhs = act_lin(A, one({1, 2}), {e, e});
    add(rhs, act_lin(A, one({2, 1}), {e, e}));
    CHECK(eq_mod(lhs, rhs, 2));
}

TEST_CASE("loop cohomology of small quotient spheres") {
    SUBCASE("the two-sphere has one class in every degree") {
        FiniteSimplicialSet S = boundary_quotient(2);
        LoopCohomologyTable T = loop_cohomology(S, 2, 5);
        CHECK(T.dims == std::vector<int>{1, 1, 1, 1, 1});
        LoopCohomologyTable again = loop_cohomology(S, 2, 5);
        CHECK(again.dims == T.dims);
        REQUIRE(again.ops.size() == T.ops.size());
        for (size_t i = 0; i < T.ops.size(); ++i)
            CHECK(again.ops[i].value == T.ops[i].value);
    }
    SUBCASE("the three-sphere alternates") {
        LoopCohomologyTable T = loop_cohomology(boundary_quotient(3), 2, 5);
        CHECK(T.dims == std::vector<int>{1, 0, 1, 0, 1});
    }
    SUBCASE("a point has nothing above degree zero") {
        FiniteSimplicialSet X;
        X.add_simplex(0, "*");
        X.set_basepoint(0);
        LoopCohomologyTable T = loop_cohomology(X, 2, 4);
        CHECK(T.dims == std::vector<int>{1, 0, 0, 0});
        CHECK(T.ops.empty());
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(loop_cohomology(projective_plane(), 2, 4),
                        std::invalid_argument);
        CHECK_THROWS_AS(loop_cohomology(boundary_quotient(2), 2, 0),
                        std::invalid_argument);
        FiniteSimplicialSet X;
        X.add_simplex(0, "*");
        CHECK_THROWS_AS(loop_cohomology(X, 2, 3), std::invalid_argument);
    }
}

TEST_CASE("squares on the sphere loop classes") {
    FiniteSimplicialSet S = boundary_quotient(2);
    CochainAlgebra A(S, true);
    BarComplex C(A, 5);
    BarCohomology H(C, 2);
    PhiTable tab = build_phi(2, 4);
    for (int n = 0; n <= 4; ++n) CHECK(H.dim(n) == 1);
    CohomologyClass c1{1, Vec{1}};
    CohomologyClass c2{2, Vec{1}};
    SUBCASE("vanishing above the degree") {
        CHECK(steenrod_P(H, tab, 2, c1).coords == Vec{0});
        CHECK(steenrod_P(H, tab, 3, c1).coords == Vec{0});
    }
    SUBCASE("the top square is the cup square") {
        for (const CohomologyClass& c : {c1, c2}) {
            BarSum rep = H.representative(c.degree, 0);
            Vec cup = H.class_of(2 * c.degree, bar_product(A, rep, rep));
            CHECK(steenrod_P(H, tab, c.degree, c).coords == cup);
        }
    }
    SUBCASE("the zeroth square fixes the bottom class") {
        // an observation about this complex, not an assumed axiom
        CHECK(steenrod_P(H, tab, 0, c1).coords == Vec{1});
    }
    SUBCASE("representatives may move by coboundaries") {
        // the sphere slices happen to have no coboundaries at all, so the
        // perturbation basis is empty here; the matrix-level suite exercises
        // the nonvacuous case
        for (const CohomologyClass& c : {c1, c2}) {
            const int q = c.degree;
            BarSum rep = H.representative(q, 0);
            Mat d = C.boundary_matrix(q - 1, 2);
            int perturbations = 0;
            for (size_t j = 0; j < (q >= 1 ? C.slice(q - 1).size() : 0); ++j) {
                Vec col(d.size());
                for (size_t i = 0; i < d.size(); ++i) col[i] = d[i][j];
                BarSum moved = rep;
                add(moved, C.from_coords(q, col));
                CHECK(H.class_of(q, moved) == H.class_of(q, rep));
                if (!is_zero(C.from_coords(q, col))) ++perturbations;
            }
            CHECK(perturbations == 0);
        }
    }
}

TEST_CASE("the bar chain map identity holds over the sphere cochains") {
    FiniteSimplicialSet S = boundary_quotient(2);
    CochainAlgebra A(S, true);
    int t = A.basis(2).at(0);
    BarSum w1, w2;
    add_term(w1, Word{t}, 1LL);
    add_term(w2, Word{t, t}, 1LL);
    const std::vector<Seq> ops = {{1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2},
                                  {1, 2, 1, 2}, {1, 2, 3}};
    for (const Seq& f : ops) {
        const int k = arity(f);
        std::vector<std::vector<BarSum>> slots;
        if (k == 2) slots = {{w1, w1}, {w1, w2}, {w2, w2}};
        else slots = {{w1, w1, w1}, {w1, w2, w1}};
        for (const auto& words : slots) {
            BarSum lhs = bar_boundary(A, phi(A, f, {words[0]....
