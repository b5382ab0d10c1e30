#include "doctest.h"
#include "qsp/spherical.hpp"

using namespace qsp;

namespace {

FieldElem q(int k, int d = 1) { return FieldElem::mono(Gauss(1), k, d); }

Parameter param(const SatakeDatum& sd, std::vector<FieldElem> c) {
    Parameter p = zero_parameter(sd);
    p.c = std::move(c);
    return p;
}

SatakeDatum aiii3() { return SatakeDatum(RootDatum::of_type('A', 3), {}, {2, 1, 0}); }

MatrixCoefficient zonal(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M) {
    for (const auto& line : find_spherical_lines(sd, p, M).lines)
        if (line.chi.trivial_on_B()) return {&M, find_dual_spherical(sd, p, M, line.chi), line.v};
    throw std::runtime_error("no zonal line");
}

}  // namespace

TEST_CASE("restriction of the trivial coefficient") {
    auto sd = rank_one_diagram("AI1").sd;
    auto M = build_simple(sd.rd, {0});
    MatrixCoefficient c{&M, {FieldElem(1)}, {FieldElem(1)}};
    auto t = restrict_torus(sd, c);
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms.begin()->first == QVec{0});
    CHECK(t.terms.begin()->second == FieldElem(1));
    CHECK(is_weyl_invariant(sd, t).ok);
    CHECK(c(M.identity()) == FieldElem(1));
}

TEST_CASE("restriction agrees with torus evaluation") {
    auto sd = rank_one_diagram("AIII11").sd;
    auto M = build_simple(sd.rd, {1, 1});
    auto p = param(sd, {q(1, 2), q(1, 2)});
    auto c = zonal(sd, p, M);
    auto t = restrict_torus(sd, c);
    for (int n = -3; n <= 3; ++n) {
        QVec h;
        for (auto x : sd.ytheta[0]) h.push_back(n * x);
        CHECK(t.at({n}) == c.at_K(h));
    }
}

TEST_CASE("sl3 vector representation coefficient") {
    auto sd = rank_one_diagram("AIII11").sd;
    auto M = build_simple(sd.rd, {1, 0});
    FieldElem c1(2), c2(3);
    auto p = param(sd, {c1, c2});
    auto lines = find_spherical_lines(sd, p, M).lines;
    REQUIRE(lines.size() == 1);
    MatrixCoefficient c{&M, find_dual_spherical(sd, p, M, lines[0].chi), lines[0].v};
    auto t = restrict_torus(sd, c);
    // Y_Theta is spanned by rho, so t.at({n}) is the value at K_{n rho}
    for (int n = -4; n <= 4; ++n) CHECK(t.at({n}) == q(n) + q(-1) * c2 / c1 * q(-n));
    auto inv = is_weyl_invariant(sd, restrict_torus(sd, c));
    CHECK_FALSE(inv.ok);

    auto pb = param(sd, {FieldElem(1), FieldElem(1)});
    MatrixCoefficient cb{&M, find_dual_spherical(sd, pb, M, find_spherical_lines(sd, pb, M).lines[0].chi),
                         find_spherical_lines(sd, pb, M).lines[0].v};
    inv = is_weyl_invariant(sd, restrict_torus(sd, cb));
    CHECK_FALSE(inv.ok);
    CHECK(inv.generator == 0);
    CHECK(!inv.key.empty());
}

TEST_CASE("relative Weyl action on keys") {
    auto a1 = rank_one_diagram("AI1").sd;
    TorusFunction t;
    t.terms[{3}] = q(1);
    t.terms[{-1}] = FieldElem(2);
    auto w = weyl_act(a1, 0, t);
    CHECK(w.terms.at({-3}) == q(1));
    CHECK(w.terms.at({1}) == FieldElem(2));
    CHECK(weyl_act(a1, std::vector<int>{}, t) == t);
    CHECK(weyl_act(a1, std::vector<int>{0, 0}, t) == t);

    auto sd = aiii3();
    // basis (alpha_1 + alpha_3, alpha_2); r_2 h = m b_1 + (2m - n) b_2 for h = m b_1 + n b_2
    TorusFunction u;
    u.terms[{1, -1}] = FieldElem(1);
    auto r2 = weyl_act(sd, 1, u);
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) CHECK(r2.at({m, n}) == u.at({m, 2 * m - n}));
}

TEST_CASE("AIII3 example restriction") {
    auto sd = aiii3();
    auto p = param(sd, {FieldElem(1), q(-1), FieldElem(1)});
    auto M = build_simple(sd.rd, {0, 1, 0});
    auto lines = find_spherical_lines(sd, p, M).lines;
    REQUIRE(!lines.empty());
    for (const auto& line : lines) {
        MatrixCoefficient c{&M, find_akin_dual(sd, p, M, line.chi), line.v};
        auto t = restrict_torus(sd, c);
        for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n) CHECK(t.at({m, n}) == q(n) + q(2 * m - n) + q(n - 2 * m) + q(-n));
        CHECK(is_weyl_invariant(sd, t).ok);
    }
}

TEST_CASE("akin restrictions are Weyl invariant on AI1") {
    auto sd = rank_one_diagram("AI1").sd;
    auto p = distinguished_parameter(sd);
    for (int n = 1; n <= 4; ++n) {
        auto M = build_simple(sd.rd, {n});
        for (const auto& line : find_spherical_lines(sd, p, M).lines) {
            MatrixCoefficient c{&M, find_akin_dual(sd, p, M, line.chi), line.v};
            CHECK(is_weyl_invariant(sd, restrict_torus(sd, c)).ok);
        }
    }
}

TEST_CASE("rho shifts") {
    auto sd = rank_one_diagram("AI1").sd;
    auto M = build_simple(sd.rd, {2});
    auto c = zonal(sd, param(sd, {q(-1)}), M);
    auto same = rho_shift(c, {0});
    CHECK(same.f == c.f);
    // zonal coefficient on L(2 omega_1): q^{2h} + q^{-2-2h}
    for (int h = -3; h <= 3; ++h) CHECK(c.at_K({h}) == q(2 * h) + q(-2 - 2 * h));
    auto back = rho_shift(c, {-1});
    for (int h = -3; h <= 3; ++h) CHECK(c.at_K({-h}) == back.at_K({h}));
    auto half = rho_shift(c, {mpq_class(-1, 2)});
    CHECK(is_weyl_invariant(sd, restrict_torus(sd, half)).ok);
    CHECK(coweight_box(2, 1).size() == 9);
}

TEST_CASE("WZ precomposition") {
    auto sd = rank_one_diagram("AI1").sd;
    auto p = param(sd, {q(-1)});
    auto M0 = build_simple(sd.rd, {0});
    MatrixCoefficient triv{&M0, {FieldElem(1)}, {FieldElem(1)}};
    auto t = wz_precompose(sd, p, 0, triv);
    CHECK(t.f == triv.f);
    CHECK(t.v == triv.v);

    auto M = build_simple(sd.rd, {2});
    auto words = evaluation_words(sd.rd, 2, 6, 3);
    for (const auto& line : find_spherical_lines(sd, p, M).lines) {
        MatrixCoefficient c{&M, find_dual_spherical(sd, p, M, line.chi), line.v};
        CHECK(wz_spherical_check(sd, p, 0, c, words).ok);
        auto pre = wz_precompose(sd, p, 0, c);
        for (int h = -2; h <= 2; ++h) CHECK(pre.at_K({-h}) == c.at_K({h}));
    }

    auto s4 = aiii3();
    auto p4 = param(s4, {FieldElem(1), q(-1), FieldElem(1)});
    auto M4 = build_simple(s4.rd, {0, 1, 0});
    auto w4 = evaluation_words(s4.rd, 1, 8, 5);
    for (const auto& line : find_spherical_lines(s4, p4, M4).lines) {
        MatrixCoefficient c{&M4, find_dual_spherical(s4, p4, M4, line.chi), line.v};
        for (int i : s4.white) CHECK(wz_spherical_check(s4, p4, i, c, w4).ok);
    }
}

TEST_CASE("tau0 bar symmetry") {
    auto a1 = rank_one_diagram("AI1").sd;
    auto p1 = param(a1, {q(-1)});
    auto M1 = build_simple(a1.rd, {2});
    CHECK(tau0_bar_check(a1, p1, zonal(a1, p1, M1), 3).ok);
    auto M0 = build_simple(a1.rd, {0});
    CHECK(tau0_bar_check(a1, p1, MatrixCoefficient{&M0, {FieldElem(1)}, {FieldElem(1)}}, 2).ok);

    auto a2 = rank_one_diagram("AIII11").sd;
    auto p2 = param(a2, {q(1, 2), q(1, 2)});
    auto M2 = build_simple(a2.rd, {1, 1});
    CHECK(tau0_bar_check(a2, p2, zonal(a2, p2, M2), 2).ok);
}

TEST_CASE("w_bullet braid operators agree on spherical vectors") {
    auto sd = rank_one_diagram("AII3").sd;
    auto p = distinguished_parameter(sd);
    auto M = build_simple(sd.rd, {0, 1, 0});
    auto lines = find_spherical_lines(sd, p, M).lines;
    REQUIRE(!lines.empty());
    for (const auto& line : lines) CHECK(appendixB_check(sd, M, line.v).ok);
    Vec r(M.dim());
    for (int k = 0; k < M.dim(); ++k) r[k] = FieldElem(k + 1);
    CHECK_FALSE(appendixB_check(sd, M, r).ok);

    auto a1 = rank_one_diagram("AI1").sd;
    auto M1 = build_simple(a1.rd, {2});
    CHECK(appendixB_check(a1, M1, Vec{FieldElem(1), FieldElem(2), FieldElem(3)}).ok);
}
