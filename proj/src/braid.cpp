#include "qsp/braid.hpp"

#include "qsp/qsp.hpp"

namespace qsp {

namespace {

// divided powers X^(k) = X^k / [k]_i!, k = 0.. until the power vanishes
std::vector<Mat> divided_powers(const Mat& X, int di) {
    std::vector<Mat> out{Mat::identity(X.rows())};
    Mat p = out[0];
    for (int k = 1;; ++k) {
        p = p * X;
        if (p.is_zero()) break;
        out.push_back(p.scaled(qfact(k, di).inv()));
    }
    return out;
}

}  // namespace

Mat lusztig_T(const WModule& M, int i, int e, Kind kind) {
    M.rd.check_index(i);
    if (e != 1 && e != -1) throw BraidError("sign e must be +1 or -1");
    int di = M.rd.d[i];
    auto Fp = divided_powers(M.F[i], di), Ep = divided_powers(M.E[i], di);
    // T' = sum F^(a) E^(b) F^(c), a-b+c = m; T'' = sum E^(a) F^(b) E^(c), -a+b-c = m
    const auto& outer = kind == Kind::Prime ? Fp : Ep;
    const auto& mid = kind == Kind::Prime ? Ep : Fp;
    int N = M.dim();
    Mat T(N, N);
    for (int k = 0; k < N; ++k) {
        int m = M.wt[k][i];
        Vec ek(N, FieldElem(0));
        ek[k] = FieldElem(1);
        Vec acc(N, FieldElem(0));
        for (int c = 0; c < static_cast<int>(outer.size()); ++c) {
            Vec x = matvec(outer[c], ek);
            if (vec_is_zero(x)) break;
            for (int b = 0; b < static_cast<int>(mid.size()); ++b) {
                int a = kind == Kind::Prime ? m + b - c : b - c - m;
                if (a < 0) continue;
                if (a >= static_cast<int>(outer.size())) continue;
                Vec y = matvec(outer[a], matvec(mid[b], x));
                if (vec_is_zero(y)) continue;
                FieldElem coef = FieldElem::mono(Gauss(b % 2 ? -1 : 1), di * e * (b - a * c), 1);
                for (int r = 0; r < N; ++r)
                    if (!y[r].is_zero()) acc[r] += coef * y[r];
            }
        }
        for (int r = 0; r < N; ++r) T.at(r, k) = acc[r];
    }
    return T;
}

Mat lusztig_T_word(const WModule& M, const Word& w, int e, Kind kind) {
    Mat T = M.identity();
    for (int i : w) T = T * lusztig_T(M, i, e, kind);
    return T;
}

Mat conjugate_by(const Mat& T, const Mat& X) { return T * X * T.inverse(); }

Mat conjugate_element(const WModule& M, const Word& w, int e, Kind kind, const Mat& X) {
    if (X.rows() != M.dim()) throw BraidError("operator does not act on this module");
    return conjugate_by(lusztig_T_word(M, w, e, kind), X);
}

Mat phi_diag(const SimpleModule& M, const std::vector<FieldElem>& a) {
    if (static_cast<int>(a.size()) != M.rd.n) throw BraidError("twist tuple has wrong length");
    std::vector<FieldElem> roots;
    for (const auto& x : a) {
        auto r = monomial_sqrt(x.promoted(M.d));
        if (!r) r = field_sqrt(x.promoted(M.d));
        if (!r) throw NotRepresentable("no square root of " + x.str() + " at root order " + std::to_string(M.d));
        roots.push_back(*r);
    }
    Mat D(M.dim(), M.dim());
    for (int k = 0; k < M.dim(); ++k) {
        FieldElem p(1);
        for (int i : M.fword[k]) p *= roots[i];
        D.at(k, k) = p;
    }
    return D;
}

Mat phi_apply(const SimpleModule& M, const std::vector<FieldElem>& a, const Mat& X) {
    Mat D = phi_diag(M, a);
    return D.inverse() * X * D;
}

std::vector<FieldElem> rescaling_tuple(const SatakeDatum& sd, const std::vector<FieldElem>& c, int d) {
    auto cd = distinguished_parameter(sd, d);
    std::vector<FieldElem> a(sd.rd.n, FieldElem(1));
    for (int i : sd.white) a[i] = cd.c[i].bar() * c.at(i);
    return a;
}

Mat rescaled_T(const SatakeDatum& sd, int i, const std::vector<FieldElem>& c, const SimpleModule& M) {
    Mat T = lusztig_T_word(M, sd.relative_generator(i), -1, Kind::Prime);
    return phi_apply(M, rescaling_tuple(sd, c, M.d), T);
}

}  // namespace qsp
