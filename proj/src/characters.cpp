#include "qsp/characters.hpp"

#include <algorithm>
#include <functional>

namespace qsp {

namespace {

FieldElem qd(int k, int d) { return FieldElem::mono(Gauss(1), k, d); }

std::vector<FieldElem> zero_values(int n) { return std::vector<FieldElem>(n, FieldElem(0)); }

Vec normalize_at(const Vec& v, int k) {
    FieldElem s = v[k].inv();
    Vec out(v.size());
    for (size_t r = 0; r < v.size(); ++r) out[r] = v[r] * s;
    return out;
}

}  // namespace

FieldElem eigenvalue(const FieldElem& c, const FieldElem& s, int di, int l, int d) {
    FieldElem qi = qd(di * d, d);
    FieldElem ql = qd(di * l * d, d), qml = qd(-di * l * d, d);
    FieldElem diff = qi - qi.inv();
    if (s.is_zero()) {
        auto r = monomial_sqrt((qi * c).promoted(d));
        if (!r) r = field_sqrt((qi * c).promoted(d));
        if (!r) throw NotRepresentable("no square root of q_i c = " + (qi * c).str());
        return (ql - qml) / diff * *r;
    }
    FieldElem rad = s * s + FieldElem(4) * qi * c / (diff * diff);
    auto r = field_sqrt(rad.promoted(d));
    if (!r) throw NotRepresentable("no square root of " + rad.str());
    FieldElem half = FieldElem(Gauss(mpq_class(1, 2)));
    return half * (ql - qml) * *r + half * s * (ql - FieldElem(2) + qml) + s;
}

Mat spherical_system(const SimpleModule& M, const CoidealGenerators& g, const std::vector<FieldElem>& bvals,
                     const IVec& lambda, bool right) {
    auto side = [&](const Mat& X) { return right ? rho_op(M, X) : X; };
    std::vector<Mat> rows;
    Mat I = M.identity();
    for (const auto& [i, B] : g.B) rows.push_back(side(B) - I.scaled(bvals.at(i)));
    for (size_t k = 0; k < g.black.size(); ++k) {
        rows.push_back(side(g.Eb[k]));
        rows.push_back(side(g.Fb[k]));
    }
    for (size_t k = 0; k < g.torus.size(); ++k)
        rows.push_back(g.torus[k] - I.scaled(FieldElem::qpow(RootDatum::pair(g.torus_h[k], lambda), M.d)));
    if (rows.empty()) return Mat(0, M.dim());
    return vstack(rows);
}

bool is_spherical(const SimpleModule& M, const CoidealGenerators& g, const Character& chi, const Vec& v) {
    Mat A = spherical_system(M, g, chi.value, chi.lambda, false);
    return vec_is_zero(matvec(A, v));
}

LineSearch find_spherical_lines(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M) {
    LineSearch out;
    auto g = coideal_generators(sd, p, M);
    auto ns = nonstandard_nodes(sd);
    IVec low = M.rd.w0_weight(M.lambda);
    std::vector<int> bound;
    for (int i : ns) bound.push_back(M.lambda[i] - low[i]);

    std::vector<int> labels(ns.size(), 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k < ns.size()) {
            for (int l = -bound[k]; l <= bound[k]; ++l) {
                labels[k] = l;
                rec(k + 1);
            }
            return;
        }
        Character chi{M.lambda, {}, zero_values(sd.rd.n)};
        try {
            for (size_t t = 0; t < ns.size(); ++t) {
                int i = ns[t];
                chi.l[i] = labels[t];
                chi.value[i] = eigenvalue(p.c[i], p.s[i], sd.rd.d[i], labels[t], M.d);
            }
        } catch (const NotRepresentable& e) {
            out.warnings.push_back("skipped candidate: " + std::string(e.what()));
            return;
        }
        Mat K = spherical_system(M, g, chi.value, M.lambda, false).nullspace();
        if (K.cols() == 0) return;
        SphericalLine line;
        line.chi = chi;
        line.multiplicity = K.cols();
        out.max_multiplicity = std::max(out.max_multiplicity, K.cols());
        Vec v = to_vec(K.col(0));
        if (v[M.hi].is_zero()) {
            line.shape_ok = false;
            line.v = v;
        } else {
            line.v = normalize_at(v, M.hi);
            line.shape_ok = !line.v[M.lo].is_zero();
        }
        out.lines.push_back(std::move(line));
    };
    rec(0);
    return out;
}

Vec find_dual_spherical(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M, const Character& chi) {
    auto g = coideal_generators(sd, p, M);
    Mat K = spherical_system(M, g, chi.value, chi.lambda, true).nullspace();
    if (K.cols() == 0) throw ModuleError("no right spherical vector: complete reducibility fails");
    if (K.cols() > 1) throw ModuleError("right spherical space has dimension " + std::to_string(K.cols()));
    Vec f = to_vec(K.col(0));
    if (f[M.hi].is_zero()) throw ModuleError("right spherical vector has no v_lambda component");
    return normalize_at(f, M.hi);
}

Character akin_character(const Character& chi) {
    Character out = chi;
    out.l.clear();
    std::fill(out.value.begin(), out.value.end(), FieldElem(0));
    return out;
}

Vec find_akin_dual(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M, const Character& chi) {
    Parameter sh = chi_shift(sd, p, chi, M.d);
    auto g = coideal_generators(sd, sh, M);
    Mat K = spherical_system(M, g, zero_values(sd.rd.n), chi.lambda, true).nullspace();
    if (K.cols() == 0) throw ModuleError("no spherical vector for the shifted coideal");
    if (K.cols() > 1) throw ModuleError("shifted spherical space has dimension " + std::to_string(K.cols()));
    Vec f = to_vec(K.col(0));
    if (f[M.hi].is_zero()) throw ModuleError("shifted spherical vector has no v_lambda component");
    return normalize_at(f, M.hi);
}

bool same_character(const SatakeDatum& sd, const Character& a, const Character& b) {
    for (int i : sd.white)
        if (a.value[i] != b.value[i]) return false;
    for (const auto& h : theta_torus_basis(sd))
        if (RootDatum::pair(h, a.lambda) != RootDatum::pair(h, b.lambda)) return false;
    return true;
}

std::vector<IVec> dominant_weights(int n, int bound, const std::vector<int>& zero_nodes) {
    std::vector<IVec> out;
    IVec cur(n, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        bool zero = std::find(zero_nodes.begin(), zero_nodes.end(), k) != zero_nodes.end();
        for (int a = 0; a <= (zero ? 0 : left); ++a) {
            cur[k] = a;
            rec(k + 1, left - a);
        }
        cur[k] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        return sa != sb ? sa < sb : a < b;
    });
    return out;
}

ScanReport hermitian_scan(const SatakeDatum& sd, const Parameter& p, const std::vector<IVec>& weights, int d,
                          int dim_cap) {
    ScanReport rep;
    for (const auto& lam : weights) {
        auto M = build_simple(sd.rd, lam, d, dim_cap);
        auto res = find_spherical_lines(sd, p, M);
        for (auto& w : res.warnings) rep.warnings.push_back(std::move(w));
        rep.max_multiplicity = std::max(rep.max_multiplicity, res.max_multiplicity);
        for (const auto& line : res.lines) {
            if (!line.shape_ok) rep.shape_ok = false;
            bool seen = std::any_of(rep.distinct.begin(), rep.distinct.end(),
                                    [&](const Character& c) { return same_character(sd, c, line.chi); });
            if (seen) continue;
            rep.distinct.push_back(line.chi);
            bool trivial = line.chi.trivial_on_B();
            for (const auto& h : theta_torus_basis(sd))
                if (RootDatum::pair(h, line.chi.lambda) != 0) trivial = false;
            if (!trivial) ++rep.nontrivial;
        }
        rep.per_weight.emplace_back(lam, std::move(res.lines));
    }
    return rep;
}

}  // namespace qsp
