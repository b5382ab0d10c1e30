#include "qsp/quasik.hpp"

#include <algorithm>
#include <map>

namespace qsp {

namespace {

FieldElem qpow_int(long k) { return FieldElem::mono(Gauss(1), static_cast<int>(k), 1); }

// columns of the flattened operators, restricted to positions where some entry is nonzero
std::vector<int> independent(const std::vector<Mat>& ops) {
    if (ops.empty()) return {};
    int N = ops[0].rows();
    std::vector<int> pos;
    for (int r = 0; r < N * N; ++r)
        for (const auto& X : ops)
            if (!X.at(r / N, r % N).is_zero()) {
                pos.push_back(r);
                break;
            }
    if (pos.empty()) return {};
    Mat A(static_cast<int>(pos.size()), static_cast<int>(ops.size()));
    for (size_t k = 0; k < ops.size(); ++k)
        for (size_t r = 0; r < pos.size(); ++r) A.at(r, k) = ops[k].at(pos[r] / N, pos[r] % N);
    return A.rref();
}

// basis of the image of U^+_{J,mu} in End(M) for all nonzero mu in NJ
std::vector<Mat> raising_basis(const WModule& M, const std::vector<int>& J) {
    std::map<IVec, std::vector<Mat>> level;
    level[IVec(M.rd.n, 0)] = {M.identity()};
    std::vector<Mat> out;
    while (!level.empty()) {
        std::map<IVec, std::vector<Mat>> next;
        for (const auto& [mu, ops] : level)
            for (int j : J) {
                IVec nu = mu;
                ++nu[j];
                for (const auto& X : ops) {
                    Mat Y = M.E[j] * X;
                    if (!Y.is_zero()) next[nu].push_back(std::move(Y));
                }
            }
        level.clear();
        for (auto& [nu, ops] : next) {
            auto keep = independent(ops);
            if (keep.empty()) continue;
            std::vector<Mat> b;
            for (int k : keep) b.push_back(ops[k]);
            for (const auto& X : b) out.push_back(X);
            level[nu] = std::move(b);
        }
    }
    return out;
}

struct Condition {
    Mat L, R;  // L U = U R
};

QuasiK solve(const WModule& M, int node, std::vector<int> J, const std::vector<Condition>& conds) {
    QuasiK qk;
    qk.node = node;
    std::sort(J.begin(), J.end());
    qk.J = J;
    auto P = raising_basis(M, J);
    int m = static_cast<int>(P.size()), N = M.dim();
    qk.unknowns = m;
    Mat I = M.identity();
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& c : conds) {
        std::vector<Mat> cols;
        for (const auto& X : P) cols.push_back(c.L * X - X * c.R);
        Mat rhs = c.R - c.L;
        for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s) {
                std::vector<FieldElem> row(m + 1);
                bool nz = !rhs.at(r, s).is_zero();
                for (int k = 0; k < m; ++k) {
                    row[k] = cols[k].at(r, s);
                    nz = nz || !row[k].is_zero();
                }
                row[m] = rhs.at(r, s);
                if (nz) rows.push_back(std::move(row));
            }
    }
    qk.U = I;
    if (rows.empty()) return qk;
    if (m == 0) throw QuasiKError("intertwining system is inconsistent");
    Mat A(static_cast<int>(rows.size()), m), b(static_cast<int>(rows.size()), 1);
    for (size_t r = 0; r < rows.size(); ++r) {
        for (int k = 0; k < m; ++k) A.at(r, k) = rows[r][k];
        b.at(r, 0) = rows[r][m];
    }
    Mat x;
    if (!A.solve(b, x)) throw QuasiKError("intertwining system is inconsistent");
    qk.unique = A.rank() == m;
    for (int k = 0; k < m; ++k)
        if (!x.at(k, 0).is_zero()) qk.U = qk.U + P[k].scaled(x.at(k, 0));
    return qk;
}

std::vector<Condition> conditions(const SatakeDatum& sd, const Parameter& p, const std::vector<int>& white,
                                  const WModule& M) {
    std::vector<Condition> out;
    for (int j : white) out.push_back({coideal_generator(sd, p, j, M), transported_bar(sd, p, j, M)});
    for (int j : sd.black_set) {
        out.push_back({M.E[j], M.E[j]});
        out.push_back({M.F[j], M.F[j]});
        out.push_back({M.Ki(j), M.Ki(j)});
    }
    for (int j : white)
        if (sd.tau[j] != j) {
            Mat T = M.Ki(j) * M.Ki(sd.tau[j], -1);
            out.push_back({T, T});
        }
    return out;
}

}  // namespace

Mat transported_bar(const SatakeDatum& sd, const Parameter& p, int j, const WModule& M) {
    int t = sd.tau[j];
    FieldElem cp = p.c[t] * qpow_int(uniform_exponent(sd, t));
    if (uniform_sign(sd, t) < 0) cp = -cp;
    Mat K = M.Ki(j);
    Mat out = M.F[j] + (raising_part(sd, j, M).bar() * K).scaled(cp);
    if (!p.s[j].is_zero()) out = out + K.scaled(p.s[j].bar());
    return out;
}

QuasiK quasi_k(const SatakeDatum& sd, const Parameter& p, int i, const WModule& M) {
    if (!sd.is_white(i)) throw QuasiKError("quasi-K index must be a white node");
    std::vector<int> white{i};
    if (sd.tau[i] != i) white.push_back(sd.tau[i]);
    std::vector<int> J = white;
    for (int j : sd.black_set) J.push_back(j);
    return solve(M, i, J, conditions(sd, p, white, M));
}

QuasiK quasi_k_full(const SatakeDatum& sd, const Parameter& p, const WModule& M) {
    std::vector<int> J(sd.rd.n);
    for (int k = 0; k < sd.rd.n; ++k) J[k] = k;
    return solve(M, -1, J, conditions(sd, p, sd.white, M));
}

QuasiKReport check_quasi_k(const SatakeDatum& sd, const Parameter& p, const QuasiK& qk, const WModule& M) {
    QuasiKReport r;
    const Mat& U = qk.U;
    for (int a = 0; a < M.dim(); ++a)
        for (int b = 0; b < M.dim(); ++b) {
            if (M.wt[a] != M.wt[b]) continue;
            FieldElem want = a == b ? FieldElem(1) : FieldElem(0);
            if (U.at(a, b) != want) r.weight_zero_identity = false;
        }
    r.bar_inverse = (U.bar() * U).is_identity();
    std::vector<int> white;
    if (qk.node < 0) {
        white = sd.white;
    } else {
        white.push_back(qk.node);
        if (sd.tau[qk.node] != qk.node) white.push_back(sd.tau[qk.node]);
    }
    for (const auto& c : conditions(sd, p, white, M))
        if (c.L * U != U * c.R) r.residual_zero = false;
    return r;
}

Mat wz_operator(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M, const QuasiK& qk) {
    return qk.U * rescaled_T(sd, i, p.c, M);
}

Mat wz_operator(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M) {
    return wz_operator(sd, p, i, M, quasi_k(sd, p, i, M));
}

Vec wz_on_vector(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M, const Vec& v) {
    return matvec(wz_operator(sd, p, i, M), v);
}

CheckResult wz_character_check(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M,
                               const SphericalLine& line) {
    CheckResult res;
    Mat W = wz_operator(sd, p, i, M);
    Vec u = matvec(W.inverse(), line.v);
    auto g = coideal_generators(sd, p, M);
    for (const auto& [j, B] : g.B) {
        Vec Bu = matvec(B, u);
        for (int k = 0; k < M.dim(); ++k)
            if (Bu[k] != line.chi.value[j] * u[k]) {
                res.ok = false;
                res.certificate = "B_" + std::to_string(j + 1) + " value changes under r_" + std::to_string(i + 1);
                return res;
            }
    }
    if (!is_spherical(M, g, line.chi, u)) {
        res.ok = false;
        res.certificate = "image is not annihilated by the Levi and torus part";
    }
    return res;
}

Vec iota_bar_normalize(const Mat& U, const Vec& v) {
    Vec s = matvec(U, bar_vector(v));
    int k = 0;
    while (k < static_cast<int>(v.size()) && v[k].is_zero()) ++k;
    if (k == static_cast<int>(v.size())) throw QuasiKError("zero vector");
    FieldElem kappa = s[k] / v[k];
    for (size_t r = 0; r < v.size(); ++r)
        if (s[r] != kappa * v[r]) throw QuasiKError("line is not stable under the iota-bar involution");
    // a v is invariant for a = 1 + kappa, or a = i (1 - kappa) when kappa = -1
    FieldElem a = kappa == FieldElem(-1) ? FieldElem::i_unit() * (FieldElem(1) - kappa) : FieldElem(1) + kappa;
    Vec out(v.size());
    for (size_t r = 0; r < v.size(); ++r) out[r] = a * v[r];
    return out;
}

}  // namespace qsp
