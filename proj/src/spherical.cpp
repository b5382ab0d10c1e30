#include "qsp/spherical.hpp"

#include <functional>
#include <sstream>

namespace qsp {

namespace {

Vec G_times(const SimpleModule& M, const Vec& f) { return matvec(M.G, f); }

FieldElem dot(const Vec& a, const Vec& b) {
    FieldElem s(0);
    for (size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

QVec two_rho(const RootDatum& rd) {
    QVec r = rd.rho_coweight();
    for (auto& x : r) x *= 2;
    return r;
}

}  // namespace

FieldElem MatrixCoefficient::operator()(const Mat& X) const { return dot(G_times(*M, f), matvec(X, v)); }

FieldElem MatrixCoefficient::at_K(const QVec& h) const {
    Vec g = G_times(*M, f);
    FieldElem s(0);
    for (int k = 0; k < M->dim(); ++k)
        if (!g[k].is_zero() && !v[k].is_zero()) s += g[k] * v[k] * FieldElem::qpow(RootDatum::pair(h, M->wt[k]), M->d);
    return s;
}

FieldElem TorusFunction::at(const std::vector<mpq_class>& n, int d) const {
    FieldElem s(0);
    for (const auto& [key, c] : terms) {
        mpq_class e = 0;
        for (size_t k = 0; k < key.size(); ++k) e += n[k] * key[k];
        s += c * FieldElem::qpow(e, d);
    }
    return s;
}

std::string TorusFunction::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*K[";
        for (size_t k = 0; k < key.size(); ++k) os << (k ? "," : "") << key[k].get_str();
        os << "]";
        first = false;
    }
    return first ? "0" : os.str();
}

TorusFunction restrict_torus(const SatakeDatum& sd, const MatrixCoefficient& c) {
    TorusFunction t;
    Vec g = G_times(*c.M, c.f);
    for (int k = 0; k < c.M->dim(); ++k) {
        if (g[k].is_zero() || c.v[k].is_zero()) continue;
        QVec key;
        for (const auto& b : sd.ytheta) key.push_back(RootDatum::pair(to_q(b), c.M->wt[k]));
        t.terms[key] += g[k] * c.v[k];
    }
    for (auto it = t.terms.begin(); it != t.terms.end();) it = it->second.is_zero() ? t.terms.erase(it) : std::next(it);
    return t;
}

TorusFunction weyl_act(const SatakeDatum& sd, int i, const TorusFunction& t) {
    IMat R = sd.relative_action_on_ytheta(sd.relative_generator(i));
    TorusFunction out;
    for (const auto& [key, c] : t.terms) {
        QVec nk(key.size(), 0);
        for (size_t k = 0; k < key.size(); ++k)
            for (size_t l = 0; l < key.size(); ++l) nk[k] += R[k][l] * key[l];
        out.terms[nk] += c;
    }
    return out;
}

TorusFunction weyl_act(const SatakeDatum& sd, const std::vector<int>& rel_word, const TorusFunction& t) {
    TorusFunction out = t;
    for (int i : rel_word) out = weyl_act(sd, i, out);
    return out;
}

InvarianceResult is_weyl_invariant(const SatakeDatum& sd, const TorusFunction& t) {
    InvarianceResult r;
    for (int i : sd.white) {
        if (sd.tau[i] < i) continue;
        TorusFunction w = weyl_act(sd, i, t);
        if (w == t) continue;
        r.ok = false;
        r.generator = i;
        for (const auto& [key, c] : w.terms) {
            auto it = t.terms.find(key);
            if (it == t.terms.end() || it->second != c) {
                r.key = key;
                break;
            }
        }
        if (r.key.empty())
            for (const auto& [key, c] : t.terms)
                if (!w.terms.count(key)) {
                    r.key = key;
                    break;
                }
        return r;
    }
    return r;
}

MatrixCoefficient rho_shift(const MatrixCoefficient& c, const QVec& h) {
    MatrixCoefficient out = c;
    out.f = act_Kh(*c.M, h, c.f);
    return out;
}

std::vector<QVec> coweight_box(int n, int box) {
    std::vector<QVec> out;
    QVec cur(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int a = -box; a <= box; ++a) {
            cur[k] = a;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

CheckResult antipode_check(const MatrixCoefficient& c, int box) {
    CheckResult r;
    QVec tr = two_rho(c.M->rd);
    for (const auto& h : coweight_box(c.M->rd.n, box)) {
        QVec neg(h.size()), sh(h.size());
        for (size_t k = 0; k < h.size(); ++k) {
            neg[k] = -h[k];
            sh[k] = h[k] + tr[k];
        }
        if (c.at_K(neg) != c.at_K(sh)) {
            r.ok = false;
            r.certificate = "phi(K_-h) != phi(K_{h+2rho}) at h[0] = " + h[0].get_str();
            return r;
        }
    }
    return r;
}

CheckResult affine_invariance_check(const SatakeDatum& sd, const MatrixCoefficient& c) {
    CheckResult r;
    auto inv = is_weyl_invariant(sd, restrict_torus(sd, rho_shift(c, sd.rd.rho_coweight())));
    if (!inv.ok) {
        r.ok = false;
        r.certificate = "r_" + std::to_string(inv.generator + 1) + " moves the rho-shifted restriction";
    }
    return r;
}

std::vector<OpWord> evaluation_words(const RootDatum& rd, int box, int random_count, unsigned seed) {
    std::vector<OpWord> out;
    for (const auto& h : coweight_box(rd.n, box)) out.push_back({Letter{'K', 0, h}});
    std::vector<Letter> gens;
    for (int i = 0; i < rd.n; ++i) {
        gens.push_back({'E', i, {}});
        gens.push_back({'F', i, {}});
    }
    for (const auto& a : gens) {
        out.push_back({a});
        for (const auto& b : gens) out.push_back({a, b});
    }
    for (int k = 0; k < random_count; ++k) out.push_back(random_word(rd, 3 + k % 2, seed + k));
    return out;
}

CheckResult wz_spherical_check(const SatakeDatum& sd, const Parameter& p, int i, const MatrixCoefficient& c,
                               const std::vector<OpWord>& words) {
    CheckResult r;
    const SimpleModule& M = *c.M;
    Mat W = wz_operator(sd, p, i, M);
    // (f, W X W^-1 v) as a coefficient of f W and W^-1 v
    MatrixCoefficient t{&M, matvec(rho_op(M, W), c.f), matvec(W.inverse(), c.v)};
    for (const auto& w : words) {
        Mat X = eval_word(M, w);
        if (t(X) != c(X)) {
            r.ok = false;
            r.certificate = "differs on " + word_str(w);
            return r;
        }
    }
    return r;
}

MatrixCoefficient wz_precompose(const SatakeDatum& sd, const Parameter& p, int i, const MatrixCoefficient& c) {
    auto qk = quasi_k(sd, p, i, *c.M);
    return {c.M, matvec(rho_op(*c.M, qk.U), c.f), matvec(qk.U.inverse(), c.v)};
}

CheckResult tau0_bar_check(const SatakeDatum& sd, const Parameter& p, const MatrixCoefficient& c, int box) {
    CheckResult r;
    const SimpleModule& M = *c.M;
    Mat U = quasi_k_full(sd, p, M).U;
    MatrixCoefficient n{&M, iota_bar_normalize(rho_op(M, U.inverse()), c.f), iota_bar_normalize(U, c.v)};
    for (const auto& h : coweight_box(sd.rd.n, box)) {
        QVec th(h.size());
        for (size_t k = 0; k < h.size(); ++k) th[sd.tau0[k]] = h[k];
        if (n.at_K(h).bar() != n.at_K(th)) {
            r.ok = false;
            r.certificate = "bar symmetry fails";
            return r;
        }
    }
    return r;
}

CheckResult appendixB_check(const SatakeDatum& sd, const SimpleModule& M, const Vec& v) {
    CheckResult r;
    Mat Tm = lusztig_T_word(M, sd.wbullet, -1, Kind::DoublePrime);
    Mat Tp = lusztig_T_word(M, sd.wbullet, 1, Kind::DoublePrime);
    for (int i : sd.white) {
        if (matvec(conjugate_by(Tm, M.E[i]), v) != matvec(conjugate_by(Tp, M.E[i]), v)) {
            r.ok = false;
            r.certificate = "node " + std::to_string(i + 1);
            return r;
        }
    }
    return r;
}

}  // namespace qsp
