#include "qsp/qsp.hpp"

#include <algorithm>
#include <sstream>

namespace qsp {

namespace {

IVec unit(int n, int i) {
    IVec e(n, 0);
    e[i] = 1;
    return e;
}

FieldElem qmono(long k, int d = 1) { return FieldElem::mono(Gauss(1), static_cast<int>(k * d), d); }

void check_shape(const SatakeDatum& sd, const Parameter& p) {
    if (static_cast<int>(p.c.size()) != sd.rd.n || static_cast<int>(p.s.size()) != sd.rd.n)
        throw ParameterError("parameter tuple length differs from the rank");
    for (int i : sd.white)
        if (p.c[i].is_zero()) throw ParameterError("c_" + std::to_string(i + 1) + " must be nonzero");
}

}  // namespace

FieldElem Character::torus_value(const QVec& h, int d) const { return FieldElem::qpow(RootDatum::pair(h, lambda), d); }

bool Character::trivial_on_B() const {
    return std::all_of(value.begin(), value.end(), [](const FieldElem& x) { return x.is_zero(); });
}

Parameter zero_parameter(const SatakeDatum& sd) {
    return {std::vector<FieldElem>(sd.rd.n, FieldElem(0)), std::vector<FieldElem>(sd.rd.n, FieldElem(0))};
}

Parameter distinguished_parameter(const SatakeDatum& sd, int d) {
    Parameter p = zero_parameter(sd);
    for (int i : sd.white) {
        IVec ai = unit(sd.rd.n, i), th = sd.theta_root(ai);
        IVec diff(sd.rd.n);
        for (int k = 0; k < sd.rd.n; ++k) diff[k] = ai[k] - th[k];
        p.c[i] = FieldElem::qpow(mpq_class(-sd.rd.form(ai, diff), 2), d, Gauss(-1));
    }
    return p;
}

Parameter parse_parameter(const SatakeDatum& sd, const std::map<int, std::string>& c,
                          const std::map<int, std::string>& s, int d) {
    Parameter p = zero_parameter(sd);
    for (const auto& [i, lit] : c) {
        sd.rd.check_index(i);
        if (!sd.is_white(i)) throw ParameterError("c given on black node " + std::to_string(i + 1));
        p.c[i] = parse_scalar(lit, d);
    }
    for (const auto& [i, lit] : s) {
        sd.rd.check_index(i);
        if (!sd.is_white(i)) throw ParameterError("s given on black node " + std::to_string(i + 1));
        p.s[i] = parse_scalar(lit, d);
    }
    for (int i : sd.white)
        if (!c.count(i)) throw ParameterError("missing c_" + std::to_string(i + 1));
    check_shape(sd, p);
    return p;
}

long uniform_exponent(const SatakeDatum& sd, int i) {
    int n = sd.rd.n;
    IVec w = mat_apply(sd.Wb, unit(n, sd.tau[i]));
    for (int k = 0; k < n; ++k) w[k] += sd.two_rho_bullet[k];
    return sd.rd.form(unit(n, i), w);
}

int uniform_sign(const SatakeDatum& sd, int i) { return sd.rank_one_sign(i); }

std::vector<int> nonstandard_nodes(const SatakeDatum& sd) {
    std::vector<int> out;
    for (int i : sd.white) {
        if (sd.tau[i] != i) continue;
        bool ok = true;
        for (int j : sd.black_set)
            if (sd.rd.C[i][j] != 0) ok = false;
        if (ok) out.push_back(i);
    }
    return out;
}

ParamFlags classify(const SatakeDatum& sd, const Parameter& p, int d) {
    check_shape(sd, p);
    ParamFlags f;
    int n = sd.rd.n;
    f.in_C = true;
    for (int i : sd.white) {
        int t = sd.tau[i];
        if (t != i && sd.rd.form(unit(n, i), sd.theta_root(unit(n, i))) == 0 && p.c[i] != p.c[t]) f.in_C = false;
    }
    auto ns = nonstandard_nodes(sd);
    f.in_S = true;
    f.standard = true;
    for (int j : sd.white) {
        if (p.s[j].is_zero()) continue;
        f.standard = false;
        if (std::find(ns.begin(), ns.end(), j) == ns.end()) {
            f.in_S = false;
            continue;
        }
        for (int i : ns)
            if (i != j && (sd.rd.C[i][j] > 0 || sd.rd.C[i][j] % 2 != 0)) f.in_S = false;
    }
    f.balanced = f.standard;
    for (int i : sd.white)
        if (p.c[i] != p.c[sd.tau[i]]) f.balanced = false;
    f.uniform = true;
    bool adm_eq = true, unitary = true;
    for (int i : sd.white) {
        FieldElem rhs = qmono(-uniform_exponent(sd, i)) * p.c[sd.tau[i]].bar();
        FieldElem signed_rhs = uniform_sign(sd, i) < 0 ? -rhs : rhs;
        if (p.c[i] != signed_rhs) f.uniform = false;
        if (p.c[i] != rhs) adm_eq = false;
        if (p.c[i] * p.c[i].bar() != FieldElem(1)) unitary = false;
    }
    f.admissible = f.balanced && adm_eq && unitary;
    f.distinguished = false;
    if (f.balanced) {
        try {
            auto cd = distinguished_parameter(sd, std::max(d, 2));
            f.distinguished = std::all_of(sd.white.begin(), sd.white.end(), [&](int i) { return cd.c[i] == p.c[i]; });
        } catch (const NotRepresentable&) {
        }
    }
    return f;
}

Mat raising_part(const SatakeDatum& sd, int i, const WModule& M) {
    return conjugate_element(M, sd.wbullet, 1, Kind::DoublePrime, M.E[sd.tau[i]]);
}

Mat coideal_generator(const SatakeDatum& sd, const Parameter& p, int i, const WModule& M) {
    check_shape(sd, p);
    if (!sd.is_white(i)) throw ParameterError("coideal generator requested on black node");
    Mat Kinv = M.Ki(i, -1);
    Mat B = M.F[i] + (raising_part(sd, i, M) * Kinv).scaled(p.c[i]);
    if (!p.s[i].is_zero()) B = B + Kinv.scaled(p.s[i]);
    return B;
}

std::vector<QVec> theta_torus_basis(const SatakeDatum& sd) {
    int n = sd.rd.n;
    std::vector<QVec> out;
    for (int i : sd.white) {
        int t = sd.tau[i];
        if (t <= i) continue;
        QVec h(n, 0);
        h[i] += sd.rd.d[i];
        h[t] -= sd.rd.d[t];
        out.push_back(h);
    }
    for (int j : sd.black_set) {
        QVec h(n, 0);
        h[j] = sd.rd.d[j];
        out.push_back(h);
    }
    return out;
}

CoidealGenerators coideal_generators(const SatakeDatum& sd, const Parameter& p, const WModule& M) {
    CoidealGenerators g;
    for (int i : sd.white) g.B.emplace(i, coideal_generator(sd, p, i, M));
    g.black = sd.black_set;
    for (int j : sd.black_set) {
        g.Eb.push_back(M.E[j]);
        g.Fb.push_back(M.F[j]);
    }
    g.torus_h = theta_torus_basis(sd);
    for (const auto& h : g.torus_h) g.torus.push_back(M.K(h));
    return g;
}

Parameter twist_parameter(const SatakeDatum& sd, const std::vector<FieldElem>& a, const Parameter& p) {
    check_shape(sd, p);
    if (static_cast<int>(a.size()) != sd.rd.n) throw ParameterError("twist tuple length differs from the rank");
    std::vector<FieldElem> r(sd.rd.n, FieldElem(1));
    for (int i = 0; i < sd.rd.n; ++i) {
        if (!sd.is_white(i)) {
            if (!a[i].is_one()) throw ParameterError("twist must be 1 on black nodes");
            continue;
        }
        auto s = monomial_sqrt(a[i]);
        if (!s) s = field_sqrt(a[i]);
        if (!s) throw NotRepresentable("no square root of " + a[i].str());
        r[i] = *s;
    }
    Parameter out = p;
    for (int i : sd.white) {
        out.c[i] = p.c[i] * r[i] * r[sd.tau[i]];
        out.s[i] = p.s[i] * r[i];
    }
    return out;
}

Parameter ad_K(const SatakeDatum& sd, const QVec& h, const Parameter& p, int d) {
    check_shape(sd, p);
    Parameter out = p;
    int n = sd.rd.n;
    for (int i : sd.white) {
        IVec ai = unit(n, i), th = sd.theta_root(ai);
        mpq_class e = 0;
        for (int k = 0; k < n; ++k) e += sd.rd.coweight_on_root(h, k) * (ai[k] - th[k]);
        out.c[i] = p.c[i] * FieldElem::qpow(e, d);
        out.s[i] = p.s[i] * FieldElem::qpow(sd.rd.coweight_on_root(h, i), d);
    }
    return out;
}

Parameter chi_shift(const SatakeDatum& sd, const Parameter& p, const Character& chi, int d) {
    auto flags = classify(sd, p, d);
    if (!flags.balanced) throw ParameterError("shifted coideal needs a balanced parameter");
    Parameter out = zero_parameter(sd);
    const auto& rd = sd.rd;
    for (int i : sd.white) {
        int t = sd.tau[i], di = rd.d[i];
        long lam = static_cast<long>(di) * chi.lambda[i] - static_cast<long>(rd.d[t]) * chi.lambda[t];
        long two_rho = rd.coroot_on_root(i, sd.two_rho_bullet);
        FieldElem v = p.c[i] * qmono(lam) * qmono(static_cast<long>(di) * (rd.C[i][i] - two_rho));
        out.c[i] = uniform_sign(sd, i) < 0 ? -v : v;
        // t_i = -q_i chi(B_i), which is -c_i bar(chi(B_i)) q_i^2 for admissible c
        if (!chi.value.at(i).is_zero()) out.s[i] = -(qmono(di) * chi.value[i]);
    }
    return out;
}

std::string param_str(const SatakeDatum& sd, const Parameter& p) {
    std::ostringstream os;
    bool first = true;
    for (int i : sd.white) {
        os << (first ? "" : ", ") << "c" << i + 1 << "=" << p.c[i].str();
        if (!p.s[i].is_zero()) os << ", s" << i + 1 << "=" << p.s[i].str();
        first = false;
    }
    return os.str();
}

}  // namespace qsp
