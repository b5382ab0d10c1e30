#pragma once

#include "qsp/quasik.hpp"

#include <map>

namespace qsp {

// c_{f,v}(X) = (f, X v), f read in L^r(lambda) through the Shapovalov form
struct MatrixCoefficient {
    const SimpleModule* M = nullptr;
    Vec f, v;

    FieldElem operator()(const Mat& X) const;
    FieldElem at_K(const QVec& h) const;
};

// finite sum of coeff * q^{<h, key>} on h = sum n_k b_k in Y_Theta; keys are the pairings <b_k, mu>
struct TorusFunction {
    std::map<QVec, FieldElem> terms;

    FieldElem at(const std::vector<mpq_class>& n, int d = 2) const;
    bool operator==(const TorusFunction& o) const { return terms == o.terms; }
    std::string str() const;
};

TorusFunction restrict_torus(const SatakeDatum& sd, const MatrixCoefficient& c);
// [r_i . t](K_h) = t(K_{r_i h})
TorusFunction weyl_act(const SatakeDatum& sd, int i, const TorusFunction& t);
TorusFunction weyl_act(const SatakeDatum& sd, const std::vector<int>& rel_word, const TorusFunction& t);

struct InvarianceResult {
    bool ok = true;
    int generator = -1;
    QVec key;
};
InvarianceResult is_weyl_invariant(const SatakeDatum& sd, const TorusFunction& t);

// c <| K_h
MatrixCoefficient rho_shift(const MatrixCoefficient& c, const QVec& h);

// all h in Y with coordinates in [-box, box]
std::vector<QVec> coweight_box(int n, int box);
// phi(K_{-h}) = (phi <| K_{2 rho})(K_h) on the box
CheckResult antipode_check(const MatrixCoefficient& c, int box);
// phi <| K_rho restricted to the torus is Weyl invariant
CheckResult affine_invariance_check(const SatakeDatum& sd, const MatrixCoefficient& c);

// operator words for U^0 and generator words used as an evaluation set
std::vector<OpWord> evaluation_words(const RootDatum& rd, int box, int random_count, unsigned seed);

// c composed with the WZ operator for r_i, compared to c on the words
CheckResult wz_spherical_check(const SatakeDatum& sd, const Parameter& p, int i, const MatrixCoefficient& c,
                               const std::vector<OpWord>& words);
// c_{f U_i, U_i^{-1} v}
MatrixCoefficient wz_precompose(const SatakeDatum& sd, const Parameter& p, int i, const MatrixCoefficient& c);

// bar(a c(K_h)) = a c(K_{tau0 h}) on the box with f, v iota-bar normalised by the full quasi-K matrix
CheckResult tau0_bar_check(const SatakeDatum& sd, const Parameter& p, const MatrixCoefficient& c, int box);

// T''_{w_bullet,-1}(E_i) v = T''_{w_bullet,+1}(E_i) v for every white i
CheckResult appendixB_check(const SatakeDatum& sd, const SimpleModule& M, const Vec& v);

}  // namespace qsp
