#pragma once

#include "qsp/matrix.hpp"
#include "qsp/rootdata.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

struct DimensionCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-dimensional weight module: generator matrices in a weight basis.
struct WModule {
    RootDatum rd;
    int d = 2;  // root order used for K_h with h in 1/2 Y
    std::vector<IVec> wt;
    std::vector<Mat> E, F;

    int dim() const { return static_cast<int>(wt.size()); }
    Mat K(const QVec& h) const;
    Mat Ki(int i, int power = 1) const;  // (K_{d_i alpha_i^vee})^power
    std::vector<int> block(const IVec& mu) const;
    std::vector<IVec> weights() const;
    Mat identity() const { return Mat::identity(dim()); }
};

// Letters of operator words: E_i, F_i, K_h.
struct Letter {
    char g;  // 'E', 'F' or 'K'
    int i = 0;
    QVec h;
};
using OpWord = std::vector<Letter>;

// product X = x_1 x_2 ... x_k as a matrix (x_k applied first)
Mat eval_word(const WModule& M, const OpWord& w);
// the anti-involution E <-> F, K fixed, applied to a word
OpWord rho_word(const OpWord& w);
OpWord random_word(const RootDatum& rd, int length, unsigned seed, bool with_half = false);
std::string word_str(const OpWord& w);

struct SimpleModule : WModule {
    IVec lambda;
    Mat G;  // Shapovalov Gram matrix, block diagonal in weights
    int hi = 0, lo = 0;
    std::vector<Word> fword;  // basis vector k = F_{w_1} ... F_{w_m} v_lambda

    Vec basis_vector(int k) const;
};

SimpleModule build_simple(const RootDatum& rd, const IVec& lambda, int d = 2, int dim_cap = 2000);

FieldElem shapovalov(const SimpleModule& M, const Vec& v, const Vec& w);
// coefficientwise bar in the F-monomial basis
Vec bar_vector(const Vec& v);
// matrix of rho(X) for an operator X, from contravariance
Mat rho_op(const SimpleModule& M, const Mat& X);
// (f, X v) with f read in L^r(lambda)
FieldElem dual_pairing(const SimpleModule& M, const Vec& f, const Mat& X, const Vec& v);
Vec act_Kh(const WModule& M, const QVec& h, const Vec& v);

Mat kron(const Mat& a, const Mat& b);
WModule tensor(const WModule& M, const WModule& N);

bool is_dominant(const IVec& lambda);

}  // namespace qsp
