#pragma once

#include "qsp/characters.hpp"

namespace qsp {

struct QuasiKError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuasiK {
    int node = -1;       // rank-one index, -1 for the full matrix
    std::vector<int> J;  // support of the raising part
    Mat U;
    int unknowns = 0;
    bool unique = true;
};

// F_j + c'_j conj(T''_{w_bullet,+1}(E_tau(j))) K_j + conj(s_j) K_j with c'_j = eps q^{k} c_tau(j)
Mat transported_bar(const SatakeDatum& sd, const Parameter& p, int j, const WModule& M);

// rank-one quasi-K matrix for {i, tau(i)} and the black nodes
QuasiK quasi_k(const SatakeDatum& sd, const Parameter& p, int i, const WModule& M);
QuasiK quasi_k_full(const SatakeDatum& sd, const Parameter& p, const WModule& M);

struct QuasiKReport {
    bool weight_zero_identity = true;
    bool bar_inverse = true;
    bool residual_zero = true;
};
QuasiKReport check_quasi_k(const SatakeDatum& sd, const Parameter& p, const QuasiK& qk, const WModule& M);

// Upsilon_i composed with the rescaled Lusztig operator
Mat wz_operator(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M);
Mat wz_operator(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M, const QuasiK& qk);
Vec wz_on_vector(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M, const Vec& v);

struct CheckResult {
    bool ok = true;
    std::string certificate;
};
// (T'_{i,-1})^{-1} v spans a line of the same character
CheckResult wz_character_check(const SatakeDatum& sd, const Parameter& p, int i, const SimpleModule& M,
                               const SphericalLine& line);

// scale v so that U bar(v) = v
Vec iota_bar_normalize(const Mat& U, const Vec& v);

}  // namespace qsp
