#pragma once

#include "qsp/repmod.hpp"

namespace qsp {

struct SatakeDatum;

enum class Kind { Prime, DoublePrime };

struct BraidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operators are matrices on the basis of the module they act on.
Mat lusztig_T(const WModule& M, int i, int e, Kind kind);
// T_{i1} T_{i2} ... T_{ik} for the word (i1, ..., ik)
Mat lusztig_T_word(const WModule& M, const Word& w, int e, Kind kind);
// T X T^-1
Mat conjugate_by(const Mat& T, const Mat& X);
Mat conjugate_element(const WModule& M, const Word& w, int e, Kind kind, const Mat& X);

// v_mu -> phi_a(lambda - mu) v_mu; needs a square root of each a_i that occurs
Mat phi_diag(const SimpleModule& M, const std::vector<FieldElem>& a);
// the automorphism Phi_a on operators: E_i -> a_i^{1/2} E_i, F_i -> a_i^{-1/2} F_i
Mat phi_apply(const SimpleModule& M, const std::vector<FieldElem>& a, const Mat& X);

// conj(c_diamond) * c, componentwise on white nodes, 1 on black nodes
std::vector<FieldElem> rescaling_tuple(const SatakeDatum& sd, const std::vector<FieldElem>& c, int d);
// Phi_a(T'_{r_i,-1}) with a = conj(c_diamond) c
Mat rescaled_T(const SatakeDatum& sd, int i, const std::vector<FieldElem>& c, const SimpleModule& M);

}  // namespace qsp
