#pragma once

#include "qsp/qsp.hpp"

namespace qsp {

// E(c, s, q_i, l); throws NotRepresentable when the square root is missing
FieldElem eigenvalue(const FieldElem& c, const FieldElem& s, int di, int l, int d = 2);

struct SphericalLine {
    Vec v;  // v_lambda coefficient 1
    Character chi;
    int multiplicity = 1;  // dimension of the joint solution space
    bool shape_ok = true;  // nonzero v_{w0 lambda} coefficient
};

struct LineSearch {
    std::vector<SphericalLine> lines;
    std::vector<std::string> warnings;
    int max_multiplicity = 0;
};

// joint system for b v = chi(b) v over the generators; right = true uses rho(b)
Mat spherical_system(const SimpleModule& M, const CoidealGenerators& g, const std::vector<FieldElem>& bvals,
                     const IVec& lambda, bool right);

LineSearch find_spherical_lines(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M);
// right spherical vector of the same character, in left coordinates, v_lambda coefficient 1
Vec find_dual_spherical(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M, const Character& chi);
// true iff v spans a chi-line for the given generators
bool is_spherical(const SimpleModule& M, const CoidealGenerators& g, const Character& chi, const Vec& v);

// character of B^chi that vanishes on the shifted generators and equals chi on U_bullet U^0_Theta
Character akin_character(const Character& chi);
// right spherical vector for B^chi with the akin character
Vec find_akin_dual(const SatakeDatum& sd, const Parameter& p, const SimpleModule& M, const Character& chi);

struct ScanReport {
    std::vector<std::pair<IVec, std::vector<SphericalLine>>> per_weight;
    std::vector<Character> distinct;  // pairwise distinct characters found
    int nontrivial = 0;
    int max_multiplicity = 0;
    bool shape_ok = true;
    std::vector<std::string> warnings;
};
ScanReport hermitian_scan(const SatakeDatum& sd, const Parameter& p, const std::vector<IVec>& weights,
                          int d = 2, int dim_cap = 2000);
// dominant weights with coordinates summing to at most bound, zero on the masked nodes
std::vector<IVec> dominant_weights(int n, int bound, const std::vector<int>& zero_nodes = {});
bool same_character(const SatakeDatum& sd, const Character& a, const Character& b);

}  // namespace qsp
