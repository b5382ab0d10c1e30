#pragma once

#include "qsp/braid.hpp"
#include "qsp/rootdata.hpp"

#include <map>

namespace qsp {

struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// c and s indexed by I; entries on black nodes are ignored.
struct Parameter {
    std::vector<FieldElem> c, s;
};

struct ParamFlags {
    bool in_C = false, in_S = false;
    bool standard = false, balanced = false, uniform = false, admissible = false, distinguished = false;
};

// Character of B_{c,s} occurring in L(lambda): labels l_i on I_ns, values chi(B_i).
struct Character {
    IVec lambda;
    std::map<int, int> l;
    std::vector<FieldElem> value;  // chi(B_i), indexed by I

    // chi(K_h) = q^<h,lambda> for Theta(h) = h
    FieldElem torus_value(const QVec& h, int d) const;
    bool trivial_on_B() const;
};

Parameter zero_parameter(const SatakeDatum& sd);
Parameter distinguished_parameter(const SatakeDatum& sd, int d = 2);
// Parameter from literals keyed by 0-based white node; missing s entries are zero
Parameter parse_parameter(const SatakeDatum& sd, const std::map<int, std::string>& c,
                          const std::map<int, std::string>& s, int d);

// k_i = (alpha_i, w_bullet alpha_tau(i) + 2 rho_bullet)
long uniform_exponent(const SatakeDatum& sd, int i);
// (-1)^<2 rho_bullet^vee, alpha_i>
int uniform_sign(const SatakeDatum& sd, int i);
ParamFlags classify(const SatakeDatum& sd, const Parameter& p, int d = 2);
// i white, tau(i) = i, c_ij = 0 for every black j
std::vector<int> nonstandard_nodes(const SatakeDatum& sd);

// T''_{w_bullet,+1}(E_tau(i)) on M
Mat raising_part(const SatakeDatum& sd, int i, const WModule& M);
Mat coideal_generator(const SatakeDatum& sd, const Parameter& p, int i, const WModule& M);

// Generators of B_{c,s} on a module, with the Theta-fixed torus part.
struct CoidealGenerators {
    std::map<int, Mat> B;              // white nodes
    std::vector<int> black;
    std::vector<Mat> Eb, Fb;           // E_j, F_j for j black
    std::vector<QVec> torus_h;         // h with Theta(h) = h spanning the torus part
    std::vector<Mat> torus;            // K_h for those h
};
CoidealGenerators coideal_generators(const SatakeDatum& sd, const Parameter& p, const WModule& M);
// d_i alpha_i^vee - d_tau(i) alpha_tau(i)^vee for white i, d_j alpha_j^vee for black j
std::vector<QVec> theta_torus_basis(const SatakeDatum& sd);

// parameter of Phi_a(B_{c,s})
Parameter twist_parameter(const SatakeDatum& sd, const std::vector<FieldElem>& a, const Parameter& p);
// parameter of ad(K_h)(B_{c,s})
Parameter ad_K(const SatakeDatum& sd, const QVec& h, const Parameter& p, int d = 2);

// (d, t) of the shifted coideal B^chi_c, returned as a parameter with c = d and s = t
Parameter chi_shift(const SatakeDatum& sd, const Parameter& p, const Character& chi, int d = 2);

std::string param_str(const SatakeDatum& sd, const Parameter& p);

}  // namespace qsp
