#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

using IVec = std::vector<int>;
using QVec = std::vector<mpq_class>;
using IMat = std::vector<IVec>;
using Word = std::vector<int>;

struct RootDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lattice conventions (0-based indices):
//   roots / ZI: coordinates in simple roots alpha_j
//   weights X: coordinates mu_i = <alpha_i^vee, mu> (fundamental weights)
//   coweights Y: coordinates in simple coroots alpha_i^vee; entries may be half-integers for 1/2 Y
//   C[i][j] = <alpha_i^vee, alpha_j>
struct RootDatum {
    int n = 0;
    IMat C;
    IVec d;

    RootDatum() = default;
    RootDatum(IMat cartan, IVec symmetrizer);
    static RootDatum of_type(char type, int rank);

    // <h, mu> for h in coroot coordinates, mu in weight coordinates
    static mpq_class pair(const QVec& h, const IVec& mu);
    // <alpha_i^vee, beta> for beta in root coordinates
    int coroot_on_root(int i, const IVec& beta) const;
    // <h, alpha_j> for h in coroot coordinates
    mpq_class coweight_on_root(const QVec& h, int j) const;
    // (beta, gamma) in root coordinates
    long form(const IVec& beta, const IVec& gamma) const;
    mpq_class form(const QVec& beta, const IVec& gamma) const;
    IVec root_to_weight(const IVec& beta) const;
    // alpha_i -> d_i alpha_i^vee, extended linearly (the image of ZI in Y under the form)
    QVec root_to_coweight(const QVec& beta) const;

    IVec reflect_root(int i, const IVec& beta) const;
    IVec reflect_weight(int i, const IVec& mu) const;
    QVec reflect_coweight(int i, const QVec& h) const;
    // word (i1..ik) acts as s_i1 ... s_ik
    IVec act_root(const Word& w, IVec beta) const;
    IVec act_weight(const Word& w, IVec mu) const;
    QVec act_coweight(const Word& w, QVec h) const;

    IMat reflection_matrix(int i) const;  // on root coordinates
    IMat word_matrix(const Word& w) const;

    // positive roots of the parabolic subsystem J, with matching coroots (coroot coords)
    std::vector<IVec> positive_roots(const std::vector<int>& J) const;
    std::vector<IVec> positive_coroots(const std::vector<int>& J) const;

    // lexicographically least reduced word of the element given by its root-coordinate matrix
    Word reduced_word(const IMat& M) const;
    Word longest_word(const std::vector<int>& J) const;
    int length(const IMat& M) const;

    QVec rho_roots() const;  // rho in root coordinates
    QVec rho_coweight() const;  // image of rho in 1/2 Y
    IVec w0_weight(const IVec& mu) const;

    void check_index(int i) const;
};

IMat mat_mul(const IMat& a, const IMat& b);
IVec mat_apply(const IMat& a, const IVec& v);
IMat mat_identity(int n);

struct SatakeReport {
    bool ok = true;
    std::vector<std::string> failures;  // each prefixed by its condition label
};

// Satake datum (I, I_black, tau) with derived data.
struct SatakeDatum {
    RootDatum rd;
    std::vector<bool> black;
    IVec tau;

    Word wbullet;
    IMat Wb;  // matrix of w_bullet on root coordinates
    std::vector<int> black_set, white, ns;
    IVec two_rho_bullet;      // root coordinates
    IVec two_rho_bullet_vee;  // coroot coordinates
    std::vector<IVec> ytheta;  // HNF basis of Y_Theta, coroot coordinates
    std::map<int, Word> rel;   // relative generators r_i, i white
    IVec tau0;

    SatakeDatum() = default;
    SatakeDatum(RootDatum rd, std::vector<int> black_indices, IVec tau);

    SatakeReport validate() const;
    bool valid() const { return validate().ok; }

    IVec theta_root(const IVec& beta) const;
    QVec theta_coweight(const QVec& h) const;
    IVec theta_weight(const IVec& mu) const;
    IVec tau_root(const IVec& beta) const;
    QVec tau_coweight(const QVec& h) const;

    const Word& relative_generator(int i) const;
    // matrix M with r_i b_k = sum_l M[k][l] b_l on the Y_Theta basis
    IMat relative_action_on_ytheta(const Word& w) const;
    bool is_white(int i) const { return !black[i]; }
    int rank_one_sign(int i) const;  // (-1)^<2 rho_bullet^vee, alpha_i>
};

// Rank-one Satake diagrams of the parameter table and their distinguished white node.
struct RankOne {
    SatakeDatum sd;
    int node;
};
RankOne rank_one_diagram(const std::string& label, int n = 0);
// (d_i<a_i^v,a_i>, <2rho_b^v,a_i>, -d_i<2rho_b,a_i^v>, (rho, a_i - Theta a_i))
std::array<long, 4> table1_constants(const std::string& label, int n = 0);

// integer kernel basis of A (rows of the result), in Hermite normal form
std::vector<IVec> integer_kernel_hnf(const IMat& A, int ncols);
std::vector<IVec> hermite_normal_form(std::vector<IVec> rows);

}  // namespace qsp
