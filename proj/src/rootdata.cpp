#include "qsp/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qsp {

RootDatum::RootDatum(IMat cartan, IVec symmetrizer) : n(static_cast<int>(cartan.size())), C(std::move(cartan)), d(std::move(symmetrizer)) {
    if (static_cast<int>(d.size()) != n) throw RootDataError("symmetrizer length does not match the Cartan matrix");
    int g = 0;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(C[i].size()) != n) throw RootDataError("Cartan matrix is not square");
        if (C[i][i] != 2) throw RootDataError("Cartan diagonal must be 2");
        if (d[i] <= 0) throw RootDataError("symmetrizer entries must be positive");
        g = std::gcd(g, d[i]);
        for (int j = 0; j < n; ++j) {
            if (d[i] * C[i][j] != d[j] * C[j][i]) throw RootDataError("DC is not symmetric");
            if (i != j && C[i][j] > 0) throw RootDataError("off-diagonal Cartan entries must be nonpositive");
        }
    }
    if (n > 0 && g != 1) throw RootDataError("gcd of the symmetrizer must be 1");
}

RootDatum RootDatum::of_type(char type, int r) {
    IMat C(r, IVec(r, 0));
    IVec d(r, 1);
    for (int i = 0; i < r; ++i) C[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) C[i][i + 1] = C[i + 1][i] = -1;
    };
    switch (type) {
        case 'A':
            chain(r);
            break;
        case 'B':
            if (r < 2) throw RootDataError("B_n needs n >= 2");
            chain(r);
            C[r - 1][r - 2] = -2;
            std::fill(d.begin(), d.end(), 2);
            d[r - 1] = 1;
            break;
        case 'C':
            if (r < 2) throw RootDataError("C_n needs n >= 2");
            chain(r);
            C[r - 2][r - 1] = -2;
            d[r - 1] = 2;
            break;
        case 'D':
            if (r < 3) throw RootDataError("D_n needs n >= 3");
            chain(r - 1);
            C[r - 3][r - 1] = C[r - 1][r - 3] = -1;
            break;
        case 'F':
            if (r != 4) throw RootDataError("F has rank 4");
            chain(4);
            C[2][1] = -2;
            d = {2, 2, 1, 1};
            break;
        case 'G':
            if (r != 2) throw RootDataError("G has rank 2");
            C[0][1] = -3;
            C[1][0] = -1;
            d = {1, 3};
            break;
        default:
            throw RootDataError(std::string("unknown Cartan type ") + type);
    }
    return RootDatum(C, d);
}

void RootDatum::check_index(int i) const {
    if (i < 0 || i >= n) throw RootDataError("unknown index " + std::to_string(i + 1));
}

mpq_class RootDatum::pair(const QVec& h, const IVec& mu) {
    mpq_class s = 0;
    for (size_t i = 0; i < h.size(); ++i) s += h[i] * mu[i];
    return s;
}

int RootDatum::coroot_on_root(int i, const IVec& beta) const {
    int s = 0;
    for (int j = 0; j < n; ++j) s += C[i][j] * beta[j];
    return s;
}

mpq_class RootDatum::coweight_on_root(const QVec& h, int j) const {
    mpq_class s = 0;
    for (int k = 0; k < n; ++k) s += h[k] * C[k][j];
    return s;
}

long RootDatum::form(const IVec& b, const IVec& g) const {
    long s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += static_cast<long>(b[i]) * g[j] * d[i] * C[i][j];
    return s;
}

mpq_class RootDatum::form(const QVec& b, const IVec& g) const {
    mpq_class s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += b[i] * g[j] * d[i] * C[i][j];
    return s;
}

IVec RootDatum::root_to_weight(const IVec& beta) const {
    IVec mu(n, 0);
    for (int i = 0; i < n; ++i) mu[i] = coroot_on_root(i, beta);
    return mu;
}

QVec RootDatum::root_to_coweight(const QVec& beta) const {
    QVec h(n);
    for (int i = 0; i < n; ++i) h[i] = beta[i] * d[i];
    return h;
}

IVec RootDatum::reflect_root(int i, const IVec& beta) const {
    check_index(i);
    IVec r = beta;
    r[i] -= coroot_on_root(i, beta);
    return r;
}

IVec RootDatum::reflect_weight(int i, const IVec& mu) const {
    check_index(i);
    IVec r = mu;
    int p = mu[i];
    for (int k = 0; k < n; ++k) r[k] -= p * C[k][i];
    return r;
}

QVec RootDatum::reflect_coweight(int i, const QVec& h) const {
    check_index(i);
    QVec r = h;
    r[i] -= coweight_on_root(h, i);
    return r;
}

IVec RootDatum::act_root(const Word& w, IVec beta) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) beta = reflect_root(*it, beta);
    return beta;
}

IVec RootDatum::act_weight(const Word& w, IVec mu) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) mu = reflect_weight(*it, mu);
    return mu;
}

QVec RootDatum::act_coweight(const Word& w, QVec h) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) h = reflect_coweight(*it, h);
    return h;
}

IMat mat_identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (a[i][l])
                for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

IVec mat_apply(const IMat& a, const IVec& v) {
    IVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

IMat RootDatum::reflection_matrix(int i) const {
    IMat m = mat_identity(n);
    for (int j = 0; j < n; ++j) m[i][j] -= C[i][j];
    return m;
}

IMat RootDatum::word_matrix(const Word& w) const {
    IMat m = mat_identity(n);
    for (int i : w) m = mat_mul(m, reflection_matrix(i));
    return m;
}

namespace {

bool is_negative(const IVec& v) {
    bool any = false;
    for (int x : v) {
        if (x > 0) return false;
        if (x < 0) any = true;
    }
    return any;
}

IVec unit(int n, int i) {
    IVec e(n, 0);
    e[i] = 1;
    return e;
}

}  // namespace

std::vector<IVec> RootDatum::positive_roots(const std::vector<int>& J) const {
    std::set<IVec> seen;
    std::vector<IVec> out, frontier;
    for (int j : J) {
        IVec e = unit(n, j);
        if (seen.insert(e).second) {
            out.push_back(e);
            frontier.push_back(e);
        }
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& b : frontier)
            for (int j : J) {
                IVec r = reflect_root(j, b);
                if (is_negative(r)) continue;
                if (seen.insert(r).second) {
                    out.push_back(r);
                    next.push_back(r);
                }
            }
        if (out.size() > 10000) throw RootDataError("subsystem is not of finite type");
        frontier = std::move(next);
    }
    return out;
}

std::vector<IVec> RootDatum::positive_coroots(const std::vector<int>& J) const {
    // coroots are the roots of the transposed Cartan matrix
    IMat Ct(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Ct[i][j] = C[j][i];
    RootDatum dual;
    dual.n = n;
    dual.C = Ct;
    dual.d = IVec(n, 1);
    return dual.positive_roots(J);
}

int RootDatum::length(const IMat& M) const {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    int l = 0;
    for (const auto& b : positive_roots(all))
        if (is_negative(mat_apply(M, b))) ++l;
    return l;
}

Word RootDatum::reduced_word(const IMat& M0) const {
    // greedy on the smallest left descent
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const auto pos = positive_roots(all);
    auto len_of = [&](const IMat& M) {
        int l = 0;
        for (const auto& b : pos)
            if (is_negative(mat_apply(M, b))) ++l;
        return l;
    };
    IMat M = M0;
    int len = len_of(M);
    Word w;
    while (len > 0) {
        int pick = -1;
        for (int j = 0; j < n && pick < 0; ++j) {
            IMat S = mat_mul(reflection_matrix(j), M);
            int l2 = len_of(S);
            if (l2 < len) {
                pick = j;
                M = std::move(S);
                len = l2;
            }
        }
        if (pick < 0) throw RootDataError("reduced word extraction failed");
        w.push_back(pick);
    }
    return w;
}

Word RootDatum::longest_word(const std::vector<int>& J) const {
    for (int j : J) check_index(j);
    IMat M = mat_identity(n);
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw RootDataError("subset is not of finite type");
        int pick = -1;
        for (int j : J) {
            IVec img = mat_apply(M, unit(n, j));
            if (!is_negative(img)) {
                pick = j;
                break;
            }
        }
        if (pick < 0) break;
        M = mat_mul(M, reflection_matrix(pick));
    }
    Word w = reduced_word(M);
    return w;
}

QVec RootDatum::rho_roots() const {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    QVec r(n, mpq_class(0));
    for (const auto& b : positive_roots(all))
        for (int i = 0; i < n; ++i) r[i] += b[i];
    for (auto& x : r) x /= 2;
    return r;
}

QVec RootDatum::rho_coweight() const { return root_to_coweight(rho_roots()); }

IVec RootDatum::w0_weight(const IVec& mu) const {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return act_weight(longest_word(all), mu);
}

// ---------------------------------------------------------------- lattices

std::vector<IVec> hermite_normal_form(std::vector<IVec> rows) {
    if (rows.empty()) return rows;
    size_t m = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < m && r < rows.size(); ++col) {
        // Euclid on column col among rows r..end
        for (;;) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                int f = rows[i][col] / rows[r][col];
                for (size_t k = 0; k < m; ++k) rows[i][k] -= f * rows[r][k];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& x : rows[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
            int p = rows[r][col];
            int f = rows[i][col] / p;
            if (rows[i][col] - f * p < 0) --f;
            if (f)
                for (size_t k = 0; k < m; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<IVec> integer_kernel_hnf(const IMat& A, int ncols) {
    // row-reduce [A^T | I] over Z; rows with vanishing A^T-part span the kernel
    size_t nr = A.size();
    std::vector<IVec> rows(ncols, IVec(nr + ncols, 0));
    for (int j = 0; j < ncols; ++j) {
        for (size_t i = 0; i < nr; ++i) rows[j][i] = A[i][j];
        rows[j][nr + j] = 1;
    }
    size_t r = 0;
    for (size_t col = 0; col < nr && r < rows.size(); ++col) {
        for (;;) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                int f = rows[i][col] / rows[r][col];
                for (auto k = 0u; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] != 0) ++r;
    }
    std::vector<IVec> ker;
    for (size_t i = r; i < rows.size(); ++i) ker.emplace_back(rows[i].begin() + nr, rows[i].end());
    return hermite_normal_form(ker);
}

// ---------------------------------------------------------------- Satake

SatakeDatum::SatakeDatum(RootDatum r, std::vector<int> black_idx, IVec t) : rd(std::move(r)), tau(std::move(t)) {
    int n = rd.n;
    if (static_cast<int>(tau.size()) != n) throw RootDataError("tau has the wrong length");
    std::vector<bool> hit(n, false);
    for (int x : tau) {
        if (x < 0 || x >= n || hit[x]) throw RootDataError("tau is not a permutation");
        hit[x] = true;
    }
    black.assign(n, false);
    for (int j : black_idx) {
        rd.check_index(j);
        black[j] = true;
    }
    for (int i = 0; i < n; ++i) (black[i] ? black_set : white).push_back(i);
    wbullet = rd.longest_word(black_set);
    Wb = rd.word_matrix(wbullet);

    two_rho_bullet.assign(n, 0);
    two_rho_bullet_vee.assign(n, 0);
    for (const auto& b : rd.positive_roots(black_set))
        for (int k = 0; k < n; ++k) two_rho_bullet[k] += b[k];
    for (const auto& b : rd.positive_coroots(black_set))
        for (int k = 0; k < n; ++k) two_rho_bullet_vee[k] += b[k];

    for (int i : white) {
        if (tau[i] != i) continue;
        bool ok = true;
        for (int j : black_set)
            if (rd.C[i][j] != 0) ok = false;
        if (ok) ns.push_back(i);
    }

    // Y_Theta = ker(Theta + 1) on Y
    IMat A(n, IVec(n, 0));
    for (int k = 0; k < n; ++k) {
        QVec e(n, 0);
        e[k] = 1;
        QVec t2 = theta_coweight(e);
        for (int i = 0; i < n; ++i) A[i][k] = static_cast<int>(t2[i].get_num().get_si()) + (i == k ? 1 : 0);
    }
    ytheta = integer_kernel_hnf(A, n);

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    IMat W0 = rd.word_matrix(rd.longest_word(all));
    tau0.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        IVec img = mat_apply(W0, IVec(unit(n, i)));
        for (int j = 0; j < n; ++j)
            if (img[j] == -1) tau0[i] = j;
    }

    if (validate().ok) {
        IMat Wbinv = rd.word_matrix(Word(wbullet.rbegin(), wbullet.rend()));
        for (int i : white) {
            std::vector<int> J = black_set;
            J.push_back(i);
            if (tau[i] != i) J.push_back(tau[i]);
            std::sort(J.begin(), J.end());
            IMat WJ = rd.word_matrix(rd.longest_word(J));
            rel[i] = rd.reduced_word(mat_mul(WJ, Wbinv));
        }
    }
}

IVec SatakeDatum::tau_root(const IVec& b) const {
    IVec r(rd.n, 0);
    for (int k = 0; k < rd.n; ++k) r[tau[k]] = b[k];
    return r;
}

QVec SatakeDatum::tau_coweight(const QVec& h) const {
    QVec r(rd.n, 0);
    for (int k = 0; k < rd.n; ++k) r[tau[k]] = h[k];
    return r;
}

IVec SatakeDatum::theta_root(const IVec& b) const {
    IVec r = rd.act_root(wbullet, tau_root(b));
    for (auto& x : r) x = -x;
    return r;
}

QVec SatakeDatum::theta_coweight(const QVec& h) const {
    QVec r = rd.act_coweight(wbullet, tau_coweight(h));
    for (auto& x : r) x = -x;
    return r;
}

IVec SatakeDatum::theta_weight(const IVec& mu) const {
    IVec t(rd.n, 0);
    for (int k = 0; k < rd.n; ++k) t[tau[k]] = mu[k];
    IVec r = rd.act_weight(wbullet, t);
    for (auto& x : r) x = -x;
    return r;
}

SatakeReport SatakeDatum::validate() const {
    SatakeReport rep;
    int n = rd.n;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rd.C[i][j] != rd.C[tau[i]][tau[j]]) {
                fail("(aut) tau is not a diagram automorphism at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                i = j = n;
            }
    for (int j : black_set)
        if (!black[tau[j]]) {
            fail("(aut) tau does not preserve the black nodes at " + std::to_string(j + 1));
            break;
        }
    for (int i = 0; i < n; ++i)
        if (tau[tau[i]] != i) {
            fail("(i) tau^2 != id at " + std::to_string(i + 1));
            break;
        }
    for (int j : black_set) {
        IVec img = mat_apply(Wb, unit(n, j));
        IVec want(n, 0);
        want[tau[j]] = -1;
        if (img != want) {
            fail("(ii) tau on black nodes differs from -w_bullet at " + std::to_string(j + 1));
            break;
        }
    }
    for (int i : white) {
        if (tau[i] != i) continue;
        // <rho_bullet^vee, alpha_i> = <2 rho_bullet^vee, alpha_i> / 2
        int s = 0;
        for (int k = 0; k < n; ++k) s += two_rho_bullet_vee[k] * rd.C[k][i];
        if (s % 2 != 0) fail("(iii) <rho_bullet^vee, alpha_" + std::to_string(i + 1) + "> is not an integer");
    }
    return rep;
}

const Word& SatakeDatum::relative_generator(int i) const {
    auto it = rel.find(i);
    if (it == rel.end()) throw RootDataError("index " + std::to_string(i + 1) + " is not a white node of a valid Satake diagram");
    return it->second;
}

IMat SatakeDatum::relative_action_on_ytheta(const Word& w) const {
    // express w b_k in the basis b_l
    size_t m = ytheta.size();
    int n = rd.n;
    IMat M(m, IVec(m, 0));
    for (size_t k = 0; k < m; ++k) {
        QVec h(ytheta[k].begin(), ytheta[k].end());
        QVec img = rd.act_coweight(w, h);
        // HNF rows: solve by pivots
        QVec rest = img;
        for (size_t l = 0; l < m; ++l) {
            int piv = 0;
            while (piv < n && ytheta[l][piv] == 0) ++piv;
            mpq_class c = rest[piv] / ytheta[l][piv];
            if (c.get_den() != 1) throw RootDataError("relative Weyl element does not preserve Y_Theta");
            M[k][l] = static_cast<int>(c.get_num().get_si());
            for (int t = 0; t < n; ++t) rest[t] -= c * ytheta[l][t];
        }
        for (const auto& x : rest)
            if (x != 0) throw RootDataError("relative Weyl element does not preserve Y_Theta");
    }
    return M;
}

int SatakeDatum::rank_one_sign(int i) const {
    int s = 0;
    for (int k = 0; k < rd.n; ++k) s += two_rho_bullet_vee[k] * rd.C[k][i];
    return (s % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------- rank one table

namespace {

IVec involution_from_black(const RootDatum& rd, const std::vector<int>& black, IVec tau_white) {
    int n = rd.n;
    IVec tau = std::move(tau_white);
    IMat W = rd.word_matrix(rd.longest_word(black));
    for (int j : black) {
        IVec img = mat_apply(W, unit(n, j));
        for (int k = 0; k < n; ++k)
            if (img[k] == -1) tau[j] = k;
    }
    return tau;
}

}  // namespace

RankOne rank_one_diagram(const std::string& label, int n) {
    auto identity = [](int r) {
        IVec t(r);
        std::iota(t.begin(), t.end(), 0);
        return t;
    };
    auto make = [&](char type, int rank, std::vector<int> black, IVec tau_white, int node) {
        RootDatum rd = RootDatum::of_type(type, rank);
        IVec tau = involution_from_black(rd, black, std::move(tau_white));
        return RankOne{SatakeDatum(rd, black, tau), node};
    };
    if (label == "AI1") return make('A', 1, {}, identity(1), 0);
    if (label == "AII3") return make('A', 3, {0, 2}, identity(3), 1);
    if (label == "AIII11") return make('A', 2, {}, IVec{1, 0}, 0);
    if (label == "AIV") {
        if (n < 2) throw RootDataError("AIV needs n >= 2");
        std::vector<int> black;
        for (int j = 1; j < n - 1; ++j) black.push_back(j);
        IVec t = identity(n);
        t[0] = n - 1;
        t[n - 1] = 0;
        return make('A', n, black, t, 0);
    }
    if (label == "BII") {
        if (n < 2) throw RootDataError("BII needs n >= 2");
        std::vector<int> black;
        for (int j = 1; j < n; ++j) black.push_back(j);
        return make('B', n, black, identity(n), 0);
    }
    if (label == "CII") {
        if (n < 3) throw RootDataError("CII needs n >= 3");
        std::vector<int> black{0};
        for (int j = 2; j < n; ++j) black.push_back(j);
        return make('C', n, black, identity(n), 1);
    }
    if (label == "DII") {
        if (n < 4) throw RootDataError("DII needs n >= 4");
        std::vector<int> black;
        for (int j = 1; j < n; ++j) black.push_back(j);
        return make('D', n, black, identity(n), 0);
    }
    if (label == "FII") return make('F', 4, {0, 1, 2}, identity(4), 3);
    throw RootDataError("unsupported rank-one type label '" + label + "'");
}

std::array<long, 4> table1_constants(const std::string& label, int n) {
    RankOne r = rank_one_diagram(label, n);
    const SatakeDatum& sd = r.sd;
    const RootDatum& rd = sd.rd;
    int i = r.node;
    int N = rd.n;
    std::array<long, 4> out{};
    out[0] = static_cast<long>(rd.d[i]) * rd.C[i][i];
    long s = 0;
    for (int k = 0; k < N; ++k) s += static_cast<long>(sd.two_rho_bullet_vee[k]) * rd.C[k][i];
    out[1] = s;
    out[2] = -static_cast<long>(rd.d[i]) * rd.coroot_on_root(i, sd.two_rho_bullet);
    IVec ai = unit(N, i);
    IVec th = sd.theta_root(ai);
    long rv = 0;
    for (int k = 0; k < N; ++k) rv += static_cast<long>(ai[k] - th[k]) * rd.d[k];
    out[3] = rv;
    return out;
}

}  // namespace qsp
