#include "qsp/repmod.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace qsp {

Mat WModule::K(const QVec& h) const {
    Mat m(dim(), dim());
    for (int k = 0; k < dim(); ++k) m.at(k, k) = FieldElem::qpow(RootDatum::pair(h, wt[k]), d);
    return m;
}

Mat WModule::Ki(int i, int power) const {
    rd.check_index(i);
    Mat m(dim(), dim());
    for (int k = 0; k < dim(); ++k) m.at(k, k) = FieldElem::mono(Gauss(1), rd.d[i] * wt[k][i] * power * d, d);
    return m;
}

std::vector<int> WModule::block(const IVec& mu) const {
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
        if (wt[k] == mu) out.push_back(k);
    return out;
}

std::vector<IVec> WModule::weights() const {
    std::set<IVec> s(wt.begin(), wt.end());
    return {s.begin(), s.end()};
}

Mat eval_word(const WModule& M, const OpWord& w) {
    Mat x = M.identity();
    for (const auto& l : w) {
        switch (l.g) {
            case 'E':
                x = x * M.E.at(l.i);
                break;
            case 'F':
                x = x * M.F.at(l.i);
                break;
            case 'K':
                x = x * M.K(l.h);
                break;
            default:
                throw ModuleError(std::string("unknown generator letter ") + l.g);
        }
    }
    return x;
}

OpWord rho_word(const OpWord& w) {
    OpWord r(w.rbegin(), w.rend());
    for (auto& l : r) {
        if (l.g == 'E')
            l.g = 'F';
        else if (l.g == 'F')
            l.g = 'E';
    }
    return r;
}

OpWord random_word(const RootDatum& rd, int length, unsigned seed, bool with_half) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> kind(0, 2), idx(0, rd.n - 1), coef(-2, 2);
    OpWord w;
    for (int t = 0; t < length; ++t) {
        Letter l;
        int k = kind(gen);
        l.g = k == 0 ? 'E' : k == 1 ? 'F' : 'K';
        l.i = idx(gen);
        if (l.g == 'K') {
            l.h.assign(rd.n, 0);
            for (auto& x : l.h) x = with_half ? mpq_class(coef(gen), 2) : mpq_class(coef(gen));
        }
        w.push_back(l);
    }
    return w;
}

std::string word_str(const OpWord& w) {
    std::ostringstream os;
    for (const auto& l : w) {
        if (l.g == 'K') {
            os << "K(";
            for (size_t j = 0; j < l.h.size(); ++j) os << (j ? "," : "") << l.h[j];
            os << ")";
        } else {
            os << l.g << l.i + 1;
        }
    }
    return os.str();
}

Vec SimpleModule::basis_vector(int k) const {
    Vec v(dim(), FieldElem(0));
    v.at(k) = FieldElem(1);
    return v;
}

bool is_dominant(const IVec& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

namespace {

using Sparse = std::vector<std::pair<int, FieldElem>>;  // (global index, coefficient)

struct Builder {
    const RootDatum& rd;
    int cap;
    std::vector<IVec> wt;
    std::vector<Word> fword;
    std::map<IVec, std::vector<int>> blocks;
    std::map<IVec, Mat> gram;               // per weight, local coordinates
    std::vector<std::vector<Sparse>> Eimg;  // Eimg[j][k]
    std::vector<std::vector<Sparse>> Fimg;  // Fimg[i][k]
    std::vector<int> local;                 // position of k inside its block

    Builder(const RootDatum& r, int c) : rd(r), cap(c), Eimg(r.n), Fimg(r.n) {}

    int add(const IVec& mu, Word w) {
        int k = static_cast<int>(wt.size());
        if (k + 1 > cap) throw DimensionCapExceeded("module dimension exceeds cap " + std::to_string(cap));
        wt.push_back(mu);
        fword.push_back(std::move(w));
        auto& b = blocks[mu];
        local.push_back(static_cast<int>(b.size()));
        b.push_back(k);
        for (auto& e : Eimg) e.emplace_back();
        for (auto& f : Fimg) f.emplace_back();
        return k;
    }

    // coordinates of F_i applied to a sparse vector
    Sparse apply_F(int i, const Sparse& x) const {
        std::map<int, FieldElem> acc;
        for (const auto& [k, a] : x)
            for (const auto& [m, b] : Fimg[i][k]) acc[m] += a * b;
        Sparse out;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.emplace_back(m, c);
        return out;
    }

    // E_j F_i b = F_i E_j b + delta_ij [<alpha_i^vee, wt b>]_i b
    Sparse e_of_candidate(int j, int i, int b) const {
        Sparse out = apply_F(i, Eimg[j][b]);
        if (i == j) {
            FieldElem s = qint(wt[b][i], rd.d[i]);
            if (!s.is_zero()) {
                bool merged = false;
                for (auto& [m, c] : out)
                    if (m == b) {
                        c += s;
                        merged = true;
                    }
                if (!merged) out.emplace_back(b, s);
            }
        }
        return out;
    }

    void level(const IVec& nu) {
        struct Cand {
            int i, b;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < rd.n; ++i) {
            IVec up = nu;
            for (int t = 0; t < rd.n; ++t) up[t] += rd.C[t][i];
            auto it = blocks.find(up);
            if (it == blocks.end()) continue;
            for (int b : it->second) cands.push_back({i, b});
        }
        if (cands.empty()) return;
        // stacked E-images, rows grouped by j
        std::vector<int> row_off(rd.n + 1, 0);
        std::vector<IVec> ups(rd.n);
        for (int j = 0; j < rd.n; ++j) {
            ups[j] = nu;
            for (int t = 0; t < rd.n; ++t) ups[j][t] += rd.C[t][j];
            auto it = blocks.find(ups[j]);
            row_off[j + 1] = row_off[j] + (it == blocks.end() ? 0 : static_cast<int>(it->second.size()));
        }
        int nc = static_cast<int>(cands.size());
        Mat A(row_off[rd.n], nc);
        for (int c = 0; c < nc; ++c)
            for (int j = 0; j < rd.n; ++j) {
                if (row_off[j + 1] == row_off[j]) continue;
                for (const auto& [m, a] : e_of_candidate(j, cands[c].i, cands[c].b)) A.at(row_off[j] + local[m], c) = a;
            }
        Mat R = A;
        auto piv = R.rref();
        if (piv.empty()) return;
        std::vector<int> ids;
        for (int p : piv) {
            Word w{cands[p].i};
            w.insert(w.end(), fword[cands[p].b].begin(), fword[cands[p].b].end());
            ids.push_back(add(nu, std::move(w)));
        }
        for (size_t r = 0; r < piv.size(); ++r) {
            int k = ids[r];
            for (int j = 0; j < rd.n; ++j) {
                if (row_off[j + 1] == row_off[j]) continue;
                const auto& bj = blocks.at(ups[j]);
                for (int t = 0; t < row_off[j + 1] - row_off[j]; ++t) {
                    const auto& a = A.at(row_off[j] + t, piv[r]);
                    if (!a.is_zero()) Eimg[j][k].emplace_back(bj[t], a);
                }
            }
        }
        for (int c = 0; c < nc; ++c) {
            Sparse img;
            for (size_t r = 0; r < piv.size(); ++r)
                if (!R.at(static_cast<int>(r), c).is_zero()) img.emplace_back(ids[r], R.at(static_cast<int>(r), c));
            Fimg[cands[c].i][cands[c].b] = std::move(img);
        }
        // (F_i b, w) = (b, E_i w)
        int nb = static_cast<int>(ids.size());
        Mat g(nb, nb);
        for (int r = 0; r < nb; ++r) {
            const auto& cd = cands[piv[r]];
            IVec up = wt[cd.b];
            const Mat& gu = gram.at(up);
            for (int s = 0; s < nb; ++s) {
                FieldElem acc(0);
                for (const auto& [m, a] : Eimg[cd.i][ids[s]]) acc += gu.at(local[cd.b], local[m]) * a;
                g.at(r, s) = acc;
            }
        }
        gram[nu] = g;
    }
};

}  // namespace

SimpleModule build_simple(const RootDatum& rd, const IVec& lambda, int d, int dim_cap) {
    if (static_cast<int>(lambda.size()) != rd.n) throw ModuleError("highest weight has wrong length");
    if (!is_dominant(lambda)) throw ModuleError("highest weight is not dominant");
    Builder bld(rd, dim_cap);
    bld.add(lambda, {});
    Mat one(1, 1);
    one.at(0, 0) = FieldElem(1);
    bld.gram[lambda] = one;
    std::set<IVec> current{lambda};
    while (!current.empty()) {
        std::set<IVec> next;
        for (const auto& mu : current)
            for (int i = 0; i < rd.n; ++i) {
                IVec nu = mu;
                for (int t = 0; t < rd.n; ++t) nu[t] -= rd.C[t][i];
                next.insert(nu);
            }
        current.clear();
        // process in descending lexicographic order of the weight coordinates
        for (auto it = next.rbegin(); it != next.rend(); ++it) {
            bld.level(*it);
            if (bld.blocks.count(*it)) current.insert(*it);
        }
    }

    SimpleModule M;
    M.rd = rd;
    M.d = d;
    M.lambda = lambda;
    M.wt = bld.wt;
    M.fword = bld.fword;
    int N = M.dim();
    M.E.assign(rd.n, Mat(N, N));
    M.F.assign(rd.n, Mat(N, N));
    for (int i = 0; i < rd.n; ++i)
        for (int k = 0; k < N; ++k) {
            for (const auto& [m, a] : bld.Eimg[i][k]) M.E[i].at(m, k) = a;
            for (const auto& [m, a] : bld.Fimg[i][k]) M.F[i].at(m, k) = a;
        }
    M.G = Mat(N, N);
    for (const auto& [mu, ids] : bld.blocks) {
        const Mat& g = bld.gram.at(mu);
        for (size_t r = 0; r < ids.size(); ++r)
            for (size_t s = 0; s < ids.size(); ++s) M.G.at(ids[r], ids[s]) = g.at(static_cast<int>(r), static_cast<int>(s));
    }
    M.hi = 0;
    auto lo = M.block(rd.w0_weight(lambda));
    if (lo.size() != 1) throw ModuleError("lowest weight space is not one-dimensional");
    M.lo = lo[0];
    return M;
}

FieldElem shapovalov(const SimpleModule& M, const Vec& v, const Vec& w) {
    if (static_cast<int>(v.size()) != M.dim() || static_cast<int>(w.size()) != M.dim())
        throw ModuleError("vector does not belong to this module");
    FieldElem s(0);
    Vec gw = matvec(M.G, w);
    for (int k = 0; k < M.dim(); ++k)
        if (!v[k].is_zero() && !gw[k].is_zero()) s += v[k] * gw[k];
    return s;
}

Vec bar_vector(const Vec& v) {
    Vec out = v;
    for (auto& x : out)
        if (!x.is_zero()) x = x.bar();
    return out;
}

Mat rho_op(const SimpleModule& M, const Mat& X) { return M.G.inverse() * X.transpose() * M.G; }

FieldElem dual_pairing(const SimpleModule& M, const Vec& f, const Mat& X, const Vec& v) {
    return shapovalov(M, f, matvec(X, v));
}

Vec act_Kh(const WModule& M, const QVec& h, const Vec& v) {
    if (static_cast<int>(v.size()) != M.dim()) throw ModuleError("vector does not belong to this module");
    Vec out = v;
    for (int k = 0; k < M.dim(); ++k)
        if (!out[k].is_zero()) out[k] *= FieldElem::qpow(RootDatum::pair(h, M.wt[k]), M.d);
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero()) m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

WModule tensor(const WModule& M, const WModule& N) {
    if (M.rd.C != N.rd.C || M.rd.d != N.rd.d) throw ModuleError("tensor factors have different root data");
    WModule T;
    T.rd = M.rd;
    T.d = std::max(M.d, N.d);
    for (const auto& a : M.wt)
        for (const auto& b : N.wt) {
            IVec s(a.size());
            for (size_t t = 0; t < a.size(); ++t) s[t] = a[t] + b[t];
            T.wt.push_back(s);
        }
    Mat iM = M.identity(), iN = N.identity();
    for (int i = 0; i < M.rd.n; ++i) {
        T.E.push_back(kron(M.E[i], iN) + kron(M.Ki(i), N.E[i]));
        T.F.push_back(kron(iM, N.F[i]) + kron(M.F[i], N.Ki(i, -1)));
    }
    return T;
}

}  // namespace qsp
