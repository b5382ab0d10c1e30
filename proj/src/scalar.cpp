#include "qsp/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qsp {

namespace {

std::optional<mpq_class> rat_sqrt(const mpq_class& a) {
    if (sgn(a) < 0) return std::nullopt;
    mpz_class n = a.get_num(), d = a.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Gauss Gauss::inv() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    return {re / n, -im / n};
}

std::string Gauss::str() const {
    if (sgn(im) == 0) return rat_str(re);
    if (sgn(re) == 0) return rat_str(im) + "i";
    std::string s = "(" + rat_str(re);
    if (sgn(im) > 0) s += "+";
    return s + rat_str(im) + "i)";
}

std::optional<Gauss> gauss_sqrt(const Gauss& a) {
    if (a.is_zero()) return Gauss(0);
    if (sgn(a.im) == 0) {
        if (sgn(a.re) > 0) {
            auto r = rat_sqrt(a.re);
            if (r) return Gauss(*r);
            return std::nullopt;
        }
        auto r = rat_sqrt(-a.re);
        if (r) return Gauss(0, *r);
        return std::nullopt;
    }
    auto r = rat_sqrt(a.norm());
    if (!r) return std::nullopt;
    auto s = rat_sqrt((a.re + *r) / 2);
    if (!s || sgn(*s) == 0) return std::nullopt;
    mpq_class t = a.im / (2 * *s);
    return Gauss(*s, t);
}

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(Gauss a, int k) {
    Poly p;
    if (a.is_zero()) return p;
    p.c.assign(k + 1, Gauss(0));
    p.c[k] = std::move(a);
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int Poly::valuation() const {
    for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) return static_cast<int>(k);
    return 0;
}

bool Poly::is_monomial() const {
    if (c.empty()) return false;
    for (size_t k = 0; k + 1 < c.size(); ++k)
        if (!c[k].is_zero()) return false;
    return true;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly p;
    if (k > 0) {
        p.c.assign(k, Gauss(0));
        p.c.insert(p.c.end(), c.begin(), c.end());
    } else {
        p.c.assign(c.begin() + (-k), c.end());
    }
    return p;
}

Poly Poly::reversed() const {
    Poly p;
    p.c.assign(c.rbegin(), c.rend());
    p.trim();
    return p;
}

Poly Poly::spread(int k) const {
    if (k == 1 || is_zero()) return *this;
    Poly p;
    p.c.assign(static_cast<size_t>(deg()) * k + 1, Gauss(0));
    for (size_t j = 0; j < c.size(); ++j) p.c[j * k] = c[j];
    return p;
}

Poly Poly::scaled(const Gauss& a) const {
    if (a.is_zero()) return Poly();
    Poly p = *this;
    for (auto& x : p.c) x = x * a;
    return p;
}

Poly Poly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inv());
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly p;
    p.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (k < a.c.size() && k < b.c.size())
            p.c[k] = a.c[k] + b.c[k];
        else if (k < a.c.size())
            p.c[k] = a.c[k];
        else
            p.c[k] = b.c[k];
    }
    p.trim();
    return p;
}

Poly operator-(const Poly& a) {
    Poly p = a;
    for (auto& x : p.c) x = -x;
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c.assign(a.c.size() + b.c.size() - 1, Gauss(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            p.c[i + j] = p.c[i + j] + a.c[i] * b.c[j];
        }
    }
    p.trim();
    return p;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    q = Poly();
    if (a.deg() < b.deg()) return;
    q.c.assign(a.deg() - b.deg() + 1, Gauss(0));
    Gauss li = b.lead().inv();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int s = r.deg() - b.deg();
        Gauss f = r.lead() * li;
        q.c[s] = f;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[j + s] = r.c[j + s] - f * b.c[j];
        r.c.back() = Gauss(0);
        r.trim();
    }
    q.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::optional<Poly> Poly::sqrt() const {
    if (is_zero()) return Poly();
    if (deg() % 2 != 0) return std::nullopt;
    int m = deg() / 2;
    auto lr = gauss_sqrt(lead());
    if (!lr) return std::nullopt;
    Poly r;
    r.c.assign(m + 1, Gauss(0));
    r.c[m] = *lr;
    Gauss twoinv = (Gauss(2) * *lr).inv();
    for (int k = m - 1; k >= 0; --k) {
        Gauss acc = c[m + k];
        for (int i = k + 1; i < m; ++i) {
            int j = m + k - i;
            if (j > k && j < m + 1 && j != m) acc = acc - r.c[i] * r.c[j];
        }
        r.c[k] = acc * twoinv;
    }
    r.trim();
    if (!(r * r == *this)) return std::nullopt;
    return r;
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(long n, int d) : num_(Gauss(n)), den_(Gauss(1)), d_(d) {}
FieldElem::FieldElem(const Gauss& a, int d) : num_(a), den_(Gauss(1)), d_(d) {}
FieldElem::FieldElem(Poly num, Poly den, int d) : num_(std::move(num)), den_(std::move(den)), d_(d) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

FieldElem FieldElem::mono(const Gauss& u, int k, int d) {
    if (k >= 0) return FieldElem(Poly::monomial(u, k), Poly(Gauss(1)), d);
    return FieldElem(Poly(u), Poly::monomial(Gauss(1), -k), d);
}

FieldElem FieldElem::qpow(const mpq_class& e, int d, const Gauss& u) {
    mpq_class k = e * d;
    if (k.get_den() != 1) throw NotRepresentable("q^(" + e.get_str() + ") needs a larger root order than " + std::to_string(d));
    return mono(u, static_cast<int>(k.get_num().get_si()), d);
}

void FieldElem::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Gauss(1));
        return;
    }
    if (den_.is_monomial()) {
        int k = den_.deg();
        int s = std::min(k, num_.valuation());
        if (s > 0) num_ = num_.shifted(-s);
        Gauss l = den_.lead();
        den_ = Poly::monomial(Gauss(1), k - s);
        if (!l.is_one()) num_ = num_.scaled(l.inv());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.deg() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Gauss l = den_.lead();
    if (!l.is_one()) {
        Gauss li = l.inv();
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

bool FieldElem::is_one() const { return den_.deg() == 0 && num_.deg() == 0 && num_.lead().is_one(); }

bool FieldElem::monomial(Gauss& u, int& k) const {
    if (num_.is_zero() || !num_.is_monomial() || !den_.is_monomial()) return false;
    u = num_.lead();
    k = num_.deg() - den_.deg();
    return true;
}

FieldElem FieldElem::promoted(int d) const {
    if (d == d_) return *this;
    if (d % d_ != 0) throw NotRepresentable("cannot promote root order " + std::to_string(d_) + " to " + std::to_string(d));
    FieldElem r;
    r.num_ = num_.spread(d / d_);
    r.den_ = den_.spread(d / d_);
    r.d_ = d;
    return r;
}

void unify(FieldElem& a, FieldElem& b) {
    if (a.d_ == b.d_) return;
    int l = std::lcm(a.d_, b.d_);
    a = a.promoted(l);
    b = b.promoted(l);
}

FieldElem FieldElem::bar() const {
    if (is_zero()) return *this;
    // n(1/v) / d(1/v) = v^(deg d - deg n) rev(n0) / rev(d0), with n0, d0 stripped of v-powers
    Poly rn = num_.shifted(-num_.valuation()).reversed();
    Poly rd = den_.shifted(-den_.valuation()).reversed();
    int shift = den_.deg() - num_.deg();
    if (shift >= 0)
        rn = rn.shifted(shift);
    else
        rd = rd.shifted(-shift);
    return FieldElem(rn, rd, d_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return FieldElem(den_, num_, d_);
}

FieldElem FieldElem::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    FieldElem r(1, d_), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& bb) {
    if (bb.is_zero()) return *this;
    FieldElem b = bb;
    unify(*this, b);
    if (is_zero()) return *this = b;
    if (den_ == b.den_) {
        num_ = num_ + b.num_;
        normalize();
        return *this;
    }
    if (den_.is_monomial() && b.den_.is_monomial()) {
        int k1 = den_.deg(), k2 = b.den_.deg();
        int k = std::max(k1, k2);
        num_ = num_.shifted(k - k1) + b.num_.shifted(k - k2);
        den_ = Poly::monomial(Gauss(1), k);
        normalize();
        return *this;
    }
    num_ = num_ * b.den_ + b.num_ * den_;
    den_ = den_ * b.den_;
    normalize();
    return *this;
}

FieldElem operator-(const FieldElem& a) {
    FieldElem r = a;
    r.num_ = -r.num_;
    return r;
}

FieldElem& FieldElem::operator-=(const FieldElem& b) { return *this += -b; }

FieldElem& FieldElem::operator*=(const FieldElem& bb) {
    if (is_zero()) {
        if (bb.d_ % d_ == 0) d_ = bb.d_;
        return *this;
    }
    if (bb.is_zero()) return *this = FieldElem(0, std::lcm(d_, bb.d_));
    FieldElem b = bb;
    unify(*this, b);
    if (den_.is_monomial() && b.den_.is_monomial()) {
        num_ = num_ * b.num_;
        den_ = Poly::monomial(Gauss(1), den_.deg() + b.den_.deg());
        normalize();
        return *this;
    }
    // cross-reduce to keep degrees small
    Poly g1 = Poly::gcd(num_, b.den_), g2 = Poly::gcd(b.num_, den_);
    Poly n1 = num_, d2 = b.den_, n2 = b.num_, d1 = den_, q, r;
    if (g1.deg() > 0) {
        Poly::divmod(n1, g1, q, r);
        n1 = q;
        Poly::divmod(d2, g1, q, r);
        d2 = q;
    }
    if (g2.deg() > 0) {
        Poly::divmod(n2, g2, q, r);
        n2 = q;
        Poly::divmod(d1, g2, q, r);
        d1 = q;
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    Gauss l = den_.lead();
    if (!l.is_one()) {
        Gauss li = l.inv();
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& b) { return *this *= b.inv(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.d_ == b.d_) return a.num_ == b.num_ && a.den_ == b.den_;
    FieldElem x = a, y = b;
    unify(x, y);
    return x.num_ == y.num_ && x.den_ == y.den_;
}

namespace {

std::string poly_terms(const Poly& p, int shift) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int k = p.deg(); k >= 0; --k) {
        const Gauss& a = p.c[k];
        if (a.is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += a.str() + "*v^" + std::to_string(k + shift);
    }
    return s;
}

}  // namespace

std::string FieldElem::str() const {
    if (is_zero()) return "0";
    if (den_.is_monomial()) return poly_terms(num_, -den_.deg());
    return "(" + poly_terms(num_, 0) + ") / (" + poly_terms(den_, 0) + ")";
}

FieldElem bar(const FieldElem& x) { return x.bar(); }

FieldElem qint(long n, int di, int d) {
    if (n == 0) return FieldElem(0, d);
    long m = n < 0 ? -n : n;
    Poly p;
    // q_i^(m-1) + q_i^(m-3) + ... + q_i^(1-m), shifted by q_i^(m-1)
    p.c.assign(static_cast<size_t>(2 * (m - 1) * di * d + 1), Gauss(0));
    for (long k = 0; k < m; ++k) p.c[static_cast<size_t>(2 * k * di * d)] = Gauss(n < 0 ? -1 : 1);
    return FieldElem(p, Poly::monomial(Gauss(1), static_cast<int>((m - 1) * di * d)), d);
}

FieldElem qfact(long n, int di, int d) {
    FieldElem r(1, d);
    for (long k = 2; k <= n; ++k) r *= qint(k, di, d);
    return r;
}

FieldElem qbinom(long n, long k, int di, int d) {
    if (k < 0 || k > n) return FieldElem(0, d);
    return qfact(n, di, d) / (qfact(k, di, d) * qfact(n - k, di, d));
}

std::optional<FieldElem> monomial_sqrt(const FieldElem& x) {
    Gauss u;
    int k;
    if (x.is_zero()) return x;
    if (!x.monomial(u, k)) return std::nullopt;
    if (k % 2 != 0) return std::nullopt;
    auto r = gauss_sqrt(u);
    if (!r) return std::nullopt;
    return FieldElem::mono(*r, k / 2, x.root_order());
}

std::optional<FieldElem> field_sqrt(const FieldElem& x) {
    if (x.is_zero()) return x;
    if (auto m = monomial_sqrt(x)) return m;
    auto n = x.num().sqrt();
    auto d = x.den().sqrt();
    if (!n || !d) return std::nullopt;
    // den is monic, so its root is monic up to sign
    Poly dm = d->monic();
    Poly nn = *n;
    if (!(d->lead().is_one())) nn = nn.scaled(d->lead().inv());
    // principal branch on the leading numerator coefficient
    const Gauss& l = nn.lead();
    if (sgn(l.re) < 0 || (sgn(l.re) == 0 && sgn(l.im) < 0)) nn = -nn;
    return FieldElem(nn, dm, x.root_order());
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;
    int d;

    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char ch) {
        ws();
        if (p < s.size() && s[p] == ch) {
            ++p;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("scalar literal '" + s + "': " + what + " at position " + std::to_string(p));
    }
    bool starts_atom() {
        ws();
        if (p >= s.size()) return false;
        char ch = s[p];
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'q' || ch == 'v' || ch == 'i' || ch == '(' ||
               s.compare(p, 4, "sqrt") == 0;
    }
    mpz_class integer() {
        ws();
        size_t b = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (b == p) fail("expected integer");
        return mpz_class(s.substr(b, p - b));
    }
    mpq_class exponent() {
        bool paren = eat('(');
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        mpq_class e(integer());
        if (eat('/')) {
            mpz_class den = integer();
            if (den == 0) fail("zero denominator in exponent");
            e /= mpq_class(den);
        }
        e.canonicalize();
        if (paren && !eat(')')) fail("expected ')'");
        return neg ? mpq_class(-e) : e;
    }
    FieldElem expr() {
        FieldElem r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    FieldElem term() {
        FieldElem r = unary();
        for (;;) {
            if (eat('*')) r *= unary();
            else if (eat('/')) {
                FieldElem b = unary();
                if (b.is_zero()) fail("division by zero");
                r /= b;
            } else if (starts_atom()) r *= power();
            else return r;
        }
    }
    FieldElem unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    FieldElem power() {
        ws();
        char gen = p < s.size() && (s[p] == 'q' || s[p] == 'v') ? s[p] : 0;
        FieldElem b = atom();
        if (!eat('^')) return b;
        mpq_class e = exponent();
        if (gen == 'q') return FieldElem::qpow(e, d);
        if (gen == 'v') return FieldElem::qpow(e / d, d);
        if (e.get_den() == 1) return b.pow(e.get_num().get_si());
        if (e.get_den() == 2) {
            auto r = monomial_sqrt(b);
            if (!r) fail("fractional power of a non-monomial");
            return r->pow(e.get_num().get_si());
        }
        fail("unsupported fractional exponent");
    }
    FieldElem atom() {
        ws();
        if (p >= s.size()) fail("unexpected end");
        if (s.compare(p, 4, "sqrt") == 0) {
            p += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            FieldElem x = expr();
            if (!eat(')')) fail("expected ')'");
            auto r = monomial_sqrt(x);
            if (!r) throw NotRepresentable("sqrt of '" + x.str() + "' is not a monomial root at root order " + std::to_string(d));
            return *r;
        }
        char ch = s[p];
        if (ch == '(') {
            ++p;
            FieldElem x = expr();
            if (!eat(')')) fail("expected ')'");
            return x;
        }
        if (ch == 'q') {
            ++p;
            return FieldElem::qpow(1, d);
        }
        if (ch == 'v') {
            ++p;
            return FieldElem::mono(Gauss(1), 1, d);
        }
        if (ch == 'i') {
            ++p;
            return FieldElem::i_unit(d);
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mpz_class n = integer();
            return FieldElem(Gauss(mpq_class(n)), d);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }
};

}  // namespace

FieldElem parse_scalar(const std::string& s, int d) {
    Parser ps{s, 0, d};
    FieldElem r = ps.expr();
    ps.ws();
    if (ps.p != s.size()) ps.fail("trailing input");
    return r.promoted(d);
}

}  // namespace qsp
