#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

// Gaussian rational re + im*i.
struct Gauss {
    mpq_class re{0}, im{0};

    Gauss() = default;
    Gauss(long n) : re(n) {}
    Gauss(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    Gauss conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }
    Gauss inv() const;
    std::string str() const;

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inv(); }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

// Principal square root in Q(i) if it exists: nonnegative real part, then nonnegative imaginary part.
std::optional<Gauss> gauss_sqrt(const Gauss& a);

// Dense polynomial in v over Q(i); c[k] is the coefficient of v^k.
class Poly {
public:
    std::vector<Gauss> c;

    Poly() = default;
    explicit Poly(Gauss a) {
        if (!a.is_zero()) c.push_back(std::move(a));
    }
    static Poly monomial(Gauss a, int k);

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    int valuation() const;
    const Gauss& lead() const { return c.back(); }
    bool is_monomial() const;
    void trim();

    Poly shifted(int k) const;  // multiply by v^k, k >= -valuation
    Poly reversed() const;      // v^deg p(1/v)
    Poly spread(int k) const;   // p(v^k)
    Poly scaled(const Gauss& a) const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b);
    std::optional<Poly> sqrt() const;
};

// Element of Q(i)(v) with v^d = q. Canonical: gcd-reduced, monic denominator.
class FieldElem {
public:
    FieldElem() : den_(Gauss(1)) {}
    FieldElem(long n, int d = 1);
    FieldElem(const Gauss& a, int d = 1);
    FieldElem(Poly num, Poly den, int d);

    // u * v^k at root order d
    static FieldElem mono(const Gauss& u, int k, int d);
    // u * q^(num/den); throws if not representable at root order d
    static FieldElem qpow(const mpq_class& e, int d, const Gauss& u = Gauss(1));
    static FieldElem i_unit(int d = 1) { return FieldElem(Gauss(0, 1), d); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int root_order() const { return d_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.is_monomial(); }
    // x = u * v^k ?
    bool monomial(Gauss& u, int& k) const;

    FieldElem promoted(int d) const;
    FieldElem bar() const;
    FieldElem inv() const;
    FieldElem pow(long n) const;

    std::string str() const;
    std::string str(int d) const { return promoted(d).str(); }

    FieldElem& operator+=(const FieldElem& b);
    FieldElem& operator-=(const FieldElem& b);
    FieldElem& operator*=(const FieldElem& b);
    FieldElem& operator/=(const FieldElem& b);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend FieldElem operator-(const FieldElem& a);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    Poly num_, den_;
    int d_ = 1;
    void normalize();
    friend void unify(FieldElem& a, FieldElem& b);
};

struct NotRepresentable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FieldElem bar(const FieldElem& x);

// [n]_{q^di}
FieldElem qint(long n, int di, int d = 1);
// [n]_{q^di}!
FieldElem qfact(long n, int di, int d = 1);
// [n choose k]_{q^di}
FieldElem qbinom(long n, long k, int di, int d = 1);

// y with y^2 = x for monomial x = u q^(m/d), principal branch on u; absent otherwise.
std::optional<FieldElem> monomial_sqrt(const FieldElem& x);
// y with y^2 = x for any perfect square in the field (leading numerator coefficient principal).
std::optional<FieldElem> field_sqrt(const FieldElem& x);

// Parameter literal over q, v, i, rationals, ^, sqrt(...). Root order d fixes v = q^(1/d).
FieldElem parse_scalar(const std::string& s, int d);

}  // namespace qsp
