#pragma once
#include <gmpxx.h>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enrq {

// Dense univariate polynomial, coefficients stored lowest degree first.
// K is a field (Rat, Fq) or, for elimination work, another UniPoly.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> c) : c_(std::move(c)) { normalize(); }
    static UniPoly constant(K v) {
        UniPoly f;
        if (!v.is_zero()) f.c_.push_back(std::move(v));
        return f;
    }
    static UniPoly monomial(K v, int d) {
        UniPoly f;
        if (!v.is_zero()) {
            f.c_.assign(static_cast<size_t>(d) + 1, K());
            f.c_.back() = std::move(v);
        }
        return f;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const K& lc() const { assert(!c_.empty()); return c_.back(); }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    void set_coeff(int i, K v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, K());
        c_[static_cast<size_t>(i)] = std::move(v);
        normalize();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

    UniPoly scaled(const K& s) const {
        if (s.is_zero()) return {};
        UniPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.normalize();
        return r;
    }

    // multiply by x^d
    UniPoly shifted(int d) const {
        if (is_zero()) return {};
        UniPoly r;
        r.c_.assign(c_.size() + static_cast<size_t>(d), K());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(d)] = c_[i];
        return r;
    }

    K eval(const K& x) const {
        K r{};
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> r(c_.size() - 1, K());
        for (size_t i = 1; i < c_.size(); ++i) {
            K m = c_[i];
            K s{};
            for (size_t j = 0; j < i; ++j) s += m; // i * c_i without an int ctor on K
            r[i - 1] = s;
        }
        return UniPoly(std::move(r));
    }

    // division with remainder; requires invertible leading coefficient (field K)
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero");
        UniPoly q, r = *this;
        if (r.degree() < d.degree()) return {q, r};
        q.c_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, K());
        K li = d.lc().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            K c = r.lc() * li;
            q.c_[static_cast<size_t>(k)] = c;
            r -= d.scaled(c).shifted(k);
        }
        q.normalize();
        return {q, r};
    }

    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

    UniPoly monic() const {
        if (is_zero()) return {};
        return scaled(lc().inv());
    }

    std::string str(const std::string& var = "x") const;

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

private:
    std::vector<K> c_;
};

// ---- exact division on coefficients (for fraction-free elimination) ----

template <class K>
K exact_coeff_div(const K& a, const K& b) { return a / b; } // fields

template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
    if (a.is_zero()) return {};
    UniPoly<K> q, r = a;
    if (r.degree() < b.degree()) throw std::domain_error("exact_div: not divisible (degree)");
    std::vector<K> qc(static_cast<size_t>(r.degree() - b.degree()) + 1, K());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        K c = exact_coeff_div(r.lc(), b.lc());
        qc[static_cast<size_t>(k)] = c;
        r -= b.scaled(c).shifted(k);
    }
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    q = UniPoly<K>(std::move(qc));
    return q;
}

template <class K>
UniPoly<K> exact_coeff_div(const UniPoly<K>& a, const UniPoly<K>& b) { return exact_div(a, b); }

// ---- gcd over a field ----

template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <class K>
bool is_squarefree(const UniPoly<K>& f) {
    if (f.is_zero()) return false;
    UniPoly<K> d = f.derivative();
    if (d.is_zero()) return f.degree() == 0;
    return poly_gcd(f, d).degree() == 0;
}

// ---- determinants ----

// Gaussian elimination with sign tracking; K a field.
template <class K>
K det_gauss(std::vector<std::vector<K>> m) {
    const size_t n = m.size();
    bool neg = false;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return K();
        if (piv != col) { std::swap(m[piv], m[col]); neg = !neg; }
        K inv = m[col][col].inv();
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            K f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    K d = m[0][0];
    for (size_t i = 1; i < n; ++i) d = d * m[i][i];
    if (neg) d = -d;
    return d;
}

// Bareiss fraction-free elimination; T an integral-domain element type
// providing exact_coeff_div. Exact determinant, including sign.
template <class T>
T det_bareiss(std::vector<std::vector<T>> m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    bool neg = false;
    T prev; // previous pivot; empty means 1 on the first step
    bool have_prev = false;
    for (size_t col = 0; col + 1 < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return T();
        if (piv != col) { std::swap(m[piv], m[col]); neg = !neg; }
        for (size_t i = col + 1; i < n; ++i) {
            for (size_t j = col + 1; j < n; ++j) {
                T num = m[i][j] * m[col][col] - m[i][col] * m[col][j];
                m[i][j] = have_prev ? exact_coeff_div(num, prev) : num;
            }
            m[i][col] = T();
        }
        prev = m[col][col];
        have_prev = true;
    }
    T d = m[n - 1][n - 1];
    if (neg) d = -d;
    return d;
}

// ---- resultant, pinned Sylvester convention ----
// Res(f, g) = det S where S has f's coefficients (highest first) in the
// first deg(g) rows and g's in the remaining deg(f) rows.

template <class K>
std::vector<std::vector<K>> sylvester_matrix(const UniPoly<K>& f, const UniPoly<K>& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw std::domain_error("sylvester: zero polynomial");
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<K>> s(N, std::vector<K>(N, K()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = g.coeff(n - j);
    return s;
}

// Resultant over a field. Degenerate degrees follow the determinant of the
// (possibly empty) Sylvester matrix: Res(c, g) = c^deg(g), Res of two
// constants is 1.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial");
    const int m = f.degree(), n = g.degree();
    K one = f.lc() * f.lc().inv();
    if (m == 0) {
        K r = one;
        for (int i = 0; i < n; ++i) r = r * f.coeff(0);
        return r;
    }
    if (n == 0) {
        K r = one;
        for (int i = 0; i < m; ++i) r = r * g.coeff(0);
        return r;
    }
    return det_gauss(sylvester_matrix(f, g));
}

// Resultant with polynomial-ring coefficients (e.g. eliminating one variable
// of a bivariate polynomial); fraction-free.
template <class K>
UniPoly<K> resultant_ring(const UniPoly<UniPoly<K>>& f, const UniPoly<UniPoly<K>>& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial");
    const int m = f.degree(), n = g.degree();
    K onek = f.lc().lc() * f.lc().lc().inv();
    UniPoly<K> one = UniPoly<K>::constant(onek);
    if (m == 0) {
        UniPoly<K> r = one;
        for (int i = 0; i < n; ++i) r = r * f.coeff(0);
        return r;
    }
    if (n == 0) {
        UniPoly<K> r = one;
        for (int i = 0; i < m; ++i) r = r * g.coeff(0);
        return r;
    }
    return det_bareiss(sylvester_matrix(f, g));
}

// modular exponentiation: base^e mod f (f with invertible lc; field K)
template <class K>
UniPoly<K> powmod(const UniPoly<K>& base, const mpz_class& e, const UniPoly<K>& f) {
    UniPoly<K> result, b = base % f;
    result = UniPoly<K>::constant(f.lc() * f.lc().inv()); // one of the field
    mpz_class m = e;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) result = (result * b) % f;
        b = (b * b) % f;
        m >>= 1;
    }
    return result;
}

template <class K>
std::string UniPoly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i == 1) s += "*" + var;
        else if (i > 1) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
}

} // namespace enrq
