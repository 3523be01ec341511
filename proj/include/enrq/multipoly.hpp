#pragma once
#include "enrq/fq.hpp"
#include "enrq/rat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace enrq {

// Variables of the universal frame (s,t | x0,x1,x2 | y0,y1,y2 | lambda,mu).
enum class Var : uint8_t { S = 0, T, X0, X1, X2, Y0, Y1, Y2, LAM, MU };
inline constexpr int NVARS = 10;
using Exp = std::array<uint8_t, NVARS>;

inline const char* var_name(Var v) {
    static const char* names[NVARS] = {"s", "t", "x0", "x1", "x2", "y0", "y1", "y2", "lam", "mu"};
    return names[static_cast<int>(v)];
}

// A frame is the subset of variables a polynomial may mention.
using Frame = uint16_t;
inline constexpr Frame frame_of(std::initializer_list<Var> vs) {
    Frame f = 0;
    for (Var v : vs) f = static_cast<Frame>(f | (1u << static_cast<int>(v)));
    return f;
}
inline constexpr Frame FRAME_ST = frame_of({Var::S, Var::T});
inline constexpr Frame FRAME_X = frame_of({Var::X0, Var::X1, Var::X2});
inline constexpr Frame FRAME_Y = frame_of({Var::Y0, Var::Y1, Var::Y2});
inline constexpr Frame FRAME_STX = FRAME_ST | FRAME_X;
inline constexpr Frame FRAME_STXY = FRAME_ST | FRAME_X | FRAME_Y;
inline constexpr Frame FRAME_LM = frame_of({Var::LAM, Var::MU});
inline constexpr Frame FRAME_PENCIL = FRAME_STXY | FRAME_LM;

// Blockwise degree: (s,t | x | y | lambda,mu).
struct BlockDeg {
    int st = 0, x = 0, y = 0, lm = 0;
    friend bool operator==(const BlockDeg&, const BlockDeg&) = default;
    BlockDeg operator+(const BlockDeg& o) const { return {st + o.st, x + o.x, y + o.y, lm + o.lm}; }
    std::string str() const {
        return "(" + std::to_string(st) + "," + std::to_string(x) + "," + std::to_string(y) +
               (lm ? ";" + std::to_string(lm) : "") + ")";
    }
};

inline BlockDeg block_deg(const Exp& e) {
    return {e[0] + e[1], e[2] + e[3] + e[4], e[5] + e[6] + e[7], e[8] + e[9]};
}

struct FrameMismatchError : std::invalid_argument {
    FrameMismatchError() : std::invalid_argument("MultiPoly: variable frame mismatch") {}
};

// Sparse multivariate polynomial over K (Rat or Fq). Terms are kept in a
// canonical (lexicographic) order; every stored coefficient is nonzero.
template <class K>
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(Frame fr) : frame_(fr) {}

    static MultiPoly constant(Frame fr, K v) {
        MultiPoly r(fr);
        if (!v.is_zero()) r.terms_.emplace(Exp{}, std::move(v));
        return r;
    }
    static MultiPoly variable(Frame fr, Var v, K one) {
        if (!(fr & (1u << static_cast<int>(v)))) throw FrameMismatchError();
        MultiPoly r(fr);
        Exp e{};
        e[static_cast<size_t>(v)] = 1;
        r.terms_.emplace(e, std::move(one));
        return r;
    }
    static MultiPoly term(Frame fr, const Exp& e, K c) {
        MultiPoly r(fr);
        r.check_exp(e);
        if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
        return r;
    }

    Frame frame() const { return frame_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, K>& terms() const { return terms_; }

    void add_term(const Exp& e, const K& c) {
        check_exp(e);
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.frame_ == b.frame_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        if (frame_ != o.frame_) throw FrameMismatchError();
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        if (frame_ != o.frame_) throw FrameMismatchError();
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.frame_ != b.frame_) throw FrameMismatchError();
        MultiPoly r(a.frame_);
        for (const auto& [e1, c1] : a.terms_) {
            for (const auto& [e2, c2] : b.terms_) {
                Exp e;
                for (int i = 0; i < NVARS; ++i)
                    e[static_cast<size_t>(i)] =
                        static_cast<uint8_t>(e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)]);
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly scaled(const K& s) const {
        MultiPoly r(frame_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    K eval(std::span<const K, NVARS> pt) const {
        K acc{};
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int i = 0; i < NVARS; ++i)
                for (int j = 0; j < e[static_cast<size_t>(i)]; ++j) t = t * pt[static_cast<size_t>(i)];
            acc += t;
        }
        return acc;
    }

    MultiPoly partial_derivative(Var v) const {
        const size_t vi = static_cast<size_t>(v);
        if (!(frame_ & (1u << vi))) throw FrameMismatchError();
        MultiPoly r(frame_);
        for (const auto& [e, c] : terms_) {
            if (e[vi] == 0) continue;
            Exp e2 = e;
            e2[vi] = static_cast<uint8_t>(e2[vi] - 1);
            K m{};
            for (int j = 0; j < e[vi]; ++j) m += c; // multiply by the integer exponent
            r.add_term(e2, m);
        }
        return r;
    }

    // substitute exact values for a subset of variables; result lives in the
    // frame with those variables removed
    MultiPoly substitute(const std::vector<std::pair<Var, K>>& subs) const {
        Frame nf = frame_;
        for (auto& [v, val] : subs) {
            (void)val;
            nf = static_cast<Frame>(nf & ~(1u << static_cast<int>(v)));
        }
        MultiPoly r(nf);
        for (const auto& [e, c] : terms_) {
            K nc = c;
            Exp e2 = e;
            for (auto& [v, val] : subs) {
                size_t vi = static_cast<size_t>(v);
                for (int j = 0; j < e[vi]; ++j) nc = nc * val;
                e2[vi] = 0;
            }
            r.add_term(e2, nc);
        }
        return r;
    }

    // rename: move the polynomial into a superset frame
    MultiPoly promoted(Frame nf) const {
        if ((frame_ & nf) != frame_) throw FrameMismatchError();
        MultiPoly r(nf);
        r.terms_ = terms_;
        return r;
    }

    // blockwise homogeneity: all terms share one BlockDeg
    std::optional<BlockDeg> homogeneous_block_degree() const {
        std::optional<BlockDeg> d;
        for (const auto& [e, c] : terms_) {
            (void)c;
            BlockDeg bd = block_deg(e);
            if (!d) d = bd;
            else if (!(*d == bd)) return std::nullopt;
        }
        return d ? d : std::optional<BlockDeg>{BlockDeg{}};
    }

    bool is_tri_homogeneous(const BlockDeg& want) const {
        if (terms_.empty()) return true;
        auto d = homogeneous_block_degree();
        return d && *d == want;
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            (void)c;
            d = std::max<int>(d, e[static_cast<size_t>(v)]);
        }
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (int i = 0; i < NVARS; ++i) {
                if (e[static_cast<size_t>(i)] == 0) continue;
                s += "*";
                s += var_name(static_cast<Var>(i));
                if (e[static_cast<size_t>(i)] > 1) s += "^" + std::to_string(e[static_cast<size_t>(i)]);
            }
        }
        return s;
    }

private:
    void check_exp(const Exp& e) const {
        for (int i = 0; i < NVARS; ++i)
            if (e[static_cast<size_t>(i)] != 0 && !(frame_ & (1u << i))) throw FrameMismatchError();
    }

    std::map<Exp, K> terms_;
    Frame frame_ = 0;
};

// all exponent vectors with the given blockwise degrees (st, x, y), no lm part
std::vector<Exp> monomials_of(const BlockDeg& d);

// reduction of a rational polynomial modulo p (requires denominators
// coprime to p)
MultiPoly<Fq> reduce_mod(const MultiPoly<Rat>& f, const FqCtx* ctx);

// ---- minors ----

// determinant by Laplace expansion along the first row
template <class P>
P laplace_det(const std::vector<std::vector<P>>& m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det: empty");
    if (n == 1) return m[0][0];
    P acc{};
    bool first = true;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<P>> sub(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) sub[i - 1].push_back(m[i][jj]);
        P term = m[0][j] * laplace_det(sub);
        if (j % 2 == 1) term = -term;
        if (first) { acc = std::move(term); first = false; }
        else acc += term;
    }
    if (first) {
        // whole first row zero
        return m[0][0]; // zero of the right frame
    }
    return acc;
}

// All k x k minors, iterating row index tuples lexicographically and, inside
// each, column index tuples lexicographically. The order is part of the
// contract and must not change.
template <class P>
std::vector<P> matrix_minors(const std::vector<std::vector<P>>& m, int k) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (k <= 0 || k > rows || k > cols)
        throw std::invalid_argument("matrix_minors: minor size out of range");
    std::vector<int> ri(static_cast<size_t>(k)), ci(static_cast<size_t>(k));
    std::vector<P> out;
    // iterate k-subsets in lexicographic order
    auto next_subset = [](std::vector<int>& idx, int n) {
        int k2 = static_cast<int>(idx.size());
        int i = k2 - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k2 + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k2; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        return true;
    };
    for (int i = 0; i < k; ++i) ri[static_cast<size_t>(i)] = i;
    do {
        for (int i = 0; i < k; ++i) ci[static_cast<size_t>(i)] = i;
        do {
            std::vector<std::vector<P>> sub(static_cast<size_t>(k));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    sub[static_cast<size_t>(a)].push_back(
                        m[static_cast<size_t>(ri[static_cast<size_t>(a)])]
                         [static_cast<size_t>(ci[static_cast<size_t>(b)])]);
            out.push_back(laplace_det(sub));
        } while (next_subset(ci, cols));
    } while (next_subset(ri, rows));
    return out;
}

} // namespace enrq
