#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permfib/bigint.hpp"
#include "permfib/error.hpp"

namespace permfib {

/// Order of a series that is known exactly (a polynomial).
inline constexpr int kExactOrder = std::numeric_limits<int>::max();

template <class R>
class TruncatedSeries;

inline bool is_zero(const Rational& r) { return r == 0; }
template <class R>
bool is_zero(const TruncatedSeries<R>& s) { return s.stored().empty(); }

inline Rational scale(const Rational& r, const Rational& c) { return r * c; }
template <class R>
TruncatedSeries<R> scale(const TruncatedSeries<R>& s, const Rational& c);

inline Rational invert_element(const Rational& r) {
    if (r == 0) throw SingularSeries("constant term is not invertible");
    return 1 / r;
}
template <class R>
TruncatedSeries<R> invert_element(const TruncatedSeries<R>& s);

/// Formal power series known to a fixed order, with coefficients in R
/// (Rational, or TruncatedSeries<Rational> for bivariate series). Coefficients
/// past the order are unknown and never stored; trailing zero coefficients are
/// not stored either. Binary operations truncate to the smaller order.
template <class R>
class TruncatedSeries {
public:
    using Coefficient = R;

    /// Exact zero.
    TruncatedSeries() = default;

    /// Exact constant.
    TruncatedSeries(R constant) { // NOLINT(google-explicit-constructor): ring embedding
        coeffs_.push_back(std::move(constant));
        trim();
    }

    TruncatedSeries(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
        if (order < 0) throw InvalidInput("series order must be nonnegative");
        if (order != kExactOrder && coeffs_.size() > static_cast<std::size_t>(order) + 1)
            coeffs_.resize(static_cast<std::size_t>(order) + 1);
        trim();
    }

    static TruncatedSeries polynomial(std::vector<R> coeffs) { return {std::move(coeffs), kExactOrder}; }

    /// The variable itself, as an exact polynomial.
    static TruncatedSeries variable() { return polynomial({R{}, R(Rational(1))}); }

    /// c * variable^degree, exact.
    static TruncatedSeries monomial(R c, int degree) {
        std::vector<R> v(static_cast<std::size_t>(degree) + 1);
        v.back() = std::move(c);
        return polynomial(std::move(v));
    }

    int order() const { return order_; }
    bool is_exact() const { return order_ == kExactOrder; }

    /// Coefficient of variable^i. Throws std::out_of_range past the order.
    R coeff(int i) const {
        if (i < 0 || i > order_) throw std::out_of_range("coefficient index beyond truncation order");
        return static_cast<std::size_t>(i) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(i)] : R{};
    }

    std::span<const R> stored() const { return coeffs_; }

    /// Highest stored degree, or -1 for zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    TruncatedSeries truncate(int order) const { return {coeffs_, std::min(order, order_)}; }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int order = std::min(a.order_, b.order_);
        std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
        if (order != kExactOrder) len = std::min(len, static_cast<std::size_t>(order) + 1);
        std::vector<R> out(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (i < a.coeffs_.size()) out[i] = a.coeffs_[i];
            if (i < b.coeffs_.size()) out[i] = out[i] + b.coeffs_[i];
        }
        return {std::move(out), order};
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int order = std::min(a.order_, b.order_);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return {{}, order};
        std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (order != kExactOrder) len = std::min(len, static_cast<std::size_t>(order) + 1);
        std::vector<R> out(len);
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return {std::move(out), order};
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Same order and same coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Multiplies by variable^k (order grows by k).
    TruncatedSeries shift_up(int k) const {
        std::vector<R> out(static_cast<std::size_t>(k), R{});
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return {std::move(out), is_exact() ? kExactOrder : order_ + k};
    }

private:
    template <class>
    friend class TruncatedSeries;

    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
    int order_ = kExactOrder;
};

using RationalSeries = TruncatedSeries<Rational>;
/// Series in x whose coefficients are series in t.
using BivariateSeries = TruncatedSeries<RationalSeries>;

template <class R>
TruncatedSeries<R> scale(const TruncatedSeries<R>& s, const Rational& c) {
    std::vector<R> out(s.stored().begin(), s.stored().end());
    for (auto& v : out) v = scale(v, c);
    return {std::move(out), s.order()};
}

/// Multiplicative inverse to the same order. An exact series must be a
/// nonzero constant. Throws SingularSeries when the constant term is not a unit.
template <class R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& s) {
    if (s.is_exact() && s.degree() > 0)
        throw InvalidInput("invert needs a finite truncation order for a non-constant polynomial");
    R b0 = invert_element(s.coeff(0));
    if (s.is_exact()) return TruncatedSeries<R>(b0);
    int order = s.order();
    std::vector<R> b(static_cast<std::size_t>(order) + 1);
    b[0] = b0;
    auto a = s.stored();
    for (int n = 1; n <= order; ++n) {
        R acc{};
        for (int i = 1; i <= n && static_cast<std::size_t>(i) < a.size(); ++i)
            acc = acc + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
        b[static_cast<std::size_t>(n)] = -(b0 * acc);
    }
    return {std::move(b), order};
}

template <class R>
TruncatedSeries<R> invert_element(const TruncatedSeries<R>& s) {
    return invert(s);
}

namespace detail {
inline bool is_one(const Rational& r) { return r == 1; }
template <class R>
bool is_one(const TruncatedSeries<R>& s) {
    return s.degree() == 0 && is_one(s.stored()[0]);
}
} // namespace detail

/// Square root with constant term 1. Throws SingularSeries otherwise.
template <class R>
TruncatedSeries<R> sqrt(const TruncatedSeries<R>& s) {
    if (!detail::is_one(s.coeff(0))) throw SingularSeries("sqrt requires constant term 1");
    if (s.is_exact() && s.degree() > 0)
        throw InvalidInput("sqrt needs a finite truncation order for a non-constant polynomial");
    if (s.is_exact()) return s;
    int order = s.order();
    std::vector<R> b(static_cast<std::size_t>(order) + 1);
    b[0] = s.coeff(0);
    const Rational half(1, 2);
    for (int n = 1; n <= order; ++n) {
        R acc = s.coeff(n);
        for (int i = 1; i < n; ++i)
            acc = acc - b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
        b[static_cast<std::size_t>(n)] = scale(acc, half);
    }
    return {std::move(b), order};
}

/// f(g). The inner series must have zero constant term; the result is known to
/// min(f.order(), g.order()). Coefficients of f are embedded into g's ring.
template <class S, class R>
TruncatedSeries<R> compose(const TruncatedSeries<S>& f, const TruncatedSeries<R>& g) {
    if (!is_zero(g.coeff(0))) throw SingularSeries("compose requires inner constant term 0");
    int order = std::min(f.order(), g.order());
    TruncatedSeries<R> result({}, order);
    if (f.degree() < 0) return result;
    for (int i = f.degree(); i >= 0; --i) {
        result = result * g + TruncatedSeries<R>(R(f.stored()[static_cast<std::size_t>(i)]));
        if (order != kExactOrder) result = result.truncate(order);
    }
    return result.truncate(order);
}

/// s^k, known to the order of s.
template <class R>
TruncatedSeries<R> power(const TruncatedSeries<R>& s, int k) {
    TruncatedSeries<R> r(R(Rational(1)));
    TruncatedSeries<R> base = s;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r.truncate(s.order());
}

/// "1 - 1/2*t - 1/8*t^2". Zero prints as "0".
std::string to_string(const RationalSeries& s, const std::string& var = "t");
/// "(1 - t) + (2*t)*x + ..." with inner series in t.
std::string to_string(const BivariateSeries& s, const std::string& outer = "x", const std::string& inner = "t");

// ---------------------------------------------------------------------------
// Generating-function identities.

/// v = 2 t^{-1} (1 - sqrt(1 - t)) - 1, the series satisfying 4v/(1+v)^2 = t.
/// Throws InvalidInput for order < 1.
RationalSeries v_of_t(int order);

/// 2 sum_{l=1}^{k} C(l+jm-1, l-1) C(jm-1, k-l)
Rational c_coeff(int m, int j, int k);
/// 2 sum_{l=1}^{k} C(l+jm, l-1) C(jm, k-l)
Rational c_prime(int m, int j, int k);
/// 4 sum_{l=1}^{k} C(l+jm-1, l-1) C(jm-2, k-l)
Rational e_coeff(int m, int j, int k);
/// 4 sum_{l=1}^{k} C(l+jm, l-1) C(jm-1, k-l)
Rational e_prime(int m, int j, int k);

/// Largest n accepted by the enumeration-backed polynomials.
inline constexpr int kPolynomialMaxN = 9;

/// sum over pi in S_n avoiding 12...m of t^{ipk(pi)+1}; 1 for n = 0.
/// Throws ResourceLimit for n > kPolynomialMaxN.
RationalSeries ipk_polynomial(int m, int n);
/// sum over pi in S_n avoiding m...21 of t^{ilpk(pi)}.
RationalSeries ilpk_polynomial(int m, int n);

struct SeriesMismatch {
    int x_degree;
    int t_degree;
    Rational lhs;
    Rational rhs;
};

/// First coefficient (by x-degree, then t-degree) where a and b differ, over
/// the range both know.
std::optional<SeriesMismatch> first_mismatch(const BivariateSeries& a, const BivariateSeries& b);

/// Both sides of the ipk generating-function identity, as series in x (to
/// x_order) over series in t (to t_order). The left side is built from
/// enumerated polynomials composed with 4t/(1+t)^2; the right side from c_coeff
/// and c_prime. Require 1 <= t_order <= x_order <= 8 and m >= 2.
BivariateSeries theorem3_lhs(int m, int x_order, int t_order);
BivariateSeries theorem3_rhs(int m, int x_order, int t_order);
std::optional<SeriesMismatch> compare_theorem3(int m, int x_order, int t_order);
bool verify_theorem3(int m, int x_order, int t_order);

/// Same for the ilpk identity with e_coeff and e_prime.
BivariateSeries theorem5_lhs(int m, int x_order, int t_order);
BivariateSeries theorem5_rhs(int m, int x_order, int t_order);
std::optional<SeriesMismatch> compare_theorem5(int m, int x_order, int t_order);
bool verify_theorem5(int m, int x_order, int t_order);

/// sum_{n>=1} P^{ipk}_{12...m,n}(t) x^n obtained from the right side of the ipk
/// identity by x -> x(1-v)/(1+v) and t -> v(t), with no enumeration involved.
BivariateSeries ipk_gf_by_substitution(int m, int x_order, int t_order);
/// sum_{n>=0} P^{ilpk}_{m...21,n}(t) x^n obtained the same way from the ilpk identity.
BivariateSeries ilpk_gf_by_substitution(int m, int x_order, int t_order);

/// [t^1] of each x-coefficient: the series in x of linear t-coefficients.
RationalSeries linear_t_coefficients(const BivariateSeries& s);

/// (1 - x)/(1 - 2x + x^m) to the given order. Throws InvalidInput for m < 2.
RationalSeries ogf_fib(int m, int order);

/// x^2 (x^{m-2} - 1) / ((1-x)^2 (x^{m+1} - 3x^m + 3x - 1)). Throws InvalidInput for m < 3.
RationalSeries ogf_ilpk_general(int m, int order);

} // namespace permfib
