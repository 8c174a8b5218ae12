#include "permfib/series.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "permfib/permutation.hpp"

namespace permfib {

namespace {

std::string monomial_text(const std::string& var, int degree) {
    if (degree == 0) return "";
    if (degree == 1) return var;
    return var + "^" + std::to_string(degree);
}

} // namespace

std::string to_string(const RationalSeries& s, const std::string& var) {
    std::string out;
    auto coeffs = s.stored();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string mono = monomial_text(var, static_cast<int>(i));
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    if (out.empty()) out = "0";
    if (!s.is_exact()) out += " + O(" + monomial_text(var, s.order() + 1) + ")";
    return out;
}

std::string to_string(const BivariateSeries& s, const std::string& outer, const std::string& inner) {
    std::string out;
    auto coeffs = s.stored();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(coeffs[i], inner) + ")";
        if (i > 0) out += "*" + monomial_text(outer, static_cast<int>(i));
    }
    if (out.empty()) out = "0";
    if (!s.is_exact()) out += " + O(" + monomial_text(outer, s.order() + 1) + ")";
    return out;
}

RationalSeries v_of_t(int order) {
    if (order < 1) throw InvalidInput("v_of_t needs order >= 1");
    const RationalSeries one_minus_t({Rational(1), Rational(-1)}, order + 1);
    const RationalSeries numer = RationalSeries(Rational(1)) - sqrt(one_minus_t);
    // numer has zero constant term, so dividing by t is a shift down.
    std::vector<Rational> shifted(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) shifted[static_cast<std::size_t>(i)] = 2 * numer.coeff(i + 1);
    shifted[0] -= 1;
    return {std::move(shifted), order};
}

namespace {

void check_coefficient_indices(int m, int j, int k) {
    if (m < 2 || j < 1 || k < 1) throw InvalidInput("coefficient sums need m >= 2, j >= 1, k >= 1");
}

// scale * sum_{l=1}^{k} C(l + a - 1, l - 1) C(b, k - l)
Rational binomial_sum(int scale, long a, long b, int k) {
    BigInt total = 0;
    for (long l = 1; l <= k; ++l) total += binomial(l + a - 1, l - 1) * binomial(b, k - l);
    return Rational(scale * total);
}

} // namespace

Rational c_coeff(int m, int j, int k) {
    check_coefficient_indices(m, j, k);
    const long jm = static_cast<long>(j) * m;
    return binomial_sum(2, jm, jm - 1, k);
}

Rational c_prime(int m, int j, int k) {
    check_coefficient_indices(m, j, k);
    const long jm = static_cast<long>(j) * m;
    return binomial_sum(2, jm + 1, jm, k);
}

Rational e_coeff(int m, int j, int k) {
    check_coefficient_indices(m, j, k);
    const long jm = static_cast<long>(j) * m;
    return binomial_sum(4, jm, jm - 2, k);
}

Rational e_prime(int m, int j, int k) {
    check_coefficient_indices(m, j, k);
    const long jm = static_cast<long>(j) * m;
    return binomial_sum(4, jm + 1, jm - 1, k);
}

namespace {

enum class PolyKind { Ipk, Ilpk };

RationalSeries enumerate_polynomial(PolyKind kind, int m, int n) {
    if (m < 2) throw InvalidInput("pattern length m must be >= 2");
    if (n < 0) throw InvalidInput("n must be nonnegative");
    if (n > kPolynomialMaxN)
        throw ResourceLimit("polynomials are enumeration-backed up to n = " + std::to_string(kPolynomialMaxN));
    if (n == 0) return RationalSeries(Rational(1));

    static std::mutex mu;
    static std::map<std::tuple<PolyKind, int, int>, RationalSeries> cache;
    const auto key = std::make_tuple(kind, m, n);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const Permutation pattern = kind == PolyKind::Ipk ? increasing_pattern(m) : decreasing_pattern(m);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 2);
    for (const Permutation& p : enumerate_symmetric_group(n, true)) {
        if (contains_consecutive(p, pattern)) continue;
        const int exponent = kind == PolyKind::Ipk ? ipk(p) + 1 : ilpk(p);
        coeffs[static_cast<std::size_t>(exponent)] += 1;
    }
    RationalSeries poly = RationalSeries::polynomial(std::move(coeffs));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, poly);
    return poly;
}

void check_identity_orders(int m, int x_order, int t_order) {
    if (m < 2) throw InvalidInput("identity checks need m >= 2");
    if (t_order < 1 || t_order > x_order || x_order > 8)
        throw InvalidInput("identity checks need 1 <= t_order <= x_order <= 8");
}

// 4t/(1+t)^2 to the given order.
RationalSeries four_t_over_square(int t_order) {
    const RationalSeries one_plus_t({Rational(1), Rational(1)}, t_order);
    return scale(RationalSeries::variable(), Rational(4)) * invert(one_plus_t * one_plus_t);
}

// Inverse of 1 - a x + sum_{j>=1, jm <= x_order} (d(j) x^{jm} - d'(j) x^{jm+1}), to x_order.
template <class D, class DPrime>
RationalSeries inverse_denominator(int m, int x_order, const Rational& a, D d, DPrime d_prime) {
    std::vector<Rational> den(static_cast<std::size_t>(x_order) + 1);
    den[0] = 1;
    if (x_order >= 1) den[1] = -a;
    for (int j = 1; j * m <= x_order; ++j) {
        den[static_cast<std::size_t>(j * m)] += d(j);
        if (j * m + 1 <= x_order) den[static_cast<std::size_t>(j * m + 1)] -= d_prime(j);
    }
    return invert(RationalSeries(std::move(den), x_order));
}

// Inverted denominators of the ipk identity, k = 1..t_order.
std::vector<RationalSeries> ipk_denominators(int m, int x_order, int t_order) {
    std::vector<RationalSeries> out;
    for (int k = 1; k <= t_order; ++k)
        out.push_back(inverse_denominator(
            m, x_order, Rational(2 * k), [&](int j) { return c_coeff(m, j, k); }, [&](int j) { return c_prime(m, j, k); }));
    return out;
}

std::vector<RationalSeries> ilpk_denominators(int m, int x_order, int t_order) {
    std::vector<RationalSeries> out;
    for (int k = 1; k <= t_order; ++k)
        out.push_back(inverse_denominator(
            m, x_order, Rational(2 * k + 1), [&](int j) { return e_coeff(m, j, k); }, [&](int j) { return e_prime(m, j, k); }));
    return out;
}

// sum_k g_k(x) s^k as a bivariate series, where each g_k is in x only and s is a
// series in t with zero constant term.
BivariateSeries sum_over_k(const std::vector<RationalSeries>& g, const RationalSeries& s, int x_order, int t_order) {
    std::vector<RationalSeries> coeffs(static_cast<std::size_t>(x_order) + 1, RationalSeries({}, t_order));
    RationalSeries s_power = RationalSeries(Rational(1)).truncate(t_order);
    for (const auto& gk : g) {
        s_power = s_power * s;
        for (int n = 0; n <= x_order; ++n) {
            const Rational& c = gk.coeff(n);
            if (c != 0) coeffs[static_cast<std::size_t>(n)] += scale(s_power, c);
        }
    }
    return {std::move(coeffs), x_order};
}

// Replaces x^n by (r x)^n in a bivariate series.
BivariateSeries rescale_x(const BivariateSeries& b, const RationalSeries& r) {
    std::vector<RationalSeries> coeffs;
    RationalSeries r_power = RationalSeries(Rational(1)).truncate(r.order());
    for (int n = 0; n <= b.order(); ++n) {
        coeffs.push_back(b.coeff(n) * r_power);
        r_power = r_power * r;
    }
    return {std::move(coeffs), b.order()};
}

BivariateSeries times_scalar(const BivariateSeries& b, const RationalSeries& s) {
    return b * BivariateSeries(s);
}

} // namespace

RationalSeries ipk_polynomial(int m, int n) { return enumerate_polynomial(PolyKind::Ipk, m, n); }
RationalSeries ilpk_polynomial(int m, int n) { return enumerate_polynomial(PolyKind::Ilpk, m, n); }

std::optional<SeriesMismatch> first_mismatch(const BivariateSeries& a, const BivariateSeries& b) {
    const int x_limit = std::min(a.order(), b.order()) == kExactOrder ? std::max(a.degree(), b.degree())
                                                                      : std::min(a.order(), b.order());
    for (int n = 0; n <= x_limit; ++n) {
        const RationalSeries ca = a.coeff(n), cb = b.coeff(n);
        const int t_limit = std::min(ca.order(), cb.order()) == kExactOrder ? std::max(ca.degree(), cb.degree())
                                                                            : std::min(ca.order(), cb.order());
        for (int k = 0; k <= t_limit; ++k)
            if (ca.coeff(k) != cb.coeff(k)) return SeriesMismatch{n, k, ca.coeff(k), cb.coeff(k)};
    }
    return std::nullopt;
}

BivariateSeries theorem3_lhs(int m, int x_order, int t_order) {
    check_identity_orders(m, x_order, t_order);
    const RationalSeries one_minus_t({Rational(1), Rational(-1)}, t_order);
    const RationalSeries one_plus_t({Rational(1), Rational(1)}, t_order);
    const RationalSeries ratio = one_plus_t * invert(one_minus_t);
    const RationalSeries u = four_t_over_square(t_order);

    std::vector<RationalSeries> coeffs{invert(one_minus_t)};
    RationalSeries ratio_power = ratio;
    for (int n = 1; n <= x_order; ++n) {
        ratio_power = ratio_power * ratio;
        coeffs.push_back(scale(ratio_power * compose(ipk_polynomial(m, n), u), Rational(1, 2)));
    }
    return {std::move(coeffs), x_order};
}

BivariateSeries theorem3_rhs(int m, int x_order, int t_order) {
    check_identity_orders(m, x_order, t_order);
    const RationalSeries t = RationalSeries::variable().truncate(t_order);
    BivariateSeries sum = sum_over_k(ipk_denominators(m, x_order, t_order), t, x_order, t_order);
    return sum + BivariateSeries(RationalSeries(Rational(1)));
}

std::optional<SeriesMismatch> compare_theorem3(int m, int x_order, int t_order) {
    return first_mismatch(theorem3_lhs(m, x_order, t_order), theorem3_rhs(m, x_order, t_order));
}

bool verify_theorem3(int m, int x_order, int t_order) { return !compare_theorem3(m, x_order, t_order); }

BivariateSeries theorem5_lhs(int m, int x_order, int t_order) {
    check_identity_orders(m, x_order, t_order);
    const RationalSeries one_minus_t({Rational(1), Rational(-1)}, t_order);
    const RationalSeries one_plus_t({Rational(1), Rational(1)}, t_order);
    const RationalSeries ratio = one_plus_t * invert(one_minus_t);
    const RationalSeries u = four_t_over_square(t_order);

    std::vector<RationalSeries> coeffs;
    RationalSeries factor = invert(one_minus_t); // (1+t)^n / (1-t)^{n+1}
    for (int n = 0; n <= x_order; ++n) {
        coeffs.push_back(factor * compose(ilpk_polynomial(m, n), u));
        factor = factor * ratio;
    }
    return {std::move(coeffs), x_order};
}

BivariateSeries theorem5_rhs(int m, int x_order, int t_order) {
    check_identity_orders(m, x_order, t_order);
    const RationalSeries t = RationalSeries::variable().truncate(t_order);
    BivariateSeries sum = sum_over_k(ilpk_denominators(m, x_order, t_order), t, x_order, t_order);
    std::vector<RationalSeries> geometric(static_cast<std::size_t>(x_order) + 1, RationalSeries(Rational(1)));
    return sum + BivariateSeries(std::move(geometric), x_order);
}

std::optional<SeriesMismatch> compare_theorem5(int m, int x_order, int t_order) {
    return first_mismatch(theorem5_lhs(m, x_order, t_order), theorem5_rhs(m, x_order, t_order));
}

bool verify_theorem5(int m, int x_order, int t_order) { return !compare_theorem5(m, x_order, t_order); }

namespace {

void check_substitution_orders(int m, int x_order, int t_order) {
    if (m < 2) throw InvalidInput("substitution needs m >= 2");
    if (x_order < 1 || t_order < 1) throw InvalidInput("substitution needs x_order >= 1 and t_order >= 1");
}

} // namespace

BivariateSeries ipk_gf_by_substitution(int m, int x_order, int t_order) {
    check_substitution_orders(m, x_order, t_order);
    const RationalSeries v = v_of_t(t_order);
    const RationalSeries one(Rational(1));
    const RationalSeries inv_one_plus_v = invert(one + v);
    const RationalSeries r = (one - v) * inv_one_plus_v;

    // R(y, v) with y = x (1-v)/(1+v).
    BivariateSeries R = rescale_x(sum_over_k(ipk_denominators(m, x_order, t_order), v, x_order, t_order), r) +
                        BivariateSeries(one);
    BivariateSeries inner = times_scalar(R, one - v) - BivariateSeries(one);
    return times_scalar(inner, scale(inv_one_plus_v, Rational(2)));
}

BivariateSeries ilpk_gf_by_substitution(int m, int x_order, int t_order) {
    check_substitution_orders(m, x_order, t_order);
    const RationalSeries v = v_of_t(t_order);
    const RationalSeries one(Rational(1));
    const RationalSeries r = (one - v) * invert(one + v);

    std::vector<RationalSeries> geometric(static_cast<std::size_t>(x_order) + 1, one);
    BivariateSeries R = sum_over_k(ilpk_denominators(m, x_order, t_order), v, x_order, t_order) +
                        BivariateSeries(std::move(geometric), x_order);
    return times_scalar(rescale_x(R, r), one - v);
}

RationalSeries linear_t_coefficients(const BivariateSeries& s) {
    if (s.is_exact()) throw InvalidInput("linear_t_coefficients needs a truncated series");
    std::vector<Rational> out;
    for (int n = 0; n <= s.order(); ++n) {
        const RationalSeries c = s.coeff(n);
        out.push_back(c.order() >= 1 ? c.coeff(1) : Rational(0));
    }
    return {std::move(out), s.order()};
}

RationalSeries ogf_fib(int m, int order) {
    if (m < 2) throw InvalidInput("ogf_fib needs m >= 2");
    if (order < 0) throw InvalidInput("order must be nonnegative");
    std::vector<Rational> den(static_cast<std::size_t>(m) + 1);
    den[0] = 1;
    den[1] -= 2;
    den[static_cast<std::size_t>(m)] += 1;
    const RationalSeries numer = RationalSeries::polynomial({Rational(1), Rational(-1)});
    return (numer * invert(RationalSeries(std::move(den), order))).truncate(order);
}

RationalSeries ogf_ilpk_general(int m, int order) {
    if (m < 3) throw InvalidInput("ogf_ilpk_general needs m >= 3");
    if (order < 0) throw InvalidInput("order must be nonnegative");
    const auto mono = [](long c, int d) { return RationalSeries::monomial(Rational(c), d); };
    const RationalSeries numer = mono(1, m) - mono(1, 2); // x^2 (x^{m-2} - 1)
    const RationalSeries one_minus_x = mono(1, 0) - mono(1, 1);
    const RationalSeries cubic = mono(1, m + 1) - mono(3, m) + mono(3, 1) - mono(1, 0);
    const RationalSeries den = (one_minus_x * one_minus_x * cubic).truncate(order);
    return (numer * invert(den)).truncate(order);
}

} // namespace permfib
