#ifndef ELLCOB_TWIST_HPP
#define ELLCOB_TWIST_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <ellcob/genus.hpp>
#include <ellcob/modular.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/series.hpp>
#include <ellcob/weighted_poly.hpp>

// Characteristic classes of bundles built from the complexified tangent
// bundle of a 4k-manifold. Classes are polynomials in the power sums
// ps_j = sum_i z_i^{2j} of the 2k formal roots (internal normalisation: the
// roots absorb the factor 2 pi i), truncated above weight k, i.e. degree 4k.

namespace ellcob
{

using CharClass = WeightedPoly<Rational>;

// ch(T_C M) = sum_i (e^{z_i} + e^{-z_i}) = 4k + sum_{j>=1} 2/(2j)! ps_j.
inline CharClass ch_tangent(int k)
{
    auto c = CharClass::constant(Rational(4 * k), k);
    for (int j = 1; j <= k; ++j) {
        c.add_term(Partition{j}, Rational(2) / Rational(factorial(static_cast<unsigned long>(2 * j))));
    }
    return c;
}

// ch(psi^m E)(z) = ch(E)(m z), i.e. ps_j -> m^{2j} ps_j.
inline CharClass adams(const CharClass &c, int m)
{
    if (m < 1) {
        throw std::invalid_argument("Adams operation index must be positive");
    }
    CharClass r(c.cap());
    for (const auto &[mono, coef] : c.terms()) {
        r.add_term(mono, coef * Rational(ipow(m, static_cast<unsigned long>(2 * mono.weight()))));
    }
    return r;
}

namespace detail
{

// exp(sum_{m>=1} sign(m) t^m ch(psi^m E) / m), t-series below t^t_order.
inline TSeries<CharClass> adams_exponential(const CharClass &base, std::size_t t_order, bool alternating)
{
    std::vector<CharClass> log_terms(t_order, CharClass(base.cap()));
    for (std::size_t m = 1; m < t_order; ++m) {
        Rational s(1, static_cast<long>(m));
        if (alternating && m % 2 == 0) {
            s = -s;
        }
        log_terms[m] = adams(base, static_cast<int>(m)) * s;
    }
    return exp(TSeries<CharClass>(std::move(log_terms), t_order));
}

} // namespace detail

// ch S_t(E) = sum_n t^n ch(S^n E)
inline TSeries<CharClass> ch_s_t(const CharClass &base, std::size_t t_order)
{
    return detail::adams_exponential(base, t_order, false);
}

// ch Lambda_t(E) = sum_n t^n ch(Lambda^n E)
inline TSeries<CharClass> ch_lambda_t(const CharClass &base, std::size_t t_order)
{
    return detail::adams_exponential(base, t_order, true);
}

// ch Lambda^2(T_C M)
inline CharClass ch_lambda2_tangent(int k)
{
    return ch_lambda_t(ch_tangent(k), 3).coeff(2);
}

// Chern character of a Witten bundle as a nu-series of classes.
struct WittenBundleCh {
    int kind;
    QSeries<CharClass> series;
};

// Theta_1 = (x)_{n>=1} S_{q^n}(E) (x) (x)_{m>=1} Lambda_{q^m}(E),
// Theta_2 = (x)_{n>=1} S_{q^n}(E) (x) (x)_{m>=1} Lambda_{-q^{m-1/2}}(E),
// with E = T_C M - C^{4k}, expanded below nu^nu_order.
inline WittenBundleCh witten_bundle_ch(int kind, int k, std::size_t nu_order)
{
    if (kind != 1 && kind != 2) {
        throw std::invalid_argument("Witten bundle kind must be 1 or 2");
    }
    if (nu_order == 0) {
        throw std::invalid_argument("Witten bundle needs nu_order >= 1");
    }
    const CharClass reduced = ch_tangent(k) - CharClass::constant(Rational(4 * k), k);
    auto one = CharClass::constant(Rational(1), k);
    QSeries<CharClass> total = QSeries<CharClass>::constant(one, nu_order);

    // t -> c nu^e needs t-terms with n e < nu_order
    auto factor = [&](bool exterior, const Rational &c, std::size_t e) {
        const std::size_t t_order = (nu_order + e - 1) / e;
        const auto ts = exterior ? ch_lambda_t(reduced, t_order) : ch_s_t(reduced, t_order);
        return substitute_monomial<nu_variable>(ts, c, e, nu_order);
    };
    for (std::size_t n = 1; 2 * n < nu_order; ++n) {
        total = total * factor(false, Rational(1), 2 * n);
        if (kind == 1) {
            total = total * factor(true, Rational(1), 2 * n);
        }
    }
    if (kind == 2) {
        for (std::size_t m = 1; 2 * m - 1 < nu_order; ++m) {
            total = total * factor(true, Rational(-1), 2 * m - 1);
        }
    }
    return WittenBundleCh{kind, total.truncated(nu_order)};
}

namespace detail
{

// exp(sum_j b_j ps_j) for the multiplicative series Q, times a constant.
inline CharClass rational_multiplicative_class(const ZSeries<Rational> &q, int k)
{
    return multiplicative_class(CharSeries<Rational>(q), k);
}

// sinh(z/2) / (z/2)
inline ZSeries<Rational> sinhc_half(std::size_t order)
{
    std::vector<Rational> c(order);
    for (std::size_t n = 0; n < order; n += 2) {
        c[n] = pow(Rational(1, 2), static_cast<int>(n)) / Rational(factorial(n + 1));
    }
    return ZSeries<Rational>(std::move(c), order, Parity::even);
}

inline ZSeries<Rational> cosh_half(std::size_t order)
{
    std::vector<Rational> c(order);
    for (std::size_t n = 0; n < order; n += 2) {
        c[n] = pow(Rational(1, 2), static_cast<int>(n)) / Rational(factorial(n));
    }
    return ZSeries<Rational>(std::move(c), order, Parity::even);
}

} // namespace detail

// A-hat class: prod_i (z_i/2) / sinh(z_i/2).
inline CharClass a_hat_class(int k)
{
    const std::size_t order = static_cast<std::size_t>(2 * k + 2);
    return detail::rational_multiplicative_class(invert(detail::sinhc_half(order)), k);
}

// L-hat class: prod_i z_i / tanh(z_i/2) = 2^{2k} prod_i (z_i/2) / tanh(z_i/2).
inline CharClass l_hat_class(int k)
{
    const std::size_t order = static_cast<std::size_t>(2 * k + 2);
    const auto q = detail::cosh_half(order) * invert(detail::sinhc_half(order));
    return detail::rational_multiplicative_class(q, k) * Rational(ipow(2, static_cast<unsigned long>(2 * k)));
}

enum class IndexClass { a_hat, l_hat };

inline CharClass index_class(IndexClass cls, int k)
{
    return cls == IndexClass::a_hat ? a_hat_class(k) : l_hat_class(k);
}

// The functional v -> <cls * ch(E), [M]> as a genus polynomial.
inline GenusPolynomial<Rational> twisted_genus_polynomial(IndexClass cls, const CharClass &twist, int k)
{
    return to_pontryagin_basis(index_class(cls, k) * twist.with_cap(k), k);
}

inline Rational twisted_genus(IndexClass cls, const CharClass &twist, const PontryaginVector &v)
{
    return evaluate_genus(twisted_genus_polynomial(cls, twist, v.k()), v);
}

// nu-series of genus polynomials, one per coefficient of the Witten bundle.
inline GenusPolynomial<QRational> twisted_genus_polynomial(IndexClass cls, const WittenBundleCh &twist, int k)
{
    const auto base = index_class(cls, k);
    const std::size_t order = twist.series.order();
    std::vector<GenusPolynomial<Rational>> per_power;
    for (std::size_t i = 0; i < order; ++i) {
        per_power.push_back(to_pontryagin_basis(base * twist.series.coeff(i).with_cap(k), k));
    }
    GenusPolynomial<QRational>::coefficient_map out;
    for (const auto &p : partitions(k)) {
        std::vector<Rational> c;
        for (const auto &g : per_power) {
            c.push_back(g[p]);
        }
        out.emplace(p, QRational(std::move(c), order));
    }
    return GenusPolynomial<QRational>(k, std::move(out));
}

inline QRational twisted_genus(IndexClass cls, const WittenBundleCh &twist, const PontryaginVector &v)
{
    return evaluate_genus(twisted_genus_polynomial(cls, twist, v.k()), v);
}

// Ell_1 = <L-hat ch Theta_1, [M]> and Ell_2 = <A-hat ch Theta_2, [M]>.
inline GenusPolynomial<QRational> ell_polynomial(int kind, int k, std::size_t nu_order)
{
    const auto bundle = witten_bundle_ch(kind, k, nu_order);
    return twisted_genus_polynomial(kind == 1 ? IndexClass::l_hat : IndexClass::a_hat, bundle, k);
}

inline QRational ell1(const PontryaginVector &v, std::size_t nu_order)
{
    return evaluate_genus(ell_polynomial(1, v.k(), nu_order), v);
}

inline QRational ell2(const PontryaginVector &v, std::size_t nu_order)
{
    return evaluate_genus(ell_polynomial(2, v.k(), nu_order), v);
}

// The classical indices entering the dimension-24 formulas.
struct TwistedIndices {
    Rational ahat;         // A-hat(M)
    Rational ahat_t;       // A-hat(M, T)
    Rational ahat_lambda2; // A-hat(M, Lambda^2)
    Rational sig;          // Sig(M)
    Rational sig_t;        // Sig(M, T)
};

inline TwistedIndices twisted_indices(const PontryaginVector &v)
{
    const int k = v.k();
    const auto one = CharClass::constant(Rational(1), k);
    const auto t = ch_tangent(k);
    return TwistedIndices{
        twisted_genus(IndexClass::a_hat, one, v),
        twisted_genus(IndexClass::a_hat, t, v),
        twisted_genus(IndexClass::a_hat, ch_lambda2_tangent(k), v),
        twisted_genus(IndexClass::l_hat, one, v),
        twisted_genus(IndexClass::l_hat, t, v),
    };
}

} // namespace ellcob

#endif
