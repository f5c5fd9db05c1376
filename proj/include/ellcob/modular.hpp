#ifndef ELLCOB_MODULAR_HPP
#define ELLCOB_MODULAR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ellcob/rational.hpp>
#include <ellcob/series.hpp>

// q-expansions. Every QSeries here is a series in nu = q^(1/2) and every
// `nu_order` argument is a truncation bound in nu-units (nu_order = 2N keeps
// all terms below q^N).

namespace ellcob
{

using QRational = QSeries<Rational>;

// A q-expansion q^(e/8) * body with body(0) != 0.
class ThetaConstant
{
public:
    ThetaConstant(int prefactor_eighths, QRational body) : eighths_(prefactor_eighths), body_(std::move(body))
    {
        if (body_.order() == 0 || body_.stored() == 0 || body_.coefficients()[0].is_zero()) {
            throw std::domain_error("theta constant body must have a nonzero constant term");
        }
    }

    int prefactor_eighths() const
    {
        return eighths_;
    }
    const QRational &body() const
    {
        return body_;
    }

    friend ThetaConstant operator*(const ThetaConstant &a, const ThetaConstant &b)
    {
        return ThetaConstant(a.eighths_ + b.eighths_, a.body_ * b.body_);
    }
    friend ThetaConstant operator/(const ThetaConstant &a, const ThetaConstant &b)
    {
        return ThetaConstant(a.eighths_ - b.eighths_, a.body_ * invert(b.body_));
    }
    ThetaConstant pow(unsigned n) const
    {
        QRational b = QRational::one(body_.order());
        for (unsigned i = 0; i < n; ++i) {
            b = b * body_;
        }
        return ThetaConstant(eighths_ * static_cast<int>(n), b);
    }

    // Plain nu-series; legal only when the prefactor is a power of nu.
    QRational to_qseries() const
    {
        if (eighths_ % 4 != 0) {
            throw std::domain_error("q^(" + std::to_string(eighths_)
                                    + "/8) prefactor does not resolve to an integral power of q^(1/2)");
        }
        if (eighths_ < 0) {
            throw std::domain_error("negative q-power prefactor cannot be exported as a power series");
        }
        return shift_up(body_, static_cast<std::size_t>(eighths_ / 4));
    }

private:
    int eighths_;
    QRational body_;
};

enum class ThetaKind {
    theta,       // vanishes at v = 0
    theta1,      // 2 q^(1/8) prod (1 - q^j)(1 + q^j)^2
    theta2,      // prod (1 - q^j)(1 - q^(j-1/2))^2
    theta3,      // prod (1 - q^j)(1 + q^(j-1/2))^2
    theta_prime, // v-derivative of theta at 0, in units of pi: 2 q^(1/8) prod (1 - q^j)^3
};

namespace detail
{

// Multiplies s in place by (1 + c nu^e)^power.
inline QRational mul_binomial(const QRational &s, const Rational &c, std::size_t e, int power = 1)
{
    const auto factor = QRational({Rational(1)}, exact_order) + QRational::monomial(c, e);
    QRational r = s;
    for (int i = 0; i < power; ++i) {
        r = r * factor;
    }
    return r;
}

// Smallest factor count j for which every omitted factor j' > j is 1 modulo nu^nu_order.
inline std::size_t needed_theta_factors(ThetaKind kind, std::size_t nu_order)
{
    const bool half = kind == ThetaKind::theta2 || kind == ThetaKind::theta3;
    // factor j differs from 1 first at nu^(2j-1) (half-integral) or nu^(2j)
    std::size_t j = 0;
    while ((half ? 2 * (j + 1) - 1 : 2 * (j + 1)) < nu_order) {
        ++j;
    }
    return j;
}

} // namespace detail

// Value at v = 0 of one of the four theta functions (or of the derivative
// of theta), as a product over j = 1..n_factors truncated below nu^nu_order.
inline ThetaConstant theta_constant(ThetaKind kind, std::size_t nu_order, std::optional<std::size_t> n_factors = {})
{
    if (kind == ThetaKind::theta) {
        throw std::domain_error("theta(0, tau) vanishes identically; use theta_prime for its linear term");
    }
    const std::size_t need = detail::needed_theta_factors(kind, nu_order);
    const std::size_t factors = n_factors.value_or(need);
    if (factors < need) {
        throw std::invalid_argument("theta product with " + std::to_string(factors)
                                    + " factors cannot determine coefficients below nu^" + std::to_string(nu_order));
    }
    QRational body = QRational::one(nu_order);
    int eighths = 0;
    for (std::size_t j = 1; j <= factors; ++j) {
        switch (kind) {
        case ThetaKind::theta1:
            body = detail::mul_binomial(body, Rational(-1), 2 * j);
            body = detail::mul_binomial(body, Rational(1), 2 * j, 2);
            break;
        case ThetaKind::theta2:
            body = detail::mul_binomial(body, Rational(-1), 2 * j);
            body = detail::mul_binomial(body, Rational(-1), 2 * j - 1, 2);
            break;
        case ThetaKind::theta3:
            body = detail::mul_binomial(body, Rational(-1), 2 * j);
            body = detail::mul_binomial(body, Rational(1), 2 * j - 1, 2);
            break;
        case ThetaKind::theta_prime:
            body = detail::mul_binomial(body, Rational(-1), 2 * j, 3);
            break;
        case ThetaKind::theta:
            break;
        }
    }
    if (kind == ThetaKind::theta1 || kind == ThetaKind::theta_prime) {
        body = body * Rational(2);
        eighths = 1;
    }
    return ThetaConstant(eighths, body);
}

// delta_1 = (theta_2^4 + theta_3^4) / 8
inline QRational delta1(std::size_t nu_order)
{
    const auto t2 = theta_constant(ThetaKind::theta2, nu_order).pow(4);
    const auto t3 = theta_constant(ThetaKind::theta3, nu_order).pow(4);
    return (t2.to_qseries() + t3.to_qseries()) * Rational(1, 8);
}

// eps_1 = theta_2^4 theta_3^4 / 16
inline QRational eps1(std::size_t nu_order)
{
    const auto t2 = theta_constant(ThetaKind::theta2, nu_order).pow(4);
    const auto t3 = theta_constant(ThetaKind::theta3, nu_order).pow(4);
    return (t2 * t3).to_qseries() * Rational(1, 16);
}

// delta_2 = -(theta_1^4 + theta_3^4) / 8
inline QRational delta2(std::size_t nu_order)
{
    const auto t1 = theta_constant(ThetaKind::theta1, nu_order).pow(4);
    const auto t3 = theta_constant(ThetaKind::theta3, nu_order).pow(4);
    return (t1.to_qseries().truncated(nu_order) + t3.to_qseries()) * Rational(-1, 8);
}

// eps_2 = theta_1^4 theta_3^4 / 16
inline QRational eps2(std::size_t nu_order)
{
    const auto t1 = theta_constant(ThetaKind::theta1, nu_order).pow(4);
    const auto t3 = theta_constant(ThetaKind::theta3, nu_order).pow(4);
    return (t1 * t3).to_qseries().truncated(nu_order) * Rational(1, 16);
}

enum class ModularParameter { delta1, eps1, delta2, eps2 };

// The same four series from their divisor-sum expansions.
inline QRational divisor_sum_oracle(ModularParameter which, std::size_t nu_order)
{
    std::vector<Rational> c(nu_order);
    auto odd_divisor_sum = [](long n) {
        long s = 0;
        for (long d = 1; d <= n; d += 2) {
            if (n % d == 0) {
                s += d;
            }
        }
        return s;
    };
    switch (which) {
    case ModularParameter::delta1:
        if (nu_order > 0) {
            c[0] = Rational(1, 4);
        }
        for (std::size_t i = 2; i < nu_order; i += 2) {
            c[i] = Rational(6 * odd_divisor_sum(static_cast<long>(i / 2)));
        }
        break;
    case ModularParameter::eps1:
        if (nu_order > 0) {
            c[0] = Rational(1, 16);
        }
        for (std::size_t i = 2; i < nu_order; i += 2) {
            const long n = static_cast<long>(i / 2);
            Integer s(0);
            for (long d = 1; d <= n; ++d) {
                if (n % d == 0) {
                    s += (d % 2 == 0 ? 1 : -1) * ipow(d, 3);
                }
            }
            c[i] = Rational(s);
        }
        break;
    case ModularParameter::delta2:
        if (nu_order > 0) {
            c[0] = Rational(-1, 8);
        }
        for (std::size_t i = 1; i < nu_order; ++i) {
            c[i] = Rational(-3 * odd_divisor_sum(static_cast<long>(i)));
        }
        break;
    case ModularParameter::eps2:
        for (std::size_t i = 1; i < nu_order; ++i) {
            const long n = static_cast<long>(i);
            Integer s(0);
            for (long d = 1; d <= n; ++d) {
                if (n % d == 0 && (n / d) % 2 == 1) {
                    s += ipow(d, 3);
                }
            }
            c[i] = Rational(s);
        }
        break;
    }
    return QRational(std::move(c), nu_order);
}

// E_4 = 1 + 240 sum sigma_3(n) q^n
inline QRational e4(std::size_t nu_order)
{
    std::vector<Rational> c(nu_order);
    if (nu_order > 0) {
        c[0] = Rational(1);
    }
    for (std::size_t i = 2; i < nu_order; i += 2) {
        const long n = static_cast<long>(i / 2);
        Integer s(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0) {
                s += ipow(d, 3);
            }
        }
        c[i] = Rational(Integer(240) * s);
    }
    return QRational(std::move(c), nu_order);
}

// Delta = q prod (1 - q^n)^24
inline QRational discriminant(std::size_t nu_order)
{
    QRational body = QRational::one(nu_order);
    for (std::size_t n = 1; 2 * n < nu_order; ++n) {
        body = detail::mul_binomial(body, Rational(-1), 2 * n, 24);
    }
    return shift_up(body, 2).truncated(nu_order);
}

// E_4^3 - 744 Delta
inline QRational delta_bar(std::size_t nu_order)
{
    const auto e = e4(nu_order);
    return e * e * e - discriminant(nu_order) * Rational(744);
}

// Odd solution F(z) = z + O(z^3) of (F')^2 = 1 - 2 delta_i F^2 + eps_i F^4,
// a series in z whose coefficients are nu-series.
struct JacobiSolution {
    int kind;
    ZSeries<QRational> series;
};

namespace detail
{

using Bivariate = ZSeries<QRational>;

inline QRational q_const(const Rational &c, std::size_t nu_order)
{
    return QRational::constant(c, nu_order);
}

// sum_n (scale^{2n+parity} / (2n+parity)!) z^{2n+parity} lifted to nu-series.
inline Bivariate hyperbolic(bool odd, const Rational &scale, std::size_t z_order, std::size_t nu_order)
{
    std::vector<QRational> c(z_order, QRational(nu_order));
    for (std::size_t n = odd ? 1 : 0; n < z_order; n += 2) {
        c[n] = q_const(pow(scale, static_cast<int>(n)) / Rational(factorial(n)), nu_order);
    }
    return Bivariate(std::move(c), z_order, odd ? Parity::odd : Parity::even);
}

// 1 + 2 sign cosh(z) nu^e + nu^{2e} = (1 + sign e^z nu^e)(1 + sign e^{-z} nu^e)
inline Bivariate exp_pair_factor(int sign, std::size_t e, std::size_t z_order, std::size_t nu_order)
{
    const Bivariate ch = hyperbolic(false, Rational(1), z_order, nu_order);
    auto nu_e = QRational::monomial(Rational(2 * sign), e, nu_order);
    auto r = ch.scaled(nu_e);
    auto constant = QRational::one(nu_order) + QRational::monomial(Rational(1), 2 * e, nu_order);
    return r + Bivariate::constant(constant, z_order);
}

// (1 + c nu^e)^2 as a z-constant.
inline Bivariate q_binomial_sq(const Rational &c, std::size_t e, std::size_t z_order, std::size_t nu_order)
{
    const auto b = QRational::one(nu_order) + QRational::monomial(c, e, nu_order);
    return Bivariate::constant(b * b, z_order);
}

} // namespace detail

// Builds F_1 or F_2 in the internal variable z = 2 pi i v, where the theta
// quotients become
//   F_1 = 2 tanh(z/2) prod_j (1 - e^z q^j)(1 - e^-z q^j)(1 + q^j)^2
//                          / ((1 - q^j)^2 (1 + e^z q^j)(1 + e^-z q^j)),
//   F_2 = 2 sinh(z/2) prod_j (1 - e^z q^j)(1 - e^-z q^j) / (1 - q^j)^2
//                   * prod_j (1 - q^(j-1/2))^2 / ((1 - e^z q^(j-1/2))(1 - e^-z q^(j-1/2))).
inline JacobiSolution jacobi_solution(int kind, std::size_t z_order, std::size_t nu_order)
{
    if (kind != 1 && kind != 2) {
        throw std::invalid_argument("Jacobi solution kind must be 1 or 2");
    }
    if (z_order < 3 || nu_order < 1) {
        throw std::invalid_argument("jacobi_solution needs z_order >= 3 and nu_order >= 1");
    }
    using detail::Bivariate;
    Bivariate num = detail::hyperbolic(true, Rational(1, 2), z_order, nu_order) * Rational(2);
    Bivariate den = Bivariate::one(z_order);
    if (kind == 1) {
        den = detail::hyperbolic(false, Rational(1, 2), z_order, nu_order);
    }
    for (std::size_t j = 1; 2 * j < nu_order; ++j) {
        num = num * detail::exp_pair_factor(-1, 2 * j, z_order, nu_order);
        den = den * detail::q_binomial_sq(Rational(-1), 2 * j, z_order, nu_order);
        if (kind == 1) {
            num = num * detail::q_binomial_sq(Rational(1), 2 * j, z_order, nu_order);
            den = den * detail::exp_pair_factor(1, 2 * j, z_order, nu_order);
        }
    }
    if (kind == 2) {
        for (std::size_t j = 1; 2 * j - 1 < nu_order; ++j) {
            num = num * detail::q_binomial_sq(Rational(-1), 2 * j - 1, z_order, nu_order);
            den = den * detail::exp_pair_factor(-1, 2 * j - 1, z_order, nu_order);
        }
    }
    auto f = (num * invert(den)).truncated(z_order).with_parity(Parity::odd);
    return JacobiSolution{kind, std::move(f)};
}

// (F')^2 - (1 - 2 delta F^2 + eps F^4); identically zero for a genuine solution.
inline ZSeries<QRational> jacobi_quartic_residual(const ZSeries<QRational> &f, const QRational &delta,
                                                  const QRational &eps)
{
    using B = ZSeries<QRational>;
    const B fp = derivative(f);
    const B f2 = f * f;
    const B rhs = B::one() - f2.scaled(delta * Rational(2)) + (f2 * f2).scaled(eps);
    return fp * fp - rhs;
}

} // namespace ellcob

#endif
