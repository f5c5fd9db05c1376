#ifndef ELLCOB_SERIES_HPP
#define ELLCOB_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ellcob/rational.hpp>
#include <ellcob/ring.hpp>

namespace ellcob
{

// Truncation order of a series that is known exactly (a polynomial).
inline constexpr std::size_t exact_order = std::numeric_limits<std::size_t>::max();

namespace detail
{

inline std::size_t sat_add(std::size_t a, std::size_t b)
{
    if (a == exact_order || b == exact_order || a > exact_order - b) {
        return exact_order;
    }
    return a + b;
}

inline std::size_t sat_mul(std::size_t a, std::size_t b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    if (a == exact_order || b == exact_order || a > exact_order / b) {
        return exact_order;
    }
    return a * b;
}

} // namespace detail

enum class Parity { none, even, odd };

// Variable tags. The q-variable is nu = q^(1/2): index n stands for q^(n/2).
struct nu_variable {
    static constexpr const char *name = "nu";
};
struct z_variable {
    static constexpr const char *name = "z";
};
struct t_variable {
    static constexpr const char *name = "t";
};

// Truncated power series sum_{n < order} c_n x^n over a coefficient ring.
// Coefficients with index >= order are unknown; exact_order marks a
// polynomial. Stored coefficients past the last nonzero one are trimmed.
template <CoefficientRing R, typename Var>
class TruncatedSeries
{
public:
    using coefficient_type = R;
    using variable = Var;

    // Exact zero.
    TruncatedSeries() = default;

    // Zero known to the given order.
    explicit TruncatedSeries(std::size_t order) : order_(order) {}

    TruncatedSeries(std::vector<R> coeffs, std::size_t order, Parity parity = Parity::none)
        : coeffs_(std::move(coeffs)), order_(order), parity_(parity)
    {
        normalise();
    }

    static TruncatedSeries constant(R c, std::size_t order = exact_order)
    {
        return TruncatedSeries(std::vector<R>{std::move(c)}, order);
    }

    static TruncatedSeries monomial(R c, std::size_t exponent, std::size_t order = exact_order)
    {
        std::vector<R> v(exponent + 1, ring_traits<R>::zero());
        v[exponent] = std::move(c);
        return TruncatedSeries(std::move(v), order);
    }

    // The series variable x itself.
    static TruncatedSeries variable_x(std::size_t order = exact_order)
    {
        return monomial(ring_traits<R>::one(), 1, order);
    }

    static TruncatedSeries one(std::size_t order = exact_order)
    {
        return constant(ring_traits<R>::one(), order);
    }

    std::size_t order() const
    {
        return order_;
    }
    bool is_exact() const
    {
        return order_ == exact_order;
    }
    Parity parity() const
    {
        return parity_;
    }

    // Number of stored coefficients; indices at or beyond are zero (if < order).
    std::size_t stored() const
    {
        return coeffs_.size();
    }
    const std::vector<R> &coefficients() const
    {
        return coeffs_;
    }

    R coeff(std::size_t n) const
    {
        if (n >= order_) {
            throw std::out_of_range("coefficient " + std::to_string(n) + " is beyond the truncation order "
                                    + std::to_string(order_));
        }
        return n < coeffs_.size() ? coeffs_[n] : ring_traits<R>::zero();
    }

    // Index of the first nonzero coefficient; order() if there is none.
    std::size_t valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ring_traits<R>::is_zero(coeffs_[i])) {
                return i;
            }
        }
        return order_;
    }

    bool is_zero() const
    {
        return coeffs_.empty();
    }

    TruncatedSeries truncated(std::size_t order) const
    {
        auto r = *this;
        r.order_ = std::min(order_, order);
        r.normalise();
        return r;
    }

    // Imposes a parity; coefficients of the other parity are forced to zero.
    TruncatedSeries with_parity(Parity p) const
    {
        auto r = *this;
        r.parity_ = p;
        r.normalise();
        return r;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        parity_ = parity_ == o.parity_ ? parity_ : Parity::none;
        normalise();
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        return *this += -o;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    friend TruncatedSeries operator-(const TruncatedSeries &a)
    {
        auto r = a;
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t order
            = std::min(detail::sat_add(a.order_, b.valuation()), detail::sat_add(b.order_, a.valuation()));
        TruncatedSeries r(order);
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            return r;
        }
        const std::size_t limit = std::min(order, a.coeffs_.size() + b.coeffs_.size() - 1);
        std::vector<R> out(limit, ring_traits<R>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size() && i < limit; ++i) {
            if (ring_traits<R>::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < limit; ++j) {
                if (ring_traits<R>::is_zero(b.coeffs_[j])) {
                    continue;
                }
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.coeffs_ = std::move(out);
        r.parity_ = product_parity(a.parity_, b.parity_);
        r.normalise();
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const Rational &s)
    {
        auto r = a;
        for (auto &c : r.coeffs_) {
            c = c * s;
        }
        r.normalise();
        return r;
    }

    TruncatedSeries &operator*=(const TruncatedSeries &o)
    {
        return *this = *this * o;
    }

    // Multiplies every coefficient by a ring element.
    TruncatedSeries scaled(const R &s) const
    {
        auto r = *this;
        for (auto &c : r.coeffs_) {
            c = c * s;
        }
        r.normalise();
        return r;
    }

    // Agreement up to the common valid order.
    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t n = std::min({a.order_, b.order_, std::max(a.coeffs_.size(), b.coeffs_.size())});
        for (std::size_t i = 0; i < n; ++i) {
            const bool za = i >= a.coeffs_.size();
            const bool zb = i >= b.coeffs_.size();
            if (za && zb) {
                continue;
            }
            if (za) {
                if (!ring_traits<R>::is_zero(b.coeffs_[i])) {
                    return false;
                }
            } else if (zb) {
                if (!ring_traits<R>::is_zero(a.coeffs_[i])) {
                    return false;
                }
            } else if (!(a.coeffs_[i] == b.coeffs_[i])) {
                return false;
            }
        }
        return true;
    }

private:
    static Parity product_parity(Parity a, Parity b)
    {
        if (a == Parity::none || b == Parity::none) {
            return Parity::none;
        }
        return a == b ? Parity::even : Parity::odd;
    }

    void normalise()
    {
        if (coeffs_.size() > order_) {
            coeffs_.resize(order_);
        }
        if (parity_ != Parity::none) {
            const std::size_t skip = parity_ == Parity::even ? 1 : 0;
            for (std::size_t i = skip; i < coeffs_.size(); i += 2) {
                coeffs_[i] = ring_traits<R>::zero();
            }
        }
        while (!coeffs_.empty() && ring_traits<R>::is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<R> coeffs_;
    std::size_t order_ = exact_order;
    Parity parity_ = Parity::none;
};

template <CoefficientRing R>
using QSeries = TruncatedSeries<R, nu_variable>;

template <CoefficientRing R>
using ZSeries = TruncatedSeries<R, z_variable>;

template <CoefficientRing R>
using TSeries = TruncatedSeries<R, t_variable>;

// Series as coefficients of other series (two-variable objects).
template <CoefficientRing R, typename Var>
struct ring_traits<TruncatedSeries<R, Var>> {
    using S = TruncatedSeries<R, Var>;
    static S zero()
    {
        return S{};
    }
    static S one()
    {
        return S::one();
    }
    static bool is_zero(const S &s)
    {
        return s.is_zero();
    }
    static bool is_one(const S &s)
    {
        return s.stored() == 1 && ring_traits<R>::is_one(s.coefficients()[0]);
    }
    static S inverse(const S &s);
};

// Multiplicative inverse; the constant term must be a unit of R.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> invert(const TruncatedSeries<R, Var> &s)
{
    if (s.order() == 0 || s.stored() == 0) {
        throw not_invertible("series with zero constant term");
    }
    const R c0inv = ring_traits<R>::inverse(s.coefficients()[0]);
    const std::size_t order = s.order();
    if (order == exact_order) {
        if (s.stored() == 1) {
            return TruncatedSeries<R, Var>::constant(c0inv);
        }
        throw std::invalid_argument("inverse of a non-constant exact polynomial needs a truncation order");
    }
    const auto &a = s.coefficients();
    std::vector<R> r(order, ring_traits<R>::zero());
    r[0] = c0inv;
    for (std::size_t n = 1; n < order; ++n) {
        R acc = ring_traits<R>::zero();
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) {
            if (!ring_traits<R>::is_zero(a[k]) && !ring_traits<R>::is_zero(r[n - k])) {
                acc += a[k] * r[n - k];
            }
        }
        r[n] = -(acc * c0inv);
    }
    const Parity p = s.parity() == Parity::even ? Parity::even : Parity::none;
    return TruncatedSeries<R, Var>(std::move(r), order, p);
}

template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> ring_traits<TruncatedSeries<R, Var>>::inverse(const TruncatedSeries<R, Var> &s)
{
    return invert(s);
}

// s^alpha for s with constant term exactly 1 (principal branch), via
// n r_n = sum_{k=1}^{n} ((alpha + 1) k - n) s_k r_{n-k}.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> power(const TruncatedSeries<R, Var> &s, const Rational &alpha, std::size_t order_cap = exact_order)
{
    if (s.order() == 0 || s.stored() == 0 || !ring_traits<R>::is_one(s.coefficients()[0])) {
        throw std::domain_error("rational power requires constant term 1");
    }
    const std::size_t order = std::min(s.order(), order_cap);
    if (order == exact_order) {
        throw std::invalid_argument("rational power of an exact polynomial needs a truncation order");
    }
    const auto &a = s.coefficients();
    std::vector<R> r(order, ring_traits<R>::zero());
    if (order > 0) {
        r[0] = ring_traits<R>::one();
    }
    for (std::size_t n = 1; n < order; ++n) {
        R acc = ring_traits<R>::zero();
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) {
            if (ring_traits<R>::is_zero(a[k]) || ring_traits<R>::is_zero(r[n - k])) {
                continue;
            }
            const Rational w = (alpha + 1) * Rational(static_cast<long>(k)) - Rational(static_cast<long>(n));
            if (!w.is_zero()) {
                acc += (a[k] * r[n - k]) * w;
            }
        }
        r[n] = acc * (Rational(1) / Rational(static_cast<long>(n)));
    }
    const Parity p = s.parity() == Parity::even ? Parity::even : Parity::none;
    return TruncatedSeries<R, Var>(std::move(r), order, p);
}

template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> inv_sqrt(const TruncatedSeries<R, Var> &s, std::size_t order_cap = exact_order)
{
    if (s.order() == 0 || s.stored() == 0 || !ring_traits<R>::is_one(s.coefficients()[0])) {
        throw std::domain_error("inv_sqrt requires constant term 1");
    }
    return power(s, Rational(-1, 2), order_cap);
}

// Termwise antiderivative with zero constant term.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> integrate(const TruncatedSeries<R, Var> &s)
{
    const auto &a = s.coefficients();
    std::vector<R> r(a.size() + 1, ring_traits<R>::zero());
    for (std::size_t n = 0; n < a.size(); ++n) {
        r[n + 1] = a[n] * Rational(1, static_cast<long>(n + 1));
    }
    Parity p = Parity::none;
    if (s.parity() == Parity::even) {
        p = Parity::odd;
    } else if (s.parity() == Parity::odd) {
        p = Parity::even;
    }
    return TruncatedSeries<R, Var>(std::move(r), detail::sat_add(s.order(), 1), p);
}

template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> derivative(const TruncatedSeries<R, Var> &s)
{
    const auto &a = s.coefficients();
    std::vector<R> r;
    for (std::size_t n = 1; n < a.size(); ++n) {
        r.push_back(a[n] * Rational(static_cast<long>(n)));
    }
    Parity p = Parity::none;
    if (s.parity() == Parity::even) {
        p = Parity::odd;
    } else if (s.parity() == Parity::odd) {
        p = Parity::even;
    }
    const std::size_t order = s.is_exact() ? exact_order : (s.order() == 0 ? 0 : s.order() - 1);
    return TruncatedSeries<R, Var>(std::move(r), order, p);
}

// Multiplication by x^k.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> shift_up(const TruncatedSeries<R, Var> &s, std::size_t k)
{
    std::vector<R> r(k, ring_traits<R>::zero());
    r.insert(r.end(), s.coefficients().begin(), s.coefficients().end());
    return TruncatedSeries<R, Var>(std::move(r), detail::sat_add(s.order(), k));
}

// Division by x^k; the first k coefficients must vanish.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> shift_down(const TruncatedSeries<R, Var> &s, std::size_t k)
{
    if (s.order() < k) {
        throw std::invalid_argument("shift_down beyond truncation order");
    }
    const auto &a = s.coefficients();
    for (std::size_t i = 0; i < k && i < a.size(); ++i) {
        if (!ring_traits<R>::is_zero(a[i])) {
            throw std::domain_error("shift_down of a series with nonzero low coefficients");
        }
    }
    std::vector<R> r;
    if (a.size() > k) {
        r.assign(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
    }
    const std::size_t order = s.is_exact() ? exact_order : s.order() - k;
    return TruncatedSeries<R, Var>(std::move(r), order);
}

// exp(s) for s with zero constant term: n r_n = sum_k k s_k r_{n-k}.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> exp(const TruncatedSeries<R, Var> &s, std::size_t order_cap = exact_order)
{
    if (s.order() == 0 || (s.stored() > 0 && !ring_traits<R>::is_zero(s.coefficients()[0]))) {
        throw std::domain_error("exp requires zero constant term");
    }
    const std::size_t order = std::min(s.order(), order_cap);
    if (order == exact_order) {
        throw std::invalid_argument("exp of an exact polynomial needs a truncation order");
    }
    const auto &a = s.coefficients();
    std::vector<R> r(order, ring_traits<R>::zero());
    r[0] = ring_traits<R>::one();
    for (std::size_t n = 1; n < order; ++n) {
        R acc = ring_traits<R>::zero();
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) {
            if (!ring_traits<R>::is_zero(a[k]) && !ring_traits<R>::is_zero(r[n - k])) {
                acc += (a[k] * r[n - k]) * Rational(static_cast<long>(k));
            }
        }
        r[n] = acc * Rational(1, static_cast<long>(n));
    }
    const Parity p = s.parity() == Parity::even ? Parity::even : Parity::none;
    return TruncatedSeries<R, Var>(std::move(r), order, p);
}

// log(s) for s with constant term 1, as the integral of s'/s.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> log(const TruncatedSeries<R, Var> &s)
{
    if (s.order() == 0 || s.stored() == 0 || !ring_traits<R>::is_one(s.coefficients()[0])) {
        throw std::domain_error("log requires constant term 1");
    }
    if (s.is_exact() && s.stored() > 1) {
        throw std::invalid_argument("log of an exact polynomial needs a truncation order");
    }
    auto r = integrate(derivative(s) * invert(s));
    return s.parity() == Parity::even ? r.with_parity(Parity::even) : r;
}

// f(g(x)) for g(0) = 0, by Horner's rule. The result is valid below
// min(v * order(f), order(g) + (m - 1) v) where v is the valuation of g and
// m the lowest positive degree carried by f.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> compose(const TruncatedSeries<R, Var> &f, const TruncatedSeries<R, Var> &g)
{
    using S = TruncatedSeries<R, Var>;
    if (g.order() == 0 || (g.stored() > 0 && !ring_traits<R>::is_zero(g.coefficients()[0]))) {
        throw std::domain_error("compose requires g(0) = 0");
    }
    const std::size_t v = g.valuation();
    if (v == exact_order) {
        // g is exactly zero
        return S::constant(f.stored() > 0 ? f.coefficients()[0] : ring_traits<R>::zero(),
                           f.order() == 0 ? 0 : exact_order);
    }
    std::size_t order = detail::sat_mul(v, f.order());
    const auto &fc = f.coefficients();
    for (std::size_t m = 1; m < fc.size(); ++m) {
        if (!ring_traits<R>::is_zero(fc[m])) {
            order = std::min(order, detail::sat_add(g.order(), (m - 1) * v));
            break;
        }
    }
    if (fc.empty()) {
        return S(order);
    }
    std::size_t limit = order;
    if (limit == exact_order) {
        limit = (fc.size() - 1) * (g.stored() - 1) + 1;
    }
    const S gt = g.truncated(limit);
    std::size_t top = fc.size();
    while (top > 1 && (top - 1) * v >= limit) {
        --top;
    }
    S acc = S::constant(fc[top - 1]).truncated(limit);
    for (std::size_t i = top - 1; i-- > 0;) {
        acc = (acc * gt).truncated(limit) + S::constant(fc[i]);
    }
    return S(std::vector<R>(acc.coefficients()), order);
}

// Compositional inverse of f = x + O(x^2) by Lagrange inversion:
// [x^n] g = (1/n) [w^{n-1}] (w / f(w))^n.
template <CoefficientRing R, typename Var>
TruncatedSeries<R, Var> reversion(const TruncatedSeries<R, Var> &f)
{
    using S = TruncatedSeries<R, Var>;
    if (f.is_exact()) {
        throw std::invalid_argument("reversion needs a finite truncation order");
    }
    if (f.order() < 2 || (f.stored() > 0 && !ring_traits<R>::is_zero(f.coefficients()[0]))
        || f.stored() < 2 || !ring_traits<R>::is_one(f.coefficients()[1])) {
        throw std::domain_error("reversion requires f(0) = 0 and linear coefficient 1");
    }
    const std::size_t order = f.order();
    const S h = invert(shift_down(f, 1));
    std::vector<R> g(order, ring_traits<R>::zero());
    g[1] = ring_traits<R>::one();
    S hp = h;
    for (std::size_t n = 2; n < order; ++n) {
        hp = hp * h;
        if (n - 1 < hp.stored()) {
            g[n] = hp.coefficients()[n - 1] * Rational(1, static_cast<long>(n));
        }
    }
    const Parity p = f.parity() == Parity::odd ? Parity::odd : Parity::none;
    return S(std::move(g), order, p);
}

// s(c * y^e) re-expressed as a series in another variable y, truncated below
// the given order.
template <typename VarOut, CoefficientRing R, typename VarIn>
TruncatedSeries<R, VarOut> substitute_monomial(const TruncatedSeries<R, VarIn> &s, const Rational &c, std::size_t e,
                                               std::size_t order)
{
    if (e == 0) {
        throw std::invalid_argument("substitute_monomial needs a positive exponent");
    }
    const std::size_t valid = std::min(order, detail::sat_mul(s.order(), e));
    std::vector<R> r;
    Rational cp(1);
    for (std::size_t n = 0; n < s.stored(); ++n, cp *= c) {
        const std::size_t idx = n * e;
        if (idx >= valid) {
            break;
        }
        if (r.size() <= idx) {
            r.resize(idx + 1, ring_traits<R>::zero());
        }
        r[idx] = s.coefficients()[n] * cp;
    }
    return TruncatedSeries<R, VarOut>(std::move(r), valid);
}

} // namespace ellcob

#endif
