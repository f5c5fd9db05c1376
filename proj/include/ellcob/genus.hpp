#ifndef ELLCOB_GENUS_HPP
#define ELLCOB_GENUS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <ellcob/delta_eps.hpp>
#include <ellcob/partition.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/series.hpp>
#include <ellcob/weighted_poly.hpp>

namespace ellcob
{

// Pontryagin numbers <p_lambda, [M]> of a 4k-manifold, one per partition of k.
class PontryaginVector
{
public:
    using number_map = std::map<Partition, Integer, PartitionOrder>;

    PontryaginVector(int k, number_map numbers) : k_(k), numbers_(std::move(numbers))
    {
        if (k < 0) {
            throw std::invalid_argument("negative dimension");
        }
        const auto parts = partitions(k);
        if (numbers_.size() != parts.size()) {
            throw std::invalid_argument("Pontryagin vector must list every partition of " + std::to_string(k));
        }
        for (const auto &p : parts) {
            if (!numbers_.contains(p)) {
                throw std::invalid_argument("missing Pontryagin number for " + p.str());
            }
        }
    }

    static PontryaginVector zero(int k)
    {
        number_map m;
        for (const auto &p : partitions(k)) {
            m.emplace(p, Integer(0));
        }
        return PontryaginVector(k, std::move(m));
    }

    // Pontryagin numbers of CP^{2n}: p = (1 + x^2)^{2n+1}, <x^{2n}, [CP^{2n}]> = 1.
    static PontryaginVector complex_projective(int n)
    {
        number_map m;
        for (const auto &p : partitions(n)) {
            Integer v(1);
            for (int j : p.parts()) {
                Integer b;
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * n + 1), static_cast<unsigned long>(j));
                v *= b;
            }
            m.emplace(p, v);
        }
        return PontryaginVector(n, std::move(m));
    }

    int k() const
    {
        return k_;
    }
    int dimension() const
    {
        return 4 * k_;
    }
    const number_map &numbers() const
    {
        return numbers_;
    }
    const Integer &operator[](const Partition &p) const
    {
        auto it = numbers_.find(p);
        if (it == numbers_.end()) {
            throw std::out_of_range("no Pontryagin number for " + p.str());
        }
        return it->second;
    }
    bool is_zero() const
    {
        for (const auto &[p, v] : numbers_) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const PontryaginVector &, const PontryaginVector &) = default;

private:
    int k_;
    number_map numbers_;
};

// Even characteristic power series Q(z) with Q(0) = 1.
template <CoefficientRing R>
class CharSeries
{
public:
    explicit CharSeries(ZSeries<R> q) : series_(std::move(q))
    {
        if (series_.order() == 0 || series_.stored() == 0 || !ring_traits<R>::is_one(series_.coefficients()[0])) {
            throw std::domain_error("characteristic series must have constant term 1");
        }
        for (std::size_t i = 1; i < series_.stored(); i += 2) {
            if (!ring_traits<R>::is_zero(series_.coefficients()[i])) {
                throw std::domain_error("characteristic series must be even");
            }
        }
        series_ = series_.with_parity(Parity::even);
    }

    // Q(z) = z / f(z) for an odd f = z + O(z^3).
    static CharSeries from_genus_function(const ZSeries<R> &f)
    {
        return CharSeries(invert(shift_down(f, 1)));
    }

    const ZSeries<R> &series() const
    {
        return series_;
    }

private:
    ZSeries<R> series_;
};

// Degree-k genus as a polynomial in Pontryagin classes, keyed by partition.
template <CoefficientRing R>
class GenusPolynomial
{
public:
    using coefficient_map = std::map<Partition, R, PartitionOrder>;

    GenusPolynomial(int k, coefficient_map coeffs) : k_(k), coeffs_(std::move(coeffs))
    {
        for (const auto &p : partitions(k)) {
            coeffs_.try_emplace(p, ring_traits<R>::zero());
        }
        if (coeffs_.size() != partitions(k).size()) {
            throw std::invalid_argument("genus polynomial has a monomial of the wrong degree");
        }
    }

    int k() const
    {
        return k_;
    }
    const coefficient_map &coefficients() const
    {
        return coeffs_;
    }
    const R &operator[](const Partition &p) const
    {
        return coeffs_.at(p);
    }

    friend bool operator==(const GenusPolynomial &, const GenusPolynomial &) = default;

private:
    int k_;
    coefficient_map coeffs_;
};

// log g(z) = int_0^z dt / sqrt(1 - 2 delta t^2 + eps t^4), valid below z^order.
inline ZSeries<DeltaEpsPoly> elliptic_log(std::size_t order)
{
    if (order < 2) {
        throw std::invalid_argument("elliptic_log needs order >= 2");
    }
    using S = ZSeries<DeltaEpsPoly>;
    const S quartic({DeltaEpsPoly(1), DeltaEpsPoly(), DeltaEpsPoly::delta() * Rational(-2), DeltaEpsPoly(),
                     DeltaEpsPoly::eps()},
                    exact_order, Parity::even);
    return integrate(inv_sqrt(quartic, order - 1)).with_parity(Parity::odd);
}

// The universal elliptic genus function f, inverse of the logarithm.
inline ZSeries<DeltaEpsPoly> universal_f(std::size_t order)
{
    return reversion(elliptic_log(order));
}

namespace detail
{

// Power sums ps_1..ps_k of the squared roots, written in the elementary
// symmetric functions p_j by Newton's identities:
//   ps_n = sum_{i=1}^{n-1} (-1)^{i-1} p_i ps_{n-i} + (-1)^{n-1} n p_n.
inline std::vector<WeightedPoly<Rational>> power_sums_in_elementary(int k)
{
    std::vector<WeightedPoly<Rational>> ps(static_cast<std::size_t>(k) + 1, WeightedPoly<Rational>(k));
    for (int n = 1; n <= k; ++n) {
        WeightedPoly<Rational> acc(k);
        for (int i = 1; i < n; ++i) {
            const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            acc += WeightedPoly<Rational>::variable(i, sign, k) * ps[static_cast<std::size_t>(n - i)];
        }
        const Rational sign = (n % 2 == 1) ? Rational(n) : Rational(-n);
        acc += WeightedPoly<Rational>::variable(n, sign, k);
        ps[static_cast<std::size_t>(n)] = acc;
    }
    return ps;
}

} // namespace detail

// Rewrites the weight-k part of a power-sum polynomial in the Pontryagin
// (elementary symmetric) basis.
template <CoefficientRing R>
GenusPolynomial<R> to_pontryagin_basis(const WeightedPoly<R> &power_sum_poly, int k)
{
    const auto ps = detail::power_sums_in_elementary(k);
    typename GenusPolynomial<R>::coefficient_map out;
    for (const auto &[mono, c] : power_sum_poly.terms()) {
        if (mono.weight() != k) {
            continue;
        }
        auto image = WeightedPoly<Rational>::constant(Rational(1), k);
        for (int j : mono.parts()) {
            image = image * ps[static_cast<std::size_t>(j)];
        }
        for (const auto &[pm, pc] : image.terms()) {
            auto [it, inserted] = out.try_emplace(pm, c * pc);
            if (!inserted) {
                it->second += c * pc;
            }
        }
    }
    return GenusPolynomial<R>(k, std::move(out));
}

// Multiplicative class prod_i Q(z_i) in power sums ps_j = sum_i z_i^{2j},
// through weight k: writing log Q = sum_j b_j z^{2j}, the class is
// exp(sum_j b_j ps_j).
template <CoefficientRing R>
WeightedPoly<R> multiplicative_class(const CharSeries<R> &q, int k)
{
    const auto &s = q.series();
    if (s.order() <= static_cast<std::size_t>(2 * k)) {
        throw std::invalid_argument("characteristic series order " + std::to_string(s.order())
                                    + " is insufficient for degree " + std::to_string(k));
    }
    const auto lg = log(s.truncated(static_cast<std::size_t>(2 * k + 1)));
    WeightedPoly<R> exponent(k);
    for (int j = 1; j <= k; ++j) {
        exponent.add_term(Partition{j}, lg.coeff(static_cast<std::size_t>(2 * j)));
    }
    return exp(exponent);
}

// The genus polynomial K_k(p_1, ..., p_k) of the characteristic series.
template <CoefficientRing R>
GenusPolynomial<R> genus_polynomial(const CharSeries<R> &q, int k)
{
    return to_pontryagin_basis(multiplicative_class(q, k), k);
}

template <CoefficientRing R>
R evaluate_genus(const GenusPolynomial<R> &poly, const PontryaginVector &v)
{
    if (poly.k() != v.k()) {
        throw std::invalid_argument("genus of degree " + std::to_string(poly.k()) + " applied to a "
                                    + std::to_string(v.dimension()) + "-dimensional Pontryagin vector");
    }
    R acc = ring_traits<R>::zero();
    for (const auto &[p, c] : poly.coefficients()) {
        const Integer &n = v[p];
        if (n != 0) {
            acc += c * Rational(n);
        }
    }
    return acc;
}

// Substitutes values for delta and eps in every coefficient.
template <CoefficientRing T>
GenusPolynomial<T> specialize(const GenusPolynomial<DeltaEpsPoly> &poly, const T &delta, const T &eps)
{
    typename GenusPolynomial<T>::coefficient_map out;
    for (const auto &[p, c] : poly.coefficients()) {
        out.emplace(p, substitute(c, delta, eps));
    }
    return GenusPolynomial<T>(poly.k(), std::move(out));
}

inline GenusPolynomial<DeltaEpsPoly> universal_elliptic_genus(int k)
{
    const auto f = universal_f(static_cast<std::size_t>(2 * k + 2));
    return genus_polynomial(CharSeries<DeltaEpsPoly>::from_genus_function(f), k);
}

// Elliptic genus of a Pontryagin vector as an element of Q[delta, eps].
inline DeltaEpsPoly elliptic_genus(const PontryaginVector &v)
{
    return evaluate_genus(universal_elliptic_genus(v.k()), v);
}

// L-genus (delta = eps = 1) and A-hat genus (delta = -1/8, eps = 0).
inline GenusPolynomial<Rational> signature_polynomial(int k)
{
    return specialize(universal_elliptic_genus(k), Rational(1), Rational(1));
}

inline GenusPolynomial<Rational> ahat_polynomial(int k)
{
    return specialize(universal_elliptic_genus(k), Rational(-1, 8), Rational(0));
}

} // namespace ellcob

#endif
