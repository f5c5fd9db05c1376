#ifndef ELLCOB_ORACLE_ROOT_EXPANSION_HPP
#define ELLCOB_ORACLE_ROOT_EXPANSION_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include <ellcob/genus.hpp>
#include <ellcob/partition.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/ring.hpp>
#include <ellcob/series.hpp>

// Brute-force genus polynomials: expand prod_{i<=k} Q(z_i) in k formal roots,
// read off the degree-k monomial symmetric coefficients in y_i = z_i^2 and
// solve for the elementary-symmetric (Pontryagin) coefficients over Q.
// Independent of the power-sum path in genus.hpp; meant for k <= 4 or so.

namespace ellcob::oracle
{

using Exponents = std::vector<int>;

template <typename R>
using MultiPoly = std::map<Exponents, R>;

namespace detail
{

template <typename R>
MultiPoly<R> multiply(const MultiPoly<R> &a, const MultiPoly<R> &b, int max_degree)
{
    MultiPoly<R> r;
    for (const auto &[ea, ca] : a) {
        int da = 0;
        for (int x : ea) {
            da += x;
        }
        for (const auto &[eb, cb] : b) {
            int d = da;
            for (int x : eb) {
                d += x;
            }
            if (d > max_degree) {
                continue;
            }
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            auto it = r.find(e);
            if (it == r.end()) {
                r.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    }
    return r;
}

inline Exponents padded(const Partition &p, int k)
{
    Exponents e(static_cast<std::size_t>(k), 0);
    std::size_t i = 0;
    for (int part : p.parts()) {
        e[i++] = part;
    }
    return e;
}

// e_j(y_1..y_k) as a polynomial.
inline MultiPoly<Rational> elementary(int j, int k)
{
    MultiPoly<Rational> r;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != j) {
            continue;
        }
        Exponents e(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                e[static_cast<std::size_t>(i)] = 1;
            }
        }
        r.emplace(e, Rational(1));
    }
    return r;
}

} // namespace detail

template <CoefficientRing R>
GenusPolynomial<R> root_expansion_genus(const CharSeries<R> &q, int k)
{
    if (k < 1 || k > 6) {
        throw std::invalid_argument("root expansion oracle supports 1 <= k <= 6");
    }
    const auto &s = q.series();
    if (s.order() <= static_cast<std::size_t>(2 * k)) {
        throw std::invalid_argument("characteristic series too short for the oracle");
    }
    // prod_i Q(y_i) truncated at total degree k
    MultiPoly<R> prod;
    prod.emplace(Exponents(static_cast<std::size_t>(k), 0), ring_traits<R>::one());
    for (int i = 0; i < k; ++i) {
        MultiPoly<R> factor;
        for (int n = 0; n <= k; ++n) {
            const R &c = s.coeff(static_cast<std::size_t>(2 * n));
            if (ring_traits<R>::is_zero(c)) {
                continue;
            }
            Exponents e(static_cast<std::size_t>(k), 0);
            e[static_cast<std::size_t>(i)] = n;
            factor.emplace(e, c);
        }
        prod = detail::multiply(prod, factor, k);
    }

    const auto parts = partitions(k);
    const std::size_t n = parts.size();
    // matrix M[lambda][mu] = [m_lambda] e_mu, target t[lambda] = [m_lambda] prod
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<R> rhs(n, ring_traits<R>::zero());
    for (std::size_t col = 0; col < n; ++col) {
        MultiPoly<Rational> e;
        e.emplace(Exponents(static_cast<std::size_t>(k), 0), Rational(1));
        for (int part : parts[col].parts()) {
            e = detail::multiply(e, detail::elementary(part, k), k);
        }
        for (std::size_t row = 0; row < n; ++row) {
            auto it = e.find(detail::padded(parts[row], k));
            if (it != e.end()) {
                m[row][col] = it->second;
            }
        }
    }
    for (std::size_t row = 0; row < n; ++row) {
        auto it = prod.find(detail::padded(parts[row], k));
        if (it != prod.end()) {
            rhs[row] = it->second;
        }
    }

    // Gauss-Jordan with a rational matrix and R-valued right-hand side
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) {
            ++p;
        }
        if (p == n) {
            throw std::logic_error("monomial/elementary transition matrix is singular");
        }
        std::swap(m[p], m[c]);
        std::swap(rhs[p], rhs[c]);
        const Rational inv = Rational(1) / m[c][c];
        for (auto &x : m[c]) {
            x *= inv;
        }
        rhs[c] = rhs[c] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) {
                continue;
            }
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
            }
            rhs[r] = rhs[r] - rhs[c] * f;
        }
    }

    typename GenusPolynomial<R>::coefficient_map out;
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace(parts[i], rhs[i]);
    }
    return GenusPolynomial<R>(k, std::move(out));
}

} // namespace ellcob::oracle

#endif
