#ifndef ELLCOB_VERIFY_HPP
#define ELLCOB_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <ellcob/genus.hpp>
#include <ellcob/modular.hpp>
#include <ellcob/oracle/root_expansion.hpp>
#include <ellcob/string24.hpp>
#include <ellcob/twist.hpp>

// Self-check suite behind `ellcob verify`. Each check compares two
// independently computed quantities exactly.

namespace ellcob
{

enum class VerifyLevel { fast, full };

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationSuiteResult {
    std::vector<CheckResult> checks;

    bool all_passed() const
    {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

// Pontryagin vector with entries uniform in [-bound, bound].
inline PontryaginVector random_pontryagin_vector(int k, std::mt19937_64 &rng, long bound = 1000)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    PontryaginVector::number_map m;
    for (const auto &p : partitions(k)) {
        m.emplace(p, Integer(dist(rng)));
    }
    return PontryaginVector(k, std::move(m));
}

namespace oracle
{

// B_0..B_n from sum_{j<=m} binom(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(std::size_t n)
{
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational s;
        for (std::size_t j = 0; j < m; ++j) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), m + 1, j);
            s += Rational(c) * b[j];
        }
        b[m] = -s / Rational(static_cast<long>(m + 1));
    }
    return b;
}

// 2 tanh(z/2) = sum_{n>=1} 4 (2^{2n} - 1) B_{2n} / (2n)! z^{2n-1}
inline ZSeries<Rational> two_tanh_half(std::size_t order)
{
    const auto b = bernoulli_numbers(order + 1);
    std::vector<Rational> c(order);
    for (std::size_t n = 1; 2 * n - 1 < order; ++n) {
        c[2 * n - 1] = Rational(4) * Rational(ipow(2, 2 * n) - 1) * b[2 * n] / Rational(factorial(2 * n));
    }
    return ZSeries<Rational>(std::move(c), order);
}

// 2 sinh(z/2)
inline ZSeries<Rational> two_sinh_half(std::size_t order)
{
    std::vector<Rational> c(order);
    for (std::size_t n = 1; n < order; n += 2) {
        c[n] = Rational(2) / (Rational(ipow(2, n)) * Rational(factorial(n)));
    }
    return ZSeries<Rational>(std::move(c), order);
}

// z / tanh z = sum_n 2^{2n} B_{2n} / (2n)! z^{2n}
inline ZSeries<Rational> z_over_tanh(std::size_t order)
{
    const auto b = bernoulli_numbers(order);
    std::vector<Rational> c(order);
    for (std::size_t n = 0; 2 * n < order; ++n) {
        c[2 * n] = Rational(ipow(2, 2 * n)) * b[2 * n] / Rational(factorial(2 * n));
    }
    return ZSeries<Rational>(std::move(c), order);
}

} // namespace oracle

namespace detail
{

inline bool zero_through(const ZSeries<QRational> &s, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.coeff(i).is_zero()) {
            return false;
        }
    }
    return true;
}

struct SuiteParameters {
    std::size_t divisor_nu_order;
    std::size_t residual_z_order;
    std::size_t residual_nu_order;
    std::size_t cross_nu_order;
    int random_vectors;
};

} // namespace detail

inline VerificationSuiteResult run_verification(VerifyLevel level)
{
    const detail::SuiteParameters prm = level == VerifyLevel::fast ? detail::SuiteParameters{5, 8, 4, 3, 3}
                                                                    : detail::SuiteParameters{21, 14, 12, 7, 10};
    VerificationSuiteResult out;
    auto add = [&out](std::string name, bool ok, std::string detail) {
        out.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    // q-expansions of the parameters
    {
        const std::size_t n = prm.divisor_nu_order;
        bool ok = delta1(n) == divisor_sum_oracle(ModularParameter::delta1, n)
                  && eps1(n) == divisor_sum_oracle(ModularParameter::eps1, n)
                  && delta2(n) == divisor_sum_oracle(ModularParameter::delta2, n)
                  && eps2(n) == divisor_sum_oracle(ModularParameter::eps2, n);
        add("theta-vs-divisor-sums", ok, "through nu^" + std::to_string(n - 1));

        const QRational d1(std::vector<Rational>{Rational(1, 4), 0, 6, 0, 6}, 5);
        const QRational e1(std::vector<Rational>{Rational(1, 16), 0, -1, 0, 7}, 5);
        const QRational d2(std::vector<Rational>{Rational(-1, 8), -3, -3}, 3);
        const QRational e2(std::vector<Rational>{0, 1, 8}, 3);
        ok = delta1(5) == d1 && eps1(5) == e1 && delta2(3) == d2 && eps2(3) == e2;
        add("parameter-leading-terms", ok, "delta1, eps1 to q^2; delta2, eps2 to q");
    }

    // Jacobi quartic
    for (int kind = 1; kind <= 2; ++kind) {
        const auto f = jacobi_solution(kind, prm.residual_z_order, prm.residual_nu_order);
        const std::size_t nu = prm.residual_nu_order;
        const auto r = jacobi_quartic_residual(f.series, kind == 1 ? delta1(nu) : delta2(nu),
                                               kind == 1 ? eps1(nu) : eps2(nu));
        const std::size_t through = prm.residual_z_order - 1;
        add("jacobi-quartic-f" + std::to_string(kind), detail::zero_through(r, through),
            "residual = 0 through z^" + std::to_string(through - 1) + ", nu^" + std::to_string(nu - 1));

        const std::size_t zq = 16;
        const auto f0 = jacobi_solution(kind, zq, 1).series;
        std::vector<Rational> limit;
        for (std::size_t i = 0; i < zq; ++i) {
            limit.push_back(f0.coeff(i).coeff(0));
        }
        const auto expect = kind == 1 ? oracle::two_tanh_half(zq) : oracle::two_sinh_half(zq);
        add("q0-limit-f" + std::to_string(kind), ZSeries<Rational>(limit, zq) == expect,
            kind == 1 ? "2 tanh(z/2) through z^15" : "2 sinh(z/2) through z^15");
    }

    // genus polynomials: power sums vs formal roots
    {
        const auto f = universal_f(8);
        const auto q = CharSeries<DeltaEpsPoly>::from_genus_function(f);
        const auto q_l = CharSeries<Rational>(oracle::z_over_tanh(8));
        const auto q_a = CharSeries<Rational>::from_genus_function(oracle::two_sinh_half(9));
        const std::size_t nu = prm.cross_nu_order;
        const auto sub = [&](const DeltaEpsPoly &p, int kind) {
            return kind == 1 ? substitute(p, delta1(nu), eps1(nu)) : substitute(p, delta2(nu), eps2(nu));
        };
        for (int k = 1; k <= 3; ++k) {
            const auto newton = genus_polynomial(q, k);
            bool ok = newton == oracle::root_expansion_genus(q, k);
            ok = ok && signature_polynomial(k) == oracle::root_expansion_genus(q_l, k);
            ok = ok && ahat_polynomial(k) == oracle::root_expansion_genus(q_a, k);
            for (int kind = 1; kind <= 2; ++kind) {
                std::vector<QRational> qc;
                for (std::size_t i = 0; i < q.series().order(); ++i) {
                    qc.push_back(sub(q.series().coeff(i), kind));
                }
                const CharSeries<QRational> qs(ZSeries<QRational>(qc, q.series().order()));
                ok = ok && specialize(newton, kind == 1 ? delta1(nu) : delta2(nu), kind == 1 ? eps1(nu) : eps2(nu))
                               == oracle::root_expansion_genus(qs, k);
            }
            add("genus-oracle-k" + std::to_string(k), ok, "universal, signature, ahat, (delta_i, eps_i)");
        }
    }

    // dimension 24: leading q-terms and the cross-path identity
    {
        std::mt19937_64 rng(20240611);
        const auto e1 = ell_polynomial(1, 6, prm.cross_nu_order);
        const auto e2 = ell_polynomial(2, 6, prm.cross_nu_order);
        const auto u = universal_elliptic_genus(6);
        const std::size_t nu = prm.cross_nu_order;
        const auto s1 = specialize(u, delta1(nu), eps1(nu));
        const auto s2 = specialize(u, delta2(nu), eps2(nu));
        bool lead_ok = true;
        bool cross_ok = true;
        for (int i = 0; i < prm.random_vectors; ++i) {
            const auto v = random_pontryagin_vector(6, rng);
            const auto idx = twisted_indices(v);
            const auto ell1v = evaluate_genus(e1, v);
            const auto ell2v = evaluate_genus(e2, v);
            lead_ok = lead_ok && ell1v.coeff(0) == idx.sig && ell1v.coeff(1).is_zero()
                      && ell1v.coeff(2) == Rational(2) * idx.sig_t - Rational(48) * idx.sig;
            lead_ok = lead_ok && ell2v.coeff(0) == idx.ahat
                      && ell2v.coeff(1) == -(idx.ahat_t - Rational(24) * idx.ahat);
            cross_ok = cross_ok && ell1v == evaluate_genus(s1, v) * Rational(ipow(2, 12))
                       && ell2v == evaluate_genus(s2, v);
        }
        add("ell-leading-terms", lead_ok, std::to_string(prm.random_vectors) + " random 24-dimensional vectors");
        add("ell-cross-path", cross_ok,
            "twisted indices vs universal genus at (delta_i, eps_i) through nu^" + std::to_string(nu - 1));

        // third route: characteristic series z / F_i straight from the theta quotients
        const auto direct = [nu](int kind) {
            const auto f = jacobi_solution(kind, 15, nu).series;
            return genus_polynomial(CharSeries<QRational>::from_genus_function(f), 6);
        };
        const auto d1 = direct(1), d2 = direct(2);
        bool third_ok = true;
        for (const auto &p : partitions(6)) {
            third_ok = third_ok && e1[p] == d1[p] * Rational(ipow(2, 12)) && e2[p] == d2[p];
        }
        add("ell-third-path", third_ok, "twisted indices vs genus of z/F_i, all 11 partitions");
    }

    // matrices and the image lattice
    {
        add("index-coefficient-matrix", index_coefficient_matrix() == index_coefficient_reference(), "solved system vs hand-entered fixture");
        add("kappa-coefficient-matrix", kappa_coefficient_matrix() == kappa_coefficient_reference(), "derived vs hand-entered fixture");
        add("image-matrix", image_matrix_raw() == image_matrix_reference(), "kappa matrix * K vs hand-entered fixture");
        const Rational dk = basis_matrix_K().determinant();
        add("det-K", dk == Rational(1) || dk == Rational(-1), "det K = " + dk.pretty());
        const Rational dp = kappa_coefficient_matrix().determinant();
        add("det-kappa-matrix", !dp.is_zero(), "det = " + dp.pretty());
        const Matrix4 h = image_lattice_basis();
        add("image-hnf", h == Matrix4::diagonal({1, 24, 1, 8}), "diag(1,24,1,8)");
        const Rational idx = h.determinant();
        add("image-index", idx == Rational(192), "index " + idx.pretty() + " in the spin lattice");
    }

    // Witten genus fixtures
    {
        const auto w1 = witten_genus_24(IndexQuadruple{1, 0, 0, 0}, 4);
        const auto w2 = witten_genus_24(IndexQuadruple{0, 1, 0, 0}, 6);
        const auto w0 = witten_genus_24(IndexQuadruple{0, 0, 0, 0}, 6);
        const bool ok = w1 == QRational(std::vector<Rational>{1, 0, -24}, 4)
                        && w2 == QRational(std::vector<Rational>{0, 0, 24, 0, -576}, 6) && w0.is_zero();
        add("witten-genus-fixtures", ok, "1 - 24q, 24q - 576q^2, 0");
    }

    // the catalogue basis classifies to unit coordinates
    {
        bool ok = true;
        const Matrix4 k = basis_matrix_K();
        for (std::size_t i = 0; i < 4; ++i) {
            const auto kappa = IndexQuadruple::from_vector(k.column(i)).value();
            const auto r = classify(kappa);
            std::array<Integer, 4> unit{0, 0, 0, 0};
            unit[i] = 1;
            ok = ok && r.basis_coordinates == unit && r.bounds_string == false;
        }
        ok = ok && classify(IndexQuadruple{0, 0, 0, 0}).bounds_string == true;
        add("basis-classification", ok, "M1..M4 give unit coordinates, zero class bounds");
    }
    return out;
}

} // namespace ellcob

#endif
