#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <ellcob/modular.hpp>
#include <ellcob/twist.hpp>
#include <ellcob/verify.hpp>

using namespace ellcob;

namespace
{

Partition P(std::initializer_list<int> parts)
{
    return Partition(std::vector<int>(parts));
}

PontryaginVector one_number(long p1)
{
    return PontryaginVector(1, {{P({1}), Integer(p1)}});
}

} // namespace

TEST_CASE("Chern character of the tangent bundle")
{
    const auto c = ch_tangent(2);
    CHECK(c.coeff(Partition()) == Rational(8));
    CHECK(c.coeff(P({1})) == Rational(1));
    CHECK(c.coeff(P({2})) == Rational(1, 12));
    CHECK(ch_tangent(6).coeff(P({6})) == Rational(2) / Rational(factorial(12)));
    CHECK((ch_tangent(3) - CharClass::constant(Rational(12), 3)).coeff(Partition()).is_zero());
}

TEST_CASE("Adams operations")
{
    const auto c = ch_tangent(2);
    CHECK(adams(c, 1) == c);
    auto x = CharClass::constant(Rational(4), 2);
    x.add_term(P({1}), Rational(1));
    auto expect = CharClass::constant(Rational(4), 2);
    expect.add_term(P({1}), Rational(4));
    CHECK(adams(x, 2) == expect);
    CHECK(adams(c, 3).coeff(P({2})) == Rational(81, 12));
    CHECK_THROWS(adams(c, 0));
}

TEST_CASE("exterior and symmetric powers")
{
    const auto c2 = CharClass::constant(Rational(2), 2);
    CHECK(ch_lambda_t(c2, 4).coeff(2).coeff(Partition()) == Rational(1));
    CHECK(ch_lambda_t(c2, 4).coeff(3).coeff(Partition()).is_zero());
    const auto c1 = CharClass::constant(Rational(1), 2);
    const auto s = ch_s_t(c1, 6);
    for (std::size_t m = 0; m < 6; ++m) {
        CHECK(s.coeff(m).coeff(Partition()) == Rational(1));
    }
    // ch Lambda^2 T = (ch(T)^2 - ch(psi^2 T)) / 2
    const auto t = ch_tangent(3);
    CHECK(ch_lambda2_tangent(3) == (t * t - adams(t, 2)) * Rational(1, 2));

    // log S_t(E) + log Lambda_{-t}(E) = 0 for a rank-zero base
    const auto reduced = t - CharClass::constant(Rational(12), 3);
    const auto st = ch_s_t(reduced, 5);
    const auto lt = ch_lambda_t(reduced, 5);
    std::vector<CharClass> neg;
    for (std::size_t i = 0; i < 5; ++i) {
        neg.push_back(i % 2 == 0 ? lt.coeff(i) : -lt.coeff(i));
    }
    const TSeries<CharClass> l_minus(neg, 5);
    CHECK(log(st) + log(l_minus) == TSeries<CharClass>(5));
}

TEST_CASE("Witten bundles")
{
    const int k = 3;
    const auto reduced = ch_tangent(k) - CharClass::constant(Rational(4 * k), k);
    const auto one = CharClass::constant(Rational(1), k);
    const auto w1 = witten_bundle_ch(1, k, 5);
    const auto w2 = witten_bundle_ch(2, k, 5);
    CHECK(w1.series.coeff(0) == one);
    CHECK(w2.series.coeff(0) == one);
    CHECK(w1.series.coeff(1).is_zero());
    CHECK(w1.series.coeff(3).is_zero());
    CHECK(w1.series.coeff(2) == reduced * Rational(2));
    CHECK(w2.series.coeff(1) == -reduced);
    CHECK_THROWS(witten_bundle_ch(3, k, 5));
}

TEST_CASE("index classes")
{
    CHECK(a_hat_class(1).coeff(P({1})) == Rational(-1, 24));
    CHECK(l_hat_class(1).coeff(P({1})) == Rational(1, 3));
    CHECK(a_hat_class(3).coeff(Partition()) == Rational(1));
    CHECK(l_hat_class(3).coeff(Partition()) == Rational(64));
}

TEST_CASE("twisted genera in dimension 4")
{
    const auto k3 = one_number(-48);
    CHECK(twisted_genus(IndexClass::a_hat, ch_tangent(1), k3) == Rational(-40));
    CHECK(twisted_genus(IndexClass::l_hat, CharClass::constant(Rational(1), 1), one_number(3)) == Rational(1));
}

TEST_CASE("dimension-24 leading terms of Ell_1 and Ell_2", "[property]")
{
    std::mt19937_64 rng(99);
    const auto e1 = ell_polynomial(1, 6, 3);
    const auto e2 = ell_polynomial(2, 6, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto v = random_pontryagin_vector(6, rng);
        const auto idx = twisted_indices(v);
        const auto a = evaluate_genus(e1, v);
        const auto b = evaluate_genus(e2, v);
        CHECK(a.coeff(0) == idx.sig);
        CHECK(a.coeff(1).is_zero());
        CHECK(a.coeff(2) == Rational(2) * idx.sig_t - Rational(48) * idx.sig);
        CHECK(b.coeff(0) == idx.ahat);
        CHECK(b.coeff(1) == -(idx.ahat_t - Rational(24) * idx.ahat));
    }
}

TEST_CASE("three routes to Ell_1 and Ell_2 agree", "[property]")
{
    const std::size_t nu = 7;
    const int k = 6;
    const auto u = universal_elliptic_genus(k);
    const auto via_params_1 = specialize(u, delta1(nu), eps1(nu));
    const auto via_params_2 = specialize(u, delta2(nu), eps2(nu));
    const auto via_bundle_1 = ell_polynomial(1, k, nu);
    const auto via_bundle_2 = ell_polynomial(2, k, nu);
    // direct characteristic series z / F_i
    const auto f1 = jacobi_solution(1, 2 * k + 3, nu).series;
    const auto f2 = jacobi_solution(2, 2 * k + 3, nu).series;
    const auto direct_1 = genus_polynomial(CharSeries<QRational>::from_genus_function(f1), k);
    const auto direct_2 = genus_polynomial(CharSeries<QRational>::from_genus_function(f2), k);
    const QRational scale = QRational::constant(Rational(ipow(2, 12)), nu);
    for (const auto &p : partitions(k)) {
        CHECK(via_bundle_1[p] == via_params_1[p] * scale);
        CHECK(via_bundle_1[p] == direct_1[p] * scale);
        CHECK(via_bundle_2[p] == via_params_2[p]);
        CHECK(via_bundle_2[p] == direct_2[p]);
    }
}
