#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <ellcob/genus.hpp>
#include <ellcob/io.hpp>
#include <ellcob/modular.hpp>
#include <ellcob/oracle/root_expansion.hpp>
#include <ellcob/verify.hpp>

using namespace ellcob;
using ZD = ZSeries<DeltaEpsPoly>;

namespace
{

const DeltaEpsPoly d = DeltaEpsPoly::delta();
const DeltaEpsPoly e = DeltaEpsPoly::eps();

PontryaginVector one_number(long p1)
{
    return PontryaginVector(1, {{Partition({1}), Integer(p1)}});
}

} // namespace

TEST_CASE("elliptic logarithm and its inverse")
{
    const auto g = elliptic_log(12);
    CHECK(g.coeff(1) == DeltaEpsPoly(1));
    CHECK(g.coeff(3) == d * Rational(1, 3));
    CHECK(g.coeff(5) == (d * d * Rational(3) - e) * Rational(1, 10));

    const auto f = universal_f(12);
    CHECK(f.coeff(3) == d * Rational(-1, 3));
    // (f')^2 = 1 - 2 delta f^2 + eps f^4
    const auto fp = derivative(f);
    const auto f2 = f * f;
    const auto rhs = ZD::one() - f2.scaled(d * Rational(2)) + (f2 * f2).scaled(e);
    CHECK(fp * fp == rhs);

    // delta = eps = 1 gives tanh z = z - z^3/3 + 2 z^5/15
    std::vector<Rational> t;
    for (std::size_t i = 0; i < 6; ++i) {
        t.push_back(substitute(f.coeff(i), Rational(1), Rational(1)));
    }
    CHECK(ZSeries<Rational>(t, 6) == ZSeries<Rational>(std::vector<Rational>{0, 1, 0, Rational(-1, 3), 0, Rational(2, 15)}, 6));
}

TEST_CASE("degree-one genera")
{
    const auto u = universal_elliptic_genus(1);
    CHECK(u[Partition({1})] == d * Rational(1, 3));
    CHECK(signature_polynomial(1)[Partition({1})] == Rational(1, 3));
    CHECK(ahat_polynomial(1)[Partition({1})] == Rational(-1, 24));

    CHECK(elliptic_genus(one_number(3)) == d);
    CHECK(evaluate_genus(signature_polynomial(1), one_number(3)) == Rational(1));
    CHECK(evaluate_genus(ahat_polynomial(1), one_number(-48)) == Rational(2));
    CHECK(evaluate_genus(ahat_polynomial(1), one_number(3)) == Rational(-1, 8));
    CHECK(elliptic_genus(PontryaginVector::zero(1)).is_zero());
}

TEST_CASE("logarithm property: g'(z) lists the genera of CP^2n")
{
    const auto gp = derivative(elliptic_log(10));
    for (int n = 1; n <= 4; ++n) {
        CHECK(elliptic_genus(PontryaginVector::complex_projective(n)) == gp.coeff(static_cast<std::size_t>(2 * n)));
    }
    CHECK(evaluate_genus(signature_polynomial(4), PontryaginVector::complex_projective(4)) == Rational(1));
}

TEST_CASE("power-sum path equals the formal-root oracle", "[property]")
{
    const auto q = CharSeries<DeltaEpsPoly>::from_genus_function(universal_f(10));
    const auto q_l = CharSeries<Rational>(oracle::z_over_tanh(10));
    const auto q_a = CharSeries<Rational>::from_genus_function(oracle::two_sinh_half(11));
    std::mt19937_64 rng(777);
    for (int k = 1; k <= 4; ++k) {
        const auto newton = genus_polynomial(q, k);
        const auto roots = oracle::root_expansion_genus(q, k);
        CHECK(newton == roots);
        CHECK(signature_polynomial(k) == oracle::root_expansion_genus(q_l, k));
        CHECK(ahat_polynomial(k) == oracle::root_expansion_genus(q_a, k));
        for (int trial = 0; trial < 5; ++trial) {
            const auto v = random_pontryagin_vector(k, rng);
            CHECK(evaluate_genus(newton, v) == evaluate_genus(roots, v));
        }
    }
}

TEST_CASE("weight-6 genus is homogeneous")
{
    std::mt19937_64 rng(4242);
    const auto u = universal_elliptic_genus(6);
    CHECK(u.coefficients().size() == 11);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(evaluate_genus(u, random_pontryagin_vector(6, rng)).is_homogeneous(6));
    }
}

TEST_CASE("specialisation to q-series")
{
    const auto u = universal_elliptic_genus(6);
    const auto s = specialize(u, delta1(7), eps1(7));
    const Partition top({6});
    // the coefficient of p_6 is linear in the delta^6, ..., eps^3 coefficients
    QRational expect(7);
    for (const auto &[m, c] : u[top].terms()) {
        auto term = QRational::one(7) * c;
        for (int i = 0; i < m.first; ++i) {
            term = term * delta1(7);
        }
        for (int i = 0; i < m.second; ++i) {
            term = term * eps1(7);
        }
        expect = expect + term;
    }
    CHECK(s[top] == expect);
}

TEST_CASE("genus errors")
{
    CHECK_THROWS_AS(evaluate_genus(universal_elliptic_genus(2), one_number(3)), std::invalid_argument);
    CHECK_THROWS(PontryaginVector(2, {{Partition({2}), Integer(1)}}));
    CHECK_THROWS(CharSeries<Rational>(ZSeries<Rational>(std::vector<Rational>{2, 0, 1}, 5)));
    CHECK_THROWS(CharSeries<Rational>(ZSeries<Rational>(std::vector<Rational>{1, 1}, 5)));
    const CharSeries<Rational> shortq(ZSeries<Rational>(std::vector<Rational>{1, 0, 1}, 4));
    CHECK_THROWS_AS(genus_polynomial(shortq, 2), std::invalid_argument);
}

TEST_CASE("genus polynomial serialisation")
{
    const auto j = genus_polynomial_to_json(signature_polynomial(2));
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == "[2]");
    CHECK(j[0][1] == "7/45");
    CHECK(j[1][0] == "[1,1]");
    CHECK(j[1][1] == "-1/45");
}
