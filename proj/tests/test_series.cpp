#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <ellcob/delta_eps.hpp>
#include <ellcob/partition.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/series.hpp>
#include <ellcob/weighted_poly.hpp>

using namespace ellcob;
using Q = QSeries<Rational>;
using Z = ZSeries<Rational>;
using ZD = ZSeries<DeltaEpsPoly>;

namespace
{

Z zpoly(std::vector<Rational> c, std::size_t order)
{
    return Z(std::move(c), order);
}

Q random_series(std::mt19937_64 &rng, std::size_t order, bool unit)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rational> c(order);
    for (auto &x : c) {
        x = Rational(num(rng), den(rng));
    }
    if (unit) {
        c[0] = Rational(1);
    }
    return Q(std::move(c), order);
}

// binom(2n, n)
Integer central_binomial(unsigned long n)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse(" -4 ") == Rational(-4));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(5).pretty() == "5");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(to_integer(Rational(12, 4)) == 3);
    CHECK_THROWS(to_integer(Rational(1, 3)));
}

TEST_CASE("ring operations")
{
    const auto nu2 = Q::monomial(Rational(1), 2);
    CHECK((Q::one() + nu2) * (Q::one() - nu2) == Q::one() - Q::monomial(Rational(1), 4));
    const auto s = Q(std::vector<Rational>{1, 2, 3}, 5);
    CHECK(Q() + s == s);
    const auto q = Q::monomial(Rational(1), 2);
    const auto expect = Q(std::vector<Rational>{1, 0, 2, 0, 1}, exact_order);
    CHECK((Q::one() + q) * (Q::one() + q) == expect);
}

TEST_CASE("truncation is propagated, never extended")
{
    const auto a = Q(std::vector<Rational>{1, 1}, 4);
    const auto b = Q(std::vector<Rational>{1}, 6);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    const auto nu3 = Q::monomial(Rational(1), 3);
    CHECK((a * nu3).order() == 7);
    CHECK((a * nu3).coeff(3) == Rational(1));
    CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
    CHECK(Q::one().is_exact());
}

TEST_CASE("invert")
{
    const auto s = Q(std::vector<Rational>{1, 0, -1}, 12);
    const auto inv = invert(s);
    for (std::size_t n = 0; n < 12; n += 2) {
        CHECK(inv.coeff(n) == Rational(1));
    }
    CHECK(invert(Q::constant(Rational(2))) == Q::constant(Rational(1, 2)));
    CHECK_THROWS_AS(invert(Q::monomial(Rational(1), 1, 5)), not_invertible);
    try {
        invert(Q(std::vector<Rational>{0, 1}, 5));
    } catch (const not_invertible &e) {
        CHECK(std::string(e.what()).find("not invertible") != std::string::npos);
    }

    // 1 - 2 delta t^2 + eps t^4 -> 1 + 2 delta t^2 + (4 delta^2 - eps) t^4 + ...
    const auto d = DeltaEpsPoly::delta(), e = DeltaEpsPoly::eps();
    const ZD quartic(std::vector<DeltaEpsPoly>{1, 0, d * Rational(-2), 0, e}, 9);
    const auto qi = invert(quartic);
    CHECK(qi.coeff(2) == d * Rational(2));
    CHECK(qi.coeff(4) == d * d * Rational(4) - e);
    CHECK(qi * quartic == ZD::one(9));
}

TEST_CASE("inv_sqrt")
{
    CHECK(inv_sqrt(Q::one(), 6) == Q::one(6));
    const auto d = DeltaEpsPoly::delta(), e = DeltaEpsPoly::eps();
    const ZD quartic(std::vector<DeltaEpsPoly>{1, 0, d * Rational(-2), 0, e}, exact_order);
    const auto r = inv_sqrt(quartic, 11);
    CHECK(r.coeff(2) == d);
    CHECK(r.coeff(4) == (d * d * Rational(3) - e) * Rational(1, 2));
    CHECK(r * r * quartic == ZD::one(11));

    const auto s = Q(std::vector<Rational>{1, -4}, exact_order);
    const auto cb = inv_sqrt(s, 15);
    for (unsigned long n = 0; n < 15; ++n) {
        CHECK(cb.coeff(n) == Rational(central_binomial(n)));
    }
    CHECK_THROWS(inv_sqrt(Q(std::vector<Rational>{2, 1}, 5)));
}

TEST_CASE("integrate and derivative")
{
    CHECK(integrate(Z::one(6)) == Z::monomial(Rational(1), 1, 7));
    const auto d = DeltaEpsPoly::delta();
    const ZD s(std::vector<DeltaEpsPoly>{1, 0, d}, exact_order);
    const ZD expect(std::vector<DeltaEpsPoly>{0, 1, 0, d * Rational(1, 3)}, exact_order);
    CHECK(integrate(s) == expect);
    const auto p = zpoly({3, 1, 4, 1, 5}, 9);
    CHECK(derivative(integrate(p)) == p);
    CHECK(integrate(p).order() == 10);
    CHECK(derivative(p).order() == 8);
}

TEST_CASE("reversion")
{
    const auto z = Z::variable_x(12);
    CHECK(reversion(z) == z);
    const auto f = zpoly({0, 1, 0, 1}, 12);
    const auto g = reversion(f);
    CHECK(g.coeff(3) == Rational(-1));
    CHECK(g.coeff(5) == Rational(3));
    CHECK(compose(f, g) == z);
    CHECK(compose(g, f) == z);
    CHECK_THROWS(reversion(zpoly({1, 1}, 6)));
    CHECK_THROWS(reversion(zpoly({0, 2}, 6)));
    CHECK_THROWS(reversion(zpoly({0, 1}, exact_order)));

    const auto d = DeltaEpsPoly::delta();
    const ZD gd(std::vector<DeltaEpsPoly>{0, 1, 0, d * Rational(1, 3)}, 8);
    const auto fd = reversion(gd);
    CHECK(fd.coeff(3) == d * Rational(-1, 3));
    CHECK(compose(gd, fd) == ZD::variable_x(8));
}

TEST_CASE("compose")
{
    const auto z = Z::variable_x();
    const auto f = zpoly({1, 2, 3}, 8);
    CHECK(compose(f, z) == f);
    const auto zz = Z::monomial(Rational(1), 2);
    CHECK(compose(zz, zpoly({0, 1, 1}, exact_order)) == zpoly({0, 0, 1, 2, 1}, exact_order));
    const auto scaled = compose(zpoly({1, 1, 1, 1}, exact_order), Z::monomial(Rational(2), 1));
    CHECK(scaled == zpoly({1, 2, 4, 8}, exact_order));
    CHECK_THROWS(compose(f, zpoly({1, 1}, 5)));
}

TEST_CASE("exp and log are inverse")
{
    const auto s = zpoly({0, 1, Rational(1, 2), -3}, 10);
    CHECK(log(exp(s)) == s);
    const auto e = exp(Z::variable_x(8));
    for (unsigned long n = 0; n < 8; ++n) {
        CHECK(e.coeff(n) == Rational(1) / Rational(factorial(n)));
    }
    CHECK_THROWS(log(zpoly({2, 1}, 5)));
    CHECK_THROWS(exp(zpoly({1, 1}, 5)));
}

TEST_CASE("randomised ring axioms and defining identities", "[property]")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_series(rng, 9, false);
        const auto b = random_series(rng, 7, false);
        const auto c = random_series(rng, 8, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);

        const auto u = random_series(rng, 10, true);
        CHECK(u * invert(u) == Q::one(10));
        const auto r = inv_sqrt(u);
        CHECK(r * r * u == Q::one(10));

        std::vector<Rational> fc(10);
        fc[1] = Rational(1);
        for (std::size_t i = 2; i < 10; ++i) {
            fc[i] = u.coeff(i);
        }
        const Z f(fc, 10);
        CHECK(compose(f, reversion(f)) == Z::variable_x(10));
    }
}

TEST_CASE("substitute_monomial")
{
    const auto t = TSeries<Rational>(std::vector<Rational>{1, 1, 1, 1, 1}, 5);
    const auto s = substitute_monomial<nu_variable>(t, Rational(-1), 3, 10);
    CHECK(s.order() == 10);
    CHECK(s.coeff(3) == Rational(-1));
    CHECK(s.coeff(6) == Rational(1));
    CHECK(s.coeff(9) == Rational(-1));
}

TEST_CASE("delta-eps polynomials")
{
    const auto d = DeltaEpsPoly::delta(), e = DeltaEpsPoly::eps();
    const auto p = d * d * Rational(3, 2) - e * Rational(1, 2);
    CHECK(p.pretty() == "3/2*delta^2 - 1/2*eps");
    CHECK(p.is_homogeneous(2));
    CHECK_FALSE((p + d).is_homogeneous(2));
    CHECK(DeltaEpsPoly().pretty() == "0");
    CHECK((d - d).is_zero());
    CHECK(substitute(p, Rational(1), Rational(1)) == Rational(1));
}

TEST_CASE("partitions")
{
    CHECK(partitions(6).size() == 11);
    const auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].str() == "[4]");
    CHECK(p4[1].str() == "[3,1]");
    CHECK(p4[2].str() == "[2,2]");
    CHECK(p4[3].str() == "[2,1,1]");
    CHECK(p4[4].str() == "[1,1,1,1]");
    CHECK(Partition::parse("[2, 1,1]") == Partition({2, 1, 1}));
    CHECK(Partition::parse("[1,2]") == Partition({2, 1}));
    CHECK_THROWS(Partition::parse("[2,x]"));
    CHECK_THROWS(Partition::parse("2,1"));
}

TEST_CASE("weighted polynomials respect the cap")
{
    using W = WeightedPoly<Rational>;
    const auto x = W::variable(1, Rational(1), 2);
    const auto cube = x * x * x;
    CHECK(cube.is_zero());
    const auto e = exp(x);
    CHECK(e.coeff(Partition({1, 1})) == Rational(1, 2));
}
