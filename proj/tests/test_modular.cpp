#include <catch2/catch_amalgamated.hpp>

#include <ellcob/io.hpp>
#include <ellcob/modular.hpp>

using namespace ellcob;

namespace
{

// sum_{n in Z} nu^{n^2}: theta_3 as a lattice sum, no products involved.
QRational theta3_lattice_sum(std::size_t nu_order)
{
    std::vector<Rational> c(nu_order);
    for (long n = -static_cast<long>(nu_order); n <= static_cast<long>(nu_order); ++n) {
        const auto e = static_cast<std::size_t>(n * n);
        if (e < nu_order) {
            c[e] += Rational(1);
        }
    }
    return QRational(std::move(c), nu_order);
}

// q prod (1 - q^n)^24 by multiplying out explicit integer polynomials.
std::vector<Integer> discriminant_by_hand(std::size_t q_terms)
{
    std::vector<Integer> p(q_terms, Integer(0));
    p[0] = 1;
    for (std::size_t n = 1; n < q_terms; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (std::size_t i = q_terms - 1; i >= n; --i) {
                p[i] -= p[i - n];
            }
        }
    }
    std::vector<Integer> r(q_terms, Integer(0));
    for (std::size_t i = 1; i < q_terms; ++i) {
        r[i] = p[i - 1];
    }
    return r;
}

} // namespace

TEST_CASE("theta constants")
{
    const auto t3 = theta_constant(ThetaKind::theta3, 30);
    CHECK(t3.prefactor_eighths() == 0);
    CHECK(t3.to_qseries() == theta3_lattice_sum(30));

    const auto t1 = theta_constant(ThetaKind::theta1, 10);
    CHECK(t1.prefactor_eighths() == 1);
    CHECK(t1.body().coeff(0) == Rational(2));
    CHECK_THROWS_AS(t1.to_qseries(), std::domain_error);
    CHECK(t1.pow(4).to_qseries().valuation() == 1);

    CHECK_THROWS_AS(theta_constant(ThetaKind::theta, 10), std::domain_error);
    CHECK_THROWS_AS(theta_constant(ThetaKind::theta3, 10, 2), std::invalid_argument);
    // more factors than needed changes nothing
    CHECK(theta_constant(ThetaKind::theta2, 10, 9).body() == theta_constant(ThetaKind::theta2, 10).body());

    // eps_1 = theta_2^4 theta_3^4 / 16
    const auto prod = (theta_constant(ThetaKind::theta2, 21).pow(4) * theta_constant(ThetaKind::theta3, 21).pow(4))
                          .to_qseries()
                      * Rational(1, 16);
    CHECK(prod == eps1(21));

    const auto ratio = t1 / t1;
    CHECK(ratio.prefactor_eighths() == 0);
    CHECK(ratio.to_qseries() == QRational::one(10));
}

TEST_CASE("modular parameters: displayed leading terms")
{
    CHECK(format_qseries(delta1(6)) == "1/4 + 6*q + 6*q^2 + O(q^3)");
    CHECK(format_qseries(eps1(6)) == "1/16 - q + 7*q^2 + O(q^3)");
    CHECK(format_qseries(delta2(3)) == "-1/8 - 3*q^(1/2) - 3*q + O(q^(3/2))");
    CHECK(format_qseries(eps2(3)) == "q^(1/2) + 8*q + O(q^(3/2))");
}

TEST_CASE("theta path equals divisor sums through q^10")
{
    const std::size_t n = 21;
    CHECK(delta1(n) == divisor_sum_oracle(ModularParameter::delta1, n));
    CHECK(eps1(n) == divisor_sum_oracle(ModularParameter::eps1, n));
    CHECK(delta2(n) == divisor_sum_oracle(ModularParameter::delta2, n));
    CHECK(eps2(n) == divisor_sum_oracle(ModularParameter::eps2, n));

    CHECK(divisor_sum_oracle(ModularParameter::delta1, 8).coeff(6) == Rational(24));
    CHECK(divisor_sum_oracle(ModularParameter::eps1, 8).coeff(4) == Rational(7));
    CHECK(divisor_sum_oracle(ModularParameter::eps2, 8).coeff(2) == Rational(8));
}

TEST_CASE("Eisenstein series and discriminant")
{
    CHECK(format_qseries(e4(6)) == "1 + 240*q + 2160*q^2 + O(q^3)");
    const auto by_hand = discriminant_by_hand(10);
    const auto d = discriminant(20);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(d.coeff(2 * i) == Rational(by_hand[i]));
        CHECK(d.coeff(2 * i + 1).is_zero());
    }
    CHECK(d.coeff(6) == Rational(252));
    CHECK(delta_bar(8).coeff(0) == Rational(1));
    CHECK(delta_bar(8).coeff(2) == Rational(-24));
    // E_4^3 - Delta_bar = 744 Delta
    const auto e = e4(16);
    CHECK(e * e * e - delta_bar(16) == discriminant(16) * Rational(744));
}

TEST_CASE("Jacobi quartic solutions")
{
    for (int kind = 1; kind <= 2; ++kind) {
        const auto f = jacobi_solution(kind, 14, 12);
        CHECK(f.kind == kind);
        CHECK(f.series.coeff(1) == QRational::one(12));
        for (std::size_t i = 0; i < 14; i += 2) {
            CHECK(f.series.coeff(i).is_zero());
        }
        const auto r = jacobi_quartic_residual(f.series, kind == 1 ? delta1(12) : delta2(12),
                                               kind == 1 ? eps1(12) : eps2(12));
        for (std::size_t i = 0; i < r.order(); ++i) {
            CHECK(r.coeff(i).is_zero());
        }
    }
    // q = 0: z - z^3/12 and z + z^3/24
    CHECK(jacobi_solution(1, 4, 1).series.coeff(3).coeff(0) == Rational(-1, 12));
    CHECK(jacobi_solution(2, 4, 1).series.coeff(3).coeff(0) == Rational(1, 24));
    // the wrong parameters leave a residual
    const auto f1 = jacobi_solution(1, 8, 4).series;
    const auto bad = jacobi_quartic_residual(f1, delta2(4), eps2(4));
    bool any = false;
    for (std::size_t i = 0; i < bad.order(); ++i) {
        any = any || !bad.coeff(i).is_zero();
    }
    CHECK(any);
    CHECK_THROWS(jacobi_solution(3, 8, 4));
    CHECK_THROWS(jacobi_solution(1, 2, 4));
}
