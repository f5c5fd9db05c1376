#ifndef ELLCOB_STRING24_HPP
#define ELLCOB_STRING24_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ellcob/delta_eps.hpp>
#include <ellcob/genus.hpp>
#include <ellcob/hermite.hpp>
#include <ellcob/matrix.hpp>
#include <ellcob/modular.hpp>
#include <ellcob/twist.hpp>

// Dimension 24: the elliptic genus phi(M) = a0 delta^6 + a1 delta^4 eps +
// a2 delta^2 eps^2 + a3 eps^3 against the classical indices, the string
// cobordism invariants kappa and the image lattice.

namespace ellcob
{

// Coefficients (a0, a1, a2, a3) of delta^6, delta^4 eps, delta^2 eps^2, eps^3.
struct EllipticClass24 {
    Vector4 a;

    static EllipticClass24 from_poly(const DeltaEpsPoly &phi)
    {
        if (!phi.is_homogeneous(6)) {
            throw std::invalid_argument("dimension-24 elliptic genus must be homogeneous of weight 6");
        }
        return EllipticClass24{{phi.coeff(6, 0), phi.coeff(4, 1), phi.coeff(2, 2), phi.coeff(0, 3)}};
    }

    DeltaEpsPoly to_poly() const
    {
        DeltaEpsPoly p;
        p.add_term(6, 0, a[0]);
        p.add_term(4, 1, a[1]);
        p.add_term(2, 2, a[2]);
        p.add_term(0, 3, a[3]);
        return p;
    }

    // Coefficients of (8 delta)^6, (8 delta)^4 eps, (8 delta)^2 eps^2, eps^3.
    Vector4 in_8delta_basis() const
    {
        return {a[0] / Rational(ipow(2, 18)), a[1] / Rational(ipow(2, 12)), a[2] / Rational(ipow(2, 6)), a[3]};
    }

    static EllipticClass24 from_8delta_basis(const Vector4 &b)
    {
        return EllipticClass24{{b[0] * Rational(ipow(2, 18)), b[1] * Rational(ipow(2, 12)),
                                b[2] * Rational(ipow(2, 6)), b[3]}};
    }

    bool is_zero() const
    {
        for (const auto &x : a) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const EllipticClass24 &, const EllipticClass24 &) = default;
};

// kappa(M) = (A-hat(M), A-hat(M,T)/24, A-hat(M,Lambda^2), Sig(M)/8).
struct IndexQuadruple {
    Integer ahat;
    Integer ahat_t_over_24;
    Integer ahat_lambda2;
    Integer sig_over_8;

    Vector4 to_vector() const
    {
        return {Rational(ahat), Rational(ahat_t_over_24), Rational(ahat_lambda2), Rational(sig_over_8)};
    }

    // nullopt unless every entry is an integer.
    static std::optional<IndexQuadruple> from_vector(const Vector4 &v)
    {
        for (const auto &x : v) {
            if (!x.is_integer()) {
                return std::nullopt;
            }
        }
        return IndexQuadruple{v[0].numerator(), v[1].numerator(), v[2].numerator(), v[3].numerator()};
    }

    bool is_zero() const
    {
        return ahat == 0 && ahat_t_over_24 == 0 && ahat_lambda2 == 0 && sig_over_8 == 0;
    }

    friend bool operator==(const IndexQuadruple &, const IndexQuadruple &) = default;
};

// Linear system relating (a0..a3) to the first q-coefficients of Ell_1, Ell_2.
inline Matrix4 leading_coefficient_system()
{
    return Matrix4({{
        {Rational(1) / Rational(ipow(2, 18)), 0, 0, 0},
        {Rational(9) / Rational(ipow(2, 14)), Rational(1) / Rational(ipow(2, 12)), 0, 0},
        {1, 1, 1, 1},
        {144, 80, 16, -48},
    }});
}

// Maps (A-hat, A-hat(T), Sig(T), Sig) to the right-hand side
// (A-hat, -A-hat(T) + 24 A-hat, Sig, 2 Sig(T) - 48 Sig).
inline Matrix4 leading_coefficient_rhs()
{
    return Matrix4({{
        {1, 0, 0, 0},
        {24, -1, 0, 0},
        {0, 0, 0, 1},
        {0, 0, 2, -48},
    }});
}

// (a0, a1, a2, a3)^t = M * (A-hat, A-hat(T), Sig(T), Sig)^t for any oriented 24-manifold.
inline Matrix4 index_coefficient_matrix()
{
    const auto inv = leading_coefficient_system().inverse();
    if (!inv) {
        throw std::logic_error("leading-coefficient system is singular");
    }
    return *inv * leading_coefficient_rhs();
}

// index_coefficient_matrix() entered by hand.
inline Matrix4 index_coefficient_reference()
{
    return Matrix4({{
        {Rational(ipow(2, 18)), 0, 0, 0},
        {Rational(-ipow(2, 15) * 15), Rational(-ipow(2, 12)), 0, 0},
        {Rational(ipow(2, 16) * 3), Rational(ipow(2, 13)), Rational(1, 32), 0},
        {Rational(ipow(2, 15)), Rational(-ipow(2, 12)), Rational(-1, 32), 1},
    }});
}

// Sig(M, T) = 2^11 (A-hat(M, Lambda^2) - 47 A-hat(M, T) + 900 A-hat(M)) on string 24-manifolds.
inline Rational string_relation(const Rational &ahat, const Rational &ahat_t, const Rational &ahat_lambda2)
{
    return Rational(ipow(2, 11)) * (ahat_lambda2 - Rational(47) * ahat_t + Rational(900) * ahat);
}

// (A-hat, A-hat(T), Sig(T), Sig) in terms of kappa, using the string relation.
inline Matrix4 kappa_to_indices()
{
    const Rational s(ipow(2, 11));
    return Matrix4({{
        {1, 0, 0, 0},
        {0, 24, 0, 0},
        {s * Rational(900), s * Rational(-47 * 24), s, 0},
        {0, 0, 0, 8},
    }});
}

// (a0, a1, a2, a3)^t = M * kappa^t for string 24-manifolds.
inline Matrix4 kappa_coefficient_matrix()
{
    return index_coefficient_matrix() * kappa_to_indices();
}

// The same matrix entered by hand; the regression fixture for kappa_coefficient_matrix().
inline Matrix4 kappa_coefficient_reference()
{
    return Matrix4({{
        {Rational(ipow(2, 18)), 0, 0, 0},
        {Rational(-ipow(2, 15) * 15), Rational(-ipow(2, 15) * 3), 0, 0},
        {Rational(ipow(2, 8) * 3 * 331), Rational(ipow(2, 9) * 243), Rational(ipow(2, 6)), 0},
        {Rational(-ipow(2, 8) * 97), Rational(-ipow(2, 9) * 51), Rational(-ipow(2, 6)), Rational(ipow(2, 3))},
    }});
}

// Columns are kappa(M_1), ..., kappa(M_4) for an integral basis of string bordism.
inline Matrix4 basis_matrix_K()
{
    return Matrix4({{
        {0, 1, 0, 0},
        {-1, 0, 0, 0},
        {Rational(8 * 27 * 5), Rational(4 * 3 * 17 * 1069), -1, 0},
        {Rational(256 * 3 * 61), Rational(256 * 5 * 37), 28, 1},
    }});
}

// Columns are (a_0..a_3)(M_i).
inline Matrix4 image_matrix_raw()
{
    return kappa_coefficient_matrix() * basis_matrix_K();
}

// The same product entered by hand; fixture.
inline Matrix4 image_matrix_reference()
{
    return Matrix4({{
        {0, Rational(ipow(2, 18)), 0, 0},
        {Rational(ipow(2, 15) * 3), Rational(-ipow(2, 15) * 15), 0, 0},
        {Rational(-ipow(2, 11) * 27), Rational(ipow(2, 11) * 27 * 257), Rational(-ipow(2, 6)), 0},
        {Rational(ipow(2, 12) * 81), Rational(-ipow(2, 12) * 81 * 41), Rational(32 * 9), Rational(8)},
    }});
}

// image_matrix_raw rewritten in the (8 delta)-monomial basis; integral.
inline Matrix4 image_matrix()
{
    const Vector4 scale{Rational(1) / Rational(ipow(2, 18)), Rational(1) / Rational(ipow(2, 12)),
                        Rational(1) / Rational(ipow(2, 6)), Rational(1)};
    return Matrix4::diagonal(scale) * image_matrix_raw();
}

inline HermiteForm image_lattice_hnf()
{
    return column_hnf(IntMatrix::from(image_matrix()));
}

// Column Hermite basis of the image lattice in the (8 delta)-basis.
inline Matrix4 image_lattice_basis()
{
    return image_lattice_hnf().h.to_matrix4();
}

inline Vector4 a_from_kappa(const Vector4 &kappa)
{
    return kappa_coefficient_matrix() * kappa;
}

inline Vector4 kappa_from_a(const Vector4 &a)
{
    const auto inv = kappa_coefficient_matrix().inverse();
    if (!inv) {
        throw std::logic_error("string-relation matrix is singular");
    }
    return *inv * a;
}

// Coordinates of phi in the basis phi(M_1)..phi(M_4), or nullopt when phi is
// not in the image of string bordism.
inline std::optional<std::array<Integer, 4>> lattice_membership(const EllipticClass24 &phi)
{
    const Vector4 b = phi.in_8delta_basis();
    std::vector<Integer> rhs;
    for (const auto &x : b) {
        if (!x.is_integer()) {
            throw std::domain_error("elliptic class has non-integral (8 delta)-coordinates");
        }
        rhs.push_back(x.numerator());
    }
    const auto x = solve_in_lattice(image_lattice_hnf(), rhs);
    if (!x) {
        return std::nullopt;
    }
    return std::array<Integer, 4>{(*x)[0], (*x)[1], (*x)[2], (*x)[3]};
}

// W(M) = A-hat(M) DeltaBar + A-hat(M, T) Delta.
inline QRational witten_genus_24(const Rational &ahat, const Rational &ahat_t, std::size_t nu_order)
{
    return delta_bar(nu_order) * ahat + discriminant(nu_order) * ahat_t;
}

inline QRational witten_genus_24(const IndexQuadruple &kappa, std::size_t nu_order)
{
    return witten_genus_24(Rational(kappa.ahat), Rational(kappa.ahat_t_over_24) * Rational(24), nu_order);
}

struct ConsistencyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ClassificationReport {
    EllipticClass24 phi;
    std::optional<std::array<Integer, 4>> a_8delta_basis;
    bool in_spin_image = false;
    std::optional<IndexQuadruple> kappa;
    std::optional<QRational> witten_genus;
    bool in_string_image = false;
    std::optional<std::array<Integer, 4>> basis_coordinates;
    std::optional<bool> bounds_string; // nullopt: verdict refused
    std::vector<ConsistencyCheck> consistency;
    std::string error;

    bool refused() const
    {
        return !bounds_string.has_value();
    }
};

namespace detail
{

inline std::string vec_str(const Vector4 &v)
{
    return "(" + v[0].pretty() + ", " + v[1].pretty() + ", " + v[2].pretty() + ", " + v[3].pretty() + ")";
}

inline void fill_image_data(ClassificationReport &r)
{
    const Vector4 b = r.phi.in_8delta_basis();
    bool integral = true;
    for (const auto &x : b) {
        integral = integral && x.is_integer();
    }
    r.in_spin_image = integral;
    if (integral) {
        r.a_8delta_basis = std::array<Integer, 4>{b[0].numerator(), b[1].numerator(), b[2].numerator(),
                                                  b[3].numerator()};
        r.basis_coordinates = lattice_membership(r.phi);
        r.in_string_image = r.basis_coordinates.has_value();
    }
}

inline void finish_verdict(ClassificationReport &r)
{
    bool ok = r.kappa.has_value();
    for (const auto &c : r.consistency) {
        ok = ok && c.passed;
    }
    if (ok) {
        // injectivity: kappa = 0 iff phi = 0
        r.bounds_string = r.kappa->is_zero();
    } else {
        r.error = "input inconsistent with a string manifold";
    }
}

} // namespace detail

inline ClassificationReport classify(const IndexQuadruple &kappa, std::size_t nu_order = 6)
{
    ClassificationReport r;
    r.kappa = kappa;
    r.phi = EllipticClass24{a_from_kappa(kappa.to_vector())};
    r.witten_genus = witten_genus_24(kappa, nu_order);
    detail::fill_image_data(r);
    r.consistency.push_back({"kappa-integral", true, "kappa supplied as integers"});
    const auto expected = basis_matrix_K().inverse().value() * kappa.to_vector();
    bool coords_ok = r.basis_coordinates.has_value();
    if (coords_ok) {
        for (std::size_t i = 0; i < 4; ++i) {
            coords_ok = coords_ok && Rational((*r.basis_coordinates)[i]) == expected[i];
        }
    }
    r.consistency.push_back({"basis-coordinates-match-K-inverse", coords_ok, detail::vec_str(expected)});
    detail::finish_verdict(r);
    return r;
}

// Rational kappa: a non-integral entry yields a refused report.
inline ClassificationReport classify(const Vector4 &kappa, std::size_t nu_order = 6)
{
    if (const auto integral = IndexQuadruple::from_vector(kappa)) {
        return classify(*integral, nu_order);
    }
    ClassificationReport r;
    r.phi = EllipticClass24{a_from_kappa(kappa)};
    r.witten_genus = witten_genus_24(kappa[0], kappa[1] * Rational(24), nu_order);
    detail::fill_image_data(r);
    r.consistency.push_back({"kappa-integral", false, detail::vec_str(kappa)});
    detail::finish_verdict(r);
    return r;
}

inline ClassificationReport classify(const PontryaginVector &v, std::size_t nu_order = 6)
{
    if (v.dimension() != 24) {
        throw std::invalid_argument("classification needs a 24-dimensional Pontryagin vector, got dimension "
                                    + std::to_string(v.dimension()));
    }
    ClassificationReport r;
    r.phi = EllipticClass24::from_poly(elliptic_genus(v));
    const TwistedIndices idx = twisted_indices(v);
    r.witten_genus = witten_genus_24(idx.ahat, idx.ahat_t, nu_order);
    detail::fill_image_data(r);

    const Vector4 via_indices = index_coefficient_matrix() * Vector4{idx.ahat, idx.ahat_t, idx.sig_t, idx.sig};
    r.consistency.push_back(
        {"elliptic-genus-vs-twisted-indices", via_indices == r.phi.a, detail::vec_str(via_indices)});

    const Rational rel = string_relation(idx.ahat, idx.ahat_t, idx.ahat_lambda2);
    r.consistency.push_back({"string-relation", rel == idx.sig_t,
                             "Sig(M,T) = " + idx.sig_t.pretty() + ", 2^11(...) = " + rel.pretty()});

    const Vector4 direct{idx.ahat, idx.ahat_t / Rational(24), idx.ahat_lambda2, idx.sig / Rational(8)};
    const Vector4 inverted = kappa_from_a(r.phi.a);
    r.consistency.push_back({"kappa-direct-vs-inverted", direct == inverted, detail::vec_str(direct)});

    r.kappa = IndexQuadruple::from_vector(inverted);
    r.consistency.push_back({"kappa-integral", r.kappa.has_value(), detail::vec_str(inverted)});
    detail::finish_verdict(r);
    return r;
}

} // namespace ellcob

#endif
