#ifndef ELLCOB_IO_HPP
#define ELLCOB_IO_HPP

#include <climits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <ellcob/delta_eps.hpp>
#include <ellcob/genus.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/series.hpp>
#include <ellcob/string24.hpp>

// Text and JSON forms. Rationals serialise as "num/den" strings; series as
// arrays of [exponent, "num/den"] pairs listing the nonzero coefficients
// (exponents of q-series in nu = q^(1/2) units).

namespace ellcob
{

using json = nlohmann::json;

namespace detail
{

inline std::string q_power(std::size_t nu_exponent)
{
    if (nu_exponent % 2 == 1) {
        return "q^(" + std::to_string(nu_exponent) + "/2)";
    }
    const std::size_t e = nu_exponent / 2;
    return e == 1 ? "q" : "q^" + std::to_string(e);
}

} // namespace detail

// "1/4 + 6*q + 6*q^2 + O(q^3)"; half powers as q^(1/2).
inline std::string format_qseries(const QSeries<Rational> &s)
{
    std::ostringstream os;
    bool first = true;
    const auto &c = s.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) {
            continue;
        }
        const Rational mag = c[i].sign() < 0 ? -c[i] : c[i];
        if (first) {
            os << (c[i].sign() < 0 ? "-" : "");
        } else {
            os << (c[i].sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.pretty();
        } else if (mag.is_one()) {
            os << detail::q_power(i);
        } else {
            os << mag.pretty() << "*" << detail::q_power(i);
        }
    }
    if (!s.is_exact()) {
        if (!first) {
            os << " + ";
        }
        os << "O(" << (s.order() == 0 ? std::string("1") : detail::q_power(s.order())) << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

inline json to_json(const Rational &r)
{
    return r.str();
}

inline Rational rational_from_json(const json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw std::invalid_argument("expected a rational as \"num/den\" string");
}

// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
inline json to_json(const Integer &n)
{
    if (n.fits_slong_p()) {
        return static_cast<long long>(n.get_si());
    }
    return n.get_str();
}

inline Integer integer_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        const Rational r = Rational::parse(j.get<std::string>());
        return to_integer(r);
    }
    throw std::invalid_argument("expected an integer");
}

template <CoefficientRing R, typename Var>
json series_to_json(const TruncatedSeries<R, Var> &s)
{
    json arr = json::array();
    const auto &c = s.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!ring_traits<R>::is_zero(c[i])) {
            arr.push_back(json::array({i, to_json(c[i])}));
        }
    }
    return arr;
}

inline QSeries<Rational> qseries_from_json(const json &arr, std::size_t order)
{
    std::vector<Rational> c;
    for (const auto &entry : arr) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument("series entries must be [exponent, \"num/den\"] pairs");
        }
        const auto e = entry[0].get<std::size_t>();
        if (c.size() <= e) {
            c.resize(e + 1);
        }
        c[e] = rational_from_json(entry[1]);
    }
    return QSeries<Rational>(std::move(c), order);
}

inline json to_json(const DeltaEpsPoly &p)
{
    json arr = json::array();
    for (const auto &[m, c] : p.terms()) {
        arr.push_back(json::array({json::array({m.first, m.second}), c.str()}));
    }
    return arr;
}

template <typename R>
json genus_polynomial_to_json(const GenusPolynomial<R> &g)
{
    json arr = json::array();
    for (const auto &[p, c] : g.coefficients()) {
        arr.push_back(json::array({p.str(), to_json(c)}));
    }
    return arr;
}

inline json to_json(const QSeries<Rational> &s)
{
    return series_to_json(s);
}

// Dimension-4k record as read from disk.
struct ManifoldRecord {
    std::string name;
    int dim = 0;
    std::optional<PontryaginVector> pontryagin;
    std::optional<Vector4> kappa; // rational so that bad input can be reported
};

inline ManifoldRecord record_from_json(const json &j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("manifold record must be a JSON object");
    }
    ManifoldRecord r;
    r.name = j.value("name", std::string{});
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw std::invalid_argument("manifold record needs an integer \"dim\"");
    }
    r.dim = j["dim"].get<int>();
    if (r.dim <= 0 || r.dim % 4 != 0) {
        throw std::invalid_argument("dimension must be a positive multiple of 4");
    }
    if (j.contains("pontryagin") && !j["pontryagin"].is_null()) {
        PontryaginVector::number_map m;
        for (const auto &[key, value] : j["pontryagin"].items()) {
            const auto p = Partition::parse(key);
            if (p.weight() != r.dim / 4) {
                throw std::invalid_argument("partition " + key + " does not have weight dim/4");
            }
            if (!m.emplace(p, integer_from_json(value)).second) {
                throw std::invalid_argument("duplicate partition key " + key);
            }
        }
        r.pontryagin = PontryaginVector(r.dim / 4, std::move(m));
    }
    if (j.contains("kappa") && !j["kappa"].is_null()) {
        if (r.dim != 24) {
            throw std::invalid_argument("kappa is only defined for dimension 24");
        }
        const auto &k = j["kappa"];
        if (!k.is_array() || k.size() != 4) {
            throw std::invalid_argument("kappa must be an array of 4 numbers");
        }
        r.kappa = Vector4{rational_from_json(k[0]), rational_from_json(k[1]), rational_from_json(k[2]),
                          rational_from_json(k[3])};
    }
    if (!r.pontryagin && !r.kappa) {
        throw std::invalid_argument("manifold record needs \"pontryagin\" or \"kappa\"");
    }
    return r;
}

inline json record_to_json(const ManifoldRecord &r)
{
    json j;
    j["name"] = r.name;
    j["dim"] = r.dim;
    if (r.pontryagin) {
        json p = json::object();
        for (const auto &[part, v] : r.pontryagin->numbers()) {
            p[part.str()] = to_json(v);
        }
        j["pontryagin"] = p;
    }
    if (r.kappa) {
        json k = json::array();
        for (const auto &x : *r.kappa) {
            k.push_back(x.is_integer() ? to_json(x.numerator()) : to_json(x));
        }
        j["kappa"] = k;
    }
    return j;
}

inline json report_to_json(const ClassificationReport &r, const std::string &name = {})
{
    json j;
    j["name"] = name;
    json a = json::array();
    for (const auto &x : r.phi.a) {
        a.push_back(to_json(x));
    }
    j["a_delta_eps"] = a;
    auto ints = [](const std::optional<std::array<Integer, 4>> &v) -> json {
        if (!v) {
            return nullptr;
        }
        json arr = json::array();
        for (const auto &x : *v) {
            arr.push_back(to_json(x));
        }
        return arr;
    };
    j["a_8delta_basis"] = ints(r.a_8delta_basis);
    j["in_spin_image"] = r.in_spin_image;
    if (r.kappa) {
        j["kappa"] = ints(std::array<Integer, 4>{r.kappa->ahat, r.kappa->ahat_t_over_24, r.kappa->ahat_lambda2,
                                                 r.kappa->sig_over_8});
    } else {
        j["kappa"] = nullptr;
    }
    if (r.witten_genus) {
        j["witten_genus"] = series_to_json(*r.witten_genus);
        j["witten_genus_order"] = r.witten_genus->order();
        j["witten_genus_text"] = format_qseries(*r.witten_genus);
    } else {
        j["witten_genus"] = nullptr;
    }
    j["in_string_image"] = r.in_string_image;
    j["basis_coordinates"] = ints(r.basis_coordinates);
    j["bounds_string"] = r.bounds_string ? json(*r.bounds_string) : json(nullptr);
    json checks = json::array();
    for (const auto &c : r.consistency) {
        checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    }
    j["consistency"] = checks;
    if (r.refused()) {
        j["error"] = r.error;
    }
    return j;
}

} // namespace ellcob

#endif
