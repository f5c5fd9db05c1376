#ifndef ELLCOB_DELTA_EPS_HPP
#define ELLCOB_DELTA_EPS_HPP

#include <algorithm>
#include <concepts>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <ellcob/rational.hpp>
#include <ellcob/ring.hpp>

namespace ellcob
{

// Element of Q[delta, eps], graded by weight(delta) = 1, weight(eps) = 2.
class DeltaEpsPoly
{
public:
    // (a, b) stands for delta^a eps^b.
    using Monomial = std::pair<int, int>;

    DeltaEpsPoly() = default;

    DeltaEpsPoly(const Rational &c)
    {
        add_term(0, 0, c);
    }

    template <std::integral I>
    DeltaEpsPoly(I c) : DeltaEpsPoly(Rational(c))
    {
    }

    static DeltaEpsPoly delta()
    {
        return monomial(1, 0);
    }
    static DeltaEpsPoly eps()
    {
        return monomial(0, 1);
    }
    static DeltaEpsPoly monomial(int a, int b, const Rational &c = Rational(1))
    {
        DeltaEpsPoly p;
        p.add_term(a, b, c);
        return p;
    }

    void add_term(int a, int b, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    const std::map<Monomial, Rational> &terms() const
    {
        return terms_;
    }

    Rational coeff(int a, int b) const
    {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rational{} : it->second;
    }

    bool is_zero() const
    {
        return terms_.empty();
    }

    static int weight(const Monomial &m)
    {
        return m.first + 2 * m.second;
    }

    bool is_homogeneous(int w) const
    {
        for (const auto &[m, c] : terms_) {
            if (weight(m) != w) {
                return false;
            }
        }
        return true;
    }

    DeltaEpsPoly &operator+=(const DeltaEpsPoly &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m.first, m.second, c);
        }
        return *this;
    }
    DeltaEpsPoly &operator-=(const DeltaEpsPoly &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m.first, m.second, -c);
        }
        return *this;
    }
    friend DeltaEpsPoly operator+(DeltaEpsPoly a, const DeltaEpsPoly &b)
    {
        return a += b;
    }
    friend DeltaEpsPoly operator-(DeltaEpsPoly a, const DeltaEpsPoly &b)
    {
        return a -= b;
    }
    friend DeltaEpsPoly operator-(const DeltaEpsPoly &a)
    {
        DeltaEpsPoly r;
        for (const auto &[m, c] : a.terms_) {
            r.terms_.emplace(m, -c);
        }
        return r;
    }
    friend DeltaEpsPoly operator*(const DeltaEpsPoly &a, const DeltaEpsPoly &b)
    {
        DeltaEpsPoly r;
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
            }
        }
        return r;
    }
    friend DeltaEpsPoly operator*(const DeltaEpsPoly &a, const Rational &s)
    {
        DeltaEpsPoly r;
        if (s.is_zero()) {
            return r;
        }
        for (const auto &[m, c] : a.terms_) {
            r.terms_.emplace(m, c * s);
        }
        return r;
    }
    friend bool operator==(const DeltaEpsPoly &a, const DeltaEpsPoly &b) = default;

    // Human-readable form, highest delta power first: "3/2*delta^2 - 1/2*eps".
    std::string pretty() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
        std::stable_sort(ordered.begin(), ordered.end(), [](const auto &x, const auto &y) {
            if (weight(x.first) != weight(y.first)) {
                return weight(x.first) > weight(y.first);
            }
            return x.first.first > y.first.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : ordered) {
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) {
                    os << "-";
                }
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            std::string mono;
            auto factor = [&mono](const char *name, int e) {
                if (e == 0) {
                    return;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += name;
                if (e > 1) {
                    mono += "^" + std::to_string(e);
                }
            };
            factor("delta", m.first);
            factor("eps", m.second);
            if (mono.empty()) {
                os << mag.pretty();
            } else if (mag.is_one()) {
                os << mono;
            } else {
                os << mag.pretty() << "*" << mono;
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const DeltaEpsPoly &p)
    {
        return os << p.pretty();
    }

private:
    std::map<Monomial, Rational> terms_;
};

template <>
struct ring_traits<DeltaEpsPoly> {
    static DeltaEpsPoly zero()
    {
        return {};
    }
    static DeltaEpsPoly one()
    {
        return DeltaEpsPoly(Rational(1));
    }
    static bool is_zero(const DeltaEpsPoly &p)
    {
        return p.is_zero();
    }
    static bool is_one(const DeltaEpsPoly &p)
    {
        return p.terms().size() == 1 && p.coeff(0, 0).is_one();
    }
    static DeltaEpsPoly inverse(const DeltaEpsPoly &p)
    {
        if (p.terms().size() != 1 || p.terms().begin()->first != DeltaEpsPoly::Monomial{0, 0}) {
            throw not_invertible("non-constant element of Q[delta, eps]");
        }
        return DeltaEpsPoly(Rational(1) / p.coeff(0, 0));
    }
};

static_assert(CoefficientRing<DeltaEpsPoly>);

// Evaluates p at delta = d, eps = e in any ring containing the rationals
// through scalar multiplication.
template <CoefficientRing T>
T substitute(const DeltaEpsPoly &p, const T &d, const T &e)
{
    int max_a = 0, max_b = 0;
    for (const auto &[m, c] : p.terms()) {
        max_a = std::max(max_a, m.first);
        max_b = std::max(max_b, m.second);
    }
    std::vector<T> dp{ring_traits<T>::one()}, ep{ring_traits<T>::one()};
    for (int i = 1; i <= max_a; ++i) {
        dp.push_back(dp.back() * d);
    }
    for (int i = 1; i <= max_b; ++i) {
        ep.push_back(ep.back() * e);
    }
    T r = ring_traits<T>::zero();
    for (const auto &[m, c] : p.terms()) {
        r += (dp[static_cast<std::size_t>(m.first)] * ep[static_cast<std::size_t>(m.second)]) * c;
    }
    return r;
}

} // namespace ellcob

#endif
