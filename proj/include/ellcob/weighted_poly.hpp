#ifndef ELLCOB_WEIGHTED_POLY_HPP
#define ELLCOB_WEIGHTED_POLY_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include <ellcob/partition.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/ring.hpp>

namespace ellcob
{

// Polynomial in graded variables x_1, x_2, ... with weight(x_j) = j. A
// monomial x_{l1} x_{l2} ... is keyed by the partition (l1, l2, ...), so the
// weight of a monomial is the size of its partition. Terms of weight above
// the cap are dropped on construction and after every product.
//
// The same type carries power-sum polynomials (x_j = ps_j) and Pontryagin
// polynomials (x_j = p_j); which basis is meant is fixed by the caller.
template <CoefficientRing R>
class WeightedPoly
{
public:
    static constexpr int unbounded = std::numeric_limits<int>::max();
    using term_map = std::map<Partition, R, PartitionOrder>;

    explicit WeightedPoly(int cap = unbounded) : cap_(cap) {}

    static WeightedPoly constant(const R &c, int cap = unbounded)
    {
        WeightedPoly p(cap);
        p.add_term(Partition{}, c);
        return p;
    }

    // c * x_index
    static WeightedPoly variable(int index, const R &c, int cap = unbounded)
    {
        WeightedPoly p(cap);
        p.add_term(Partition{index}, c);
        return p;
    }

    int cap() const
    {
        return cap_;
    }
    const term_map &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }

    R coeff(const Partition &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_traits<R>::zero() : it->second;
    }

    void add_term(const Partition &m, const R &c)
    {
        if (m.weight() > cap_ || ring_traits<R>::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (ring_traits<R>::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    // Homogeneous component of weight w.
    WeightedPoly weight_part(int w) const
    {
        WeightedPoly r(cap_);
        for (const auto &[m, c] : terms_) {
            if (m.weight() == w) {
                r.terms_.emplace(m, c);
            }
        }
        return r;
    }

    WeightedPoly with_cap(int cap) const
    {
        WeightedPoly r(cap);
        for (const auto &[m, c] : terms_) {
            r.add_term(m, c);
        }
        return r;
    }

    WeightedPoly &operator+=(const WeightedPoly &o)
    {
        cap_ = std::min(cap_, o.cap_);
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = it->first.weight() > cap_ ? terms_.erase(it) : std::next(it);
        }
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    WeightedPoly &operator-=(const WeightedPoly &o)
    {
        return *this += -o;
    }
    friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly &b)
    {
        return a += b;
    }
    friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly &b)
    {
        return a -= b;
    }
    friend WeightedPoly operator-(const WeightedPoly &a)
    {
        WeightedPoly r(a.cap_);
        for (const auto &[m, c] : a.terms_) {
            r.terms_.emplace(m, -c);
        }
        return r;
    }
    friend WeightedPoly operator*(const WeightedPoly &a, const WeightedPoly &b)
    {
        WeightedPoly r(std::min(a.cap_, b.cap_));
        for (const auto &[ma, ca] : a.terms_) {
            const int wa = ma.weight();
            for (const auto &[mb, cb] : b.terms_) {
                if (wa + mb.weight() > r.cap_) {
                    continue;
                }
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }
    friend WeightedPoly operator*(const WeightedPoly &a, const Rational &s)
    {
        WeightedPoly r(a.cap_);
        for (const auto &[m, c] : a.terms_) {
            r.add_term(m, c * s);
        }
        return r;
    }

    // Coefficientwise scaling by a ring element.
    WeightedPoly scaled(const R &s) const
    {
        WeightedPoly r(cap_);
        for (const auto &[m, c] : terms_) {
            r.add_term(m, c * s);
        }
        return r;
    }

    friend bool operator==(const WeightedPoly &a, const WeightedPoly &b)
    {
        const int cap = std::min(a.cap_, b.cap_);
        auto visible = [cap](const WeightedPoly &p) {
            term_map t;
            for (const auto &[m, c] : p.terms_) {
                if (m.weight() <= cap) {
                    t.emplace(m, c);
                }
            }
            return t;
        };
        return visible(a) == visible(b);
    }

private:
    term_map terms_;
    int cap_;
};

template <CoefficientRing R>
struct ring_traits<WeightedPoly<R>> {
    using P = WeightedPoly<R>;
    static P zero()
    {
        return P{};
    }
    static P one()
    {
        return P::constant(ring_traits<R>::one());
    }
    static bool is_zero(const P &p)
    {
        return p.is_zero();
    }
    static bool is_one(const P &p)
    {
        return p.terms().size() == 1 && p.terms().begin()->first.empty()
               && ring_traits<R>::is_one(p.terms().begin()->second);
    }
    static P inverse(const P &p)
    {
        if (p.terms().size() != 1 || !p.terms().begin()->first.empty()) {
            throw not_invertible("non-constant weighted polynomial");
        }
        return P::constant(ring_traits<R>::inverse(p.terms().begin()->second), p.cap());
    }
};

// exp(a) for a with no weight-0 term; the series terminates at the cap.
template <CoefficientRing R>
WeightedPoly<R> exp(const WeightedPoly<R> &a)
{
    if (!ring_traits<R>::is_zero(a.coeff(Partition{}))) {
        throw std::domain_error("exp of a weighted polynomial requires zero constant term");
    }
    if (a.cap() == WeightedPoly<R>::unbounded) {
        throw std::invalid_argument("exp of a weighted polynomial needs a finite cap");
    }
    auto result = WeightedPoly<R>::constant(ring_traits<R>::one(), a.cap());
    auto term = result;
    for (int n = 1; n <= a.cap(); ++n) {
        term = (term * a) * Rational(1, n);
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

} // namespace ellcob

#endif
