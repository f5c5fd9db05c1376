#ifndef ELLCOB_RING_HPP
#define ELLCOB_RING_HPP

#include <concepts>
#include <stdexcept>
#include <string>

#include <ellcob/rational.hpp>

namespace ellcob
{

// Raised when an element without a multiplicative inverse is inverted.
class not_invertible : public std::domain_error
{
public:
    explicit not_invertible(const std::string &what) : std::domain_error("not invertible: " + what) {}
};

// Per-ring constants and predicates. Every coefficient ring specialises this.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero()
    {
        return Rational{};
    }
    static Rational one()
    {
        return Rational{1};
    }
    static bool is_zero(const Rational &r)
    {
        return r.is_zero();
    }
    static bool is_one(const Rational &r)
    {
        return r.is_one();
    }
    static Rational inverse(const Rational &r)
    {
        if (r.is_zero()) {
            throw not_invertible("zero rational");
        }
        return Rational{1} / r;
    }
};

// A commutative Q-algebra: ring operations plus scaling by exact rationals.
template <typename R>
concept CoefficientRing = std::copyable<R> && requires(R a, const R &b, const Rational &s) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -b } -> std::convertible_to<R>;
    { b * s } -> std::convertible_to<R>;
    { a += b } -> std::convertible_to<R &>;
    { ring_traits<R>::zero() } -> std::convertible_to<R>;
    { ring_traits<R>::one() } -> std::convertible_to<R>;
    { ring_traits<R>::is_zero(b) } -> std::convertible_to<bool>;
    { ring_traits<R>::is_one(b) } -> std::convertible_to<bool>;
    { ring_traits<R>::inverse(b) } -> std::convertible_to<R>;
};

static_assert(CoefficientRing<Rational>);

} // namespace ellcob

#endif
