#ifndef ELLCOB_RATIONAL_HPP
#define ELLCOB_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ellcob
{

using Integer = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over mpq_class so that expression
// templates never leak into generic code.
class Rational
{
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I n) : value_(static_cast<long>(n))
    {
    }

    template <std::unsigned_integral I>
    Rational(I n) : value_(static_cast<unsigned long>(n))
    {
    }

    Rational(const Integer &n) : value_(n) {}

    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational from_mpq(const mpq_class &q)
    {
        Rational r;
        r.value_ = q;
        r.value_.canonicalize();
        return r;
    }

    // Accepts "n", "n/d" and surrounding whitespace.
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
                s.remove_prefix(1);
            }
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
                s.remove_suffix(1);
            }
            return s;
        };
        text = trim(text);
        Integer num, den{1};
        auto slash = text.find('/');
        auto read = [](std::string_view s, Integer &out) {
            std::string str(s);
            if (str.empty() || out.set_str(str, 10) != 0) {
                throw std::invalid_argument("malformed rational: '" + str + "'");
            }
        };
        if (slash == std::string_view::npos) {
            read(text, num);
        } else {
            read(trim(text.substr(0, slash)), num);
            read(trim(text.substr(slash + 1)), den);
        }
        return Rational(num, den);
    }

    Integer numerator() const
    {
        return value_.get_num();
    }
    Integer denominator() const
    {
        return value_.get_den();
    }
    const mpq_class &raw() const
    {
        return value_;
    }

    bool is_zero() const
    {
        return sgn(value_) == 0;
    }
    bool is_one() const
    {
        return value_ == 1;
    }
    bool is_integer() const
    {
        return value_.get_den() == 1;
    }
    int sign() const
    {
        return sgn(value_);
    }

    // Canonical "num/den" form; the denominator is always written.
    std::string str() const
    {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    // Compact form: "n" for integers, "n/d" otherwise.
    std::string pretty() const
    {
        return value_.get_str();
    }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return from_mpq(-a.value_);
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.pretty();
    }

private:
    mpq_class value_;
};

inline Rational pow(const Rational &base, int exponent)
{
    if (exponent < 0) {
        return pow(Rational(1) / base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

inline Integer ipow(long base, unsigned long exponent)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
    if (base < 0 && exponent % 2 == 1) {
        r = -r;
    }
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Numerator of an integral rational; throws otherwise.
inline Integer to_integer(const Rational &r)
{
    if (!r.is_integer()) {
        throw std::domain_error("rational " + r.pretty() + " is not an integer");
    }
    return r.numerator();
}

} // namespace ellcob

#endif
