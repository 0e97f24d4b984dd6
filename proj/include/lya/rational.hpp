#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <memory>
#include <string>

namespace lya {

// Exact rational number. Values whose reduced numerator and denominator fit in
// an int64 are kept inline; anything larger spills into a GMP rational. The
// representation is canonical: a value is stored big iff it does not fit.
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT: implicit from integers is intended
    Rational(int n) : Rational(static_cast<long long>(n)) {}
    Rational(long n) : Rational(static_cast<long long>(n)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&&) noexcept = default;

    // Accepts "p", "-p", "p/q" (q may be negative; result is normalized).
    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_big() const { return static_cast<bool>(big_); }

    mpq_class to_mpq() const;
    mpz_class num() const;
    mpz_class den() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void assign_big(mpq_class q);  // canonicalizes (demotes to small if it fits)
    void assign_i128(__int128 num, __int128 den);

    int64_t n_ = 0;
    int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace lya
