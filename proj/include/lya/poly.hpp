#pragma once

#include "lya/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lya {

// Univariate polynomial in the deformation parameter t with rational
// coefficients, lowest degree first. Trailing zeros are always stripped, so
// the zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants embed implicitly
    Poly(long long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly t();

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant() const { return coeff(0); }
    Rational eval(const Rational& t) const;
    std::string str() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void strip();
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline std::string to_string(const Poly& p) { return p.str(); }

inline bool poly_is_zero(const Rational& s) { return s.is_zero(); }
inline bool poly_is_zero(const Poly& s) { return s.is_zero(); }

}  // namespace lya
