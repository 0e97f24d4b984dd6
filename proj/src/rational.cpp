#include "lya/rational.hpp"

#include "lya/errors.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

namespace lya {

namespace {

constexpr __int128 kMax = std::numeric_limits<int64_t>::max();

// INT64_MIN is excluded so that negation never overflows on the fast path.
bool fits(__int128 v) { return v >= -kMax && v <= kMax; }

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    uint64_t hi = static_cast<uint64_t>(u >> 64);
    uint64_t lo = static_cast<uint64_t>(u);
    mpz_class r = hi;
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(lo));
    if (neg) r = -r;
    return r;
}

}  // namespace

Rational::Rational(long long n) {
    if (fits(n)) {
        n_ = n;
    } else {
        assign_big(mpq_class(mpz_class(static_cast<long>(n))));
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) fail(ErrorKind::BadRational, "zero denominator");
    assign_i128(num, den);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational::Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
    if (this != &o) {
        n_ = o.n_;
        d_ = o.d_;
        if (o.big_)
            big_ = std::make_unique<mpq_class>(*o.big_);
        else
            big_.reset();
    }
    return *this;
}

void Rational::assign_big(mpq_class q) {
    q.canonicalize();
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != std::numeric_limits<long>::min()) {
        n_ = num.get_si();
        d_ = den.get_si();
        big_.reset();
    } else {
        n_ = 0;
        d_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rational::assign_i128(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    unsigned __int128 an = num < 0 ? static_cast<unsigned __int128>(-num) : static_cast<unsigned __int128>(num);
    unsigned __int128 g = gcd_u128(an, static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (num == 0) den = 1;
    if (fits(num) && fits(den)) {
        n_ = static_cast<int64_t>(num);
        d_ = static_cast<int64_t>(den);
        big_.reset();
    } else {
        assign_big(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
    }
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto valid_int = [](const std::string& p) {
        if (p.empty()) return false;
        size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
        if (i == p.size()) return false;
        for (; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(ns) || !valid_int(ds)) fail(ErrorKind::BadRational, "cannot parse '" + text + "'");
    if (ns[0] == '+') ns = ns.substr(1);
    if (ds[0] == '+') ds = ds.substr(1);
    mpz_class num(ns, 10), den(ds, 10);
    if (den == 0) fail(ErrorKind::BadRational, "zero denominator in '" + text + "'");
    Rational r;
    r.assign_big(mpq_class(num, den));
    return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

mpz_class Rational::num() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(n_)); }
mpz_class Rational::den() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(d_)); }

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_)
        r.assign_big(-*big_);
    else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (o.n_ == 0) return *this;
        if (d_ == 1 && o.d_ == 1) {
            __int128 s = static_cast<__int128>(n_) + o.n_;
            if (fits(s)) {
                n_ = static_cast<int64_t>(s);
                return *this;
            }
        }
        assign_i128(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                    static_cast<__int128>(d_) * o.d_);
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (n_ == 0) return *this;
        if (o.n_ == 0) {
            n_ = 0;
            d_ = 1;
            return *this;
        }
        uint64_t g1 = std::gcd(static_cast<uint64_t>(n_ < 0 ? -n_ : n_), static_cast<uint64_t>(o.d_));
        uint64_t g2 = std::gcd(static_cast<uint64_t>(o.n_ < 0 ? -o.n_ : o.n_), static_cast<uint64_t>(d_));
        __int128 num = static_cast<__int128>(n_ / static_cast<int64_t>(g1)) * (o.n_ / static_cast<int64_t>(g2));
        __int128 den = static_cast<__int128>(d_ / static_cast<int64_t>(g2)) * (o.d_ / static_cast<int64_t>(g1));
        if (fits(num) && fits(den)) {
            n_ = static_cast<int64_t>(num);
            d_ = static_cast<int64_t>(den);
        } else {
            assign_big(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
        }
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::Singular, "division by zero");
    if (!o.big_) {
        Rational inv;
        inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
        inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
        return *this *= inv;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical form: big and small never coincide
    }
    return a.n_ == b.n_ && a.d_ == b.d_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
    return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lya
