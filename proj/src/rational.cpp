#include "csurg/rational.hpp"

#include <numeric>

namespace csurg {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0)
        throw DomainError("rational with zero denominator (use Rational::infinity())");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = gcd64(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = n;
    den_ = d;
}

Rational Rational::operator+(const Rational& o) const {
    if (is_infinite() || o.is_infinite())
        throw DomainError("arithmetic on infinite rational");
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    if (is_infinite() || o.is_infinite())
        throw DomainError("arithmetic on infinite rational");
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    if (is_infinite() || o.is_infinite())
        throw DomainError("arithmetic on infinite rational");
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (is_infinite() || o.is_infinite())
        throw DomainError("arithmetic on infinite rational");
    if (o.num_ == 0)
        throw DomainError("division by zero rational");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::operator-() const {
    if (is_infinite())
        throw DomainError("arithmetic on infinite rational");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool Rational::operator<(const Rational& o) const {
    if (is_infinite())
        return false;
    if (o.is_infinite())
        return true;
    return num_ * o.den_ < o.num_ * den_;
}

std::int64_t Rational::floor() const {
    if (is_infinite())
        throw DomainError("floor of infinite rational");
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
        --q;
    return q;
}

std::int64_t Rational::ceil() const {
    if (is_infinite())
        throw DomainError("ceil of infinite rational");
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0)
        ++q;
    return q;
}

std::string Rational::str() const {
    if (is_infinite())
        return "inf";
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    if (s == "inf" || s == "+inf" || s == "infinity")
        return infinity();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        std::int64_t n = std::stoll(s.substr(0, slash));
        std::int64_t d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse rational: '" + s + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("rational out of range: '" + s + "'");
    }
}

}  // namespace csurg
