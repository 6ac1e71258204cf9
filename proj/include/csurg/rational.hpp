#pragma once

#include <cstdint>
#include <string>

#include "csurg/errors.hpp"

namespace csurg {

/// Exact rational number, always stored reduced with positive denominator.
/// A single infinite value (1/0) is representable; it compares above every
/// finite rational and is rejected by arithmetic that cannot handle it.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    static Rational infinity() {
        Rational r;
        r.num_ = 1;
        r.den_ = 0;
        return r;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::int64_t floor() const;
    std::int64_t ceil() const;

    std::string str() const;
    static Rational parse(const std::string& s);

private:
    std::int64_t num_;
    std::int64_t den_;  // 0 exactly for the infinite value
};

inline Rational rational_of_int(std::int64_t n) { return Rational(n); }

}  // namespace csurg
