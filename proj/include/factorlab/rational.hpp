#ifndef FACTORLAB_RATIONAL_HPP
#define FACTORLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace factorlab {

// Exact fraction in lowest terms, denominator always positive.
// All threshold comparisons in this project are exact; never convert to
// floating point on a decision path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Cross-multiplication in 128 bits; operands are desk-scale so this
    // never overflows.
    friend bool operator<(const Rational& x, const Rational& y) {
        return (__int128)x.num_ * y.den_ < (__int128)y.num_ * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

    // Prints "p/q", or plain "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p/q" or "p".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(std::stoll(text));
            }
            std::int64_t p = std::stoll(text.substr(0, slash));
            std::int64_t q = std::stoll(text.substr(slash + 1));
            return Rational(p, q);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

// Smallest integer >= r.
inline std::int64_t ceil_to_int(const Rational& r) {
    std::int64_t q = r.num() / r.den();
    if (r.num() % r.den() != 0 && r.num() > 0) ++q;
    return q;
}

}  // namespace factorlab

#endif
