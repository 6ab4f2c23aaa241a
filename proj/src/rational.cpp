#include "arithsite/rational.hpp"

#include <numeric>

namespace arithsite {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw OverflowError(std::string("integer overflow in rational ") + what);
    return static_cast<std::int64_t>(v);
}

i128 iabs(i128 v) { return v < 0 ? -v : v; }

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    if (num == INT64_MIN || den == INT64_MIN)
        throw OverflowError("rational component at INT64_MIN unsupported");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = iabs(n), b = d;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    i128 g = a == 0 ? 1 : a;
    num_ = narrow(n / g, "reduce");
    den_ = static_cast<std::uint64_t>(narrow(d / g, "reduce"));
}

Rational Rational::operator+(const Rational& o) const {
    i128 n = i128(num_) * i128(o.den_) + i128(o.num_) * i128(den_);
    i128 d = i128(den_) * i128(o.den_);
    i128 g = 1;
    {
        i128 a = iabs(n), b = d;
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        g = a == 0 ? 1 : a;
    }
    return Rational(narrow(n / g, "add"), narrow(d / g, "add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-i128(num_), "negate");
    r.den_ = den_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    std::int64_t a = num_;
    std::uint64_t b = den_;
    std::int64_t c = o.num_;
    std::uint64_t d = o.den_;
    std::uint64_t g1 = std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), d);
    std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(c < 0 ? -c : c), b);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = i128(a / std::int64_t(g1)) * i128(c / std::int64_t(g2));
    i128 dd = i128(b / g2) * i128(d / g1);
    return Rational(narrow(n, "multiply"), narrow(dd, "multiply"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw InvalidInputError("division by zero rational");
    Rational inv;
    if (o.num_ < 0) {
        inv.num_ = narrow(-i128(o.den_), "invert");
        inv.den_ = static_cast<std::uint64_t>(-o.num_);
    } else {
        inv.num_ = static_cast<std::int64_t>(o.den_);
        inv.den_ = static_cast<std::uint64_t>(o.num_);
    }
    return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
    return i128(num_) * i128(o.den_) < i128(o.num_) * i128(den_);
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace arithsite
