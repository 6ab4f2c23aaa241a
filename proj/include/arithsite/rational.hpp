#pragma once

#include <cstdint>
#include <string>

#include "arithsite/errors.hpp"

namespace arithsite {

// Exact rational with reduced representation: gcd(|num|, den) = 1, den >= 1.
// All arithmetic is overflow-checked.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    static Rational from_int(std::int64_t n) { return Rational(n, 1); }

    std::int64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const;

    std::string to_string() const;

  private:
    std::int64_t num_;
    std::uint64_t den_;
};

} // namespace arithsite
