#ifndef CONDGEO_RATIONAL_HPP
#define CONDGEO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "condgeo/errors.hpp"

namespace condgeo {

// Exact arbitrary-precision rational; boost keeps it canonical (reduced,
// positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "num/den", integer literals, and decimal literals ("2.4" -> 12/5),
// all parsed exactly.
Rational parseRational(const std::string& text);

// "num/den", or just "num" when the denominator is one.
std::string rationalToString(const Rational& value);

// Decimal rendering with exact half-up rounding at the given number of
// digits; deterministic, used for SVG coordinates.
std::string rationalToDecimal(const Rational& value, int digits);

struct Point2 {
    Rational x, y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

inline int sign(const Rational& r) { return r.sign(); }

// Sign of the cross product (b - a) x (c - a): +1 for a counterclockwise
// turn, -1 clockwise, 0 collinear.
int orientation(const Point2& a, const Point2& b, const Point2& c);

Rational dot(const Point2& a, const Point2& b);

}  // namespace condgeo

#endif
