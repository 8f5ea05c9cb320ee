#pragma once

#include <string>

#include "lattes/ecurve.hpp"
#include "lattes/ratfunc.hpp"

namespace lattes {

std::string to_string(const QuadInt& v);
std::string to_string(const KNum& v);
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);
std::string to_string(const Point& p);
std::string to_string(const Curve& c);

/// Parses `INT`, `INT+-INT*i`, `INT+-INT*w`, `sqrt-3`, and parenthesized
/// products such as `(1+2*w)*w`, evaluated at parse time.  Accepts any +,-,*
/// expression over those atoms; the value must land in the ring (eisenstein
/// half-coordinates such as `w/1` alone are fine, true fractions are not).
/// Throws ParseError.
QuadInt parse_quadint(RingId ring, const std::string& text);

/// Field-element grammar: the integer atoms plus `sqrt(-1)` / `sqrt(-3)` and
/// division.  Round-trips everything to_string(KNum) emits.
KNum parse_knum(RingId ring, const std::string& text);

/// Rational-function grammar: the field grammar plus the variable `x` and
/// `^INT` powers.  Round-trips everything to_string(RatFunc) emits.
RatFunc parse_ratfunc(RingId ring, const std::string& text);

/// `inf`, or `x,y` with both coordinates in the field grammar.
Point parse_point(RingId ring, const std::string& text);

}  // namespace lattes
