#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sqf {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// "3", "-3/4"; canonicalized
Rational parse_rational(std::string_view text);

}  // namespace sqf
