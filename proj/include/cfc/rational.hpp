#pragma once

#include <gmpxx.h>

#include <string>

namespace cfc {

/// Exact rational used for LP values and clique weights.
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cfc
