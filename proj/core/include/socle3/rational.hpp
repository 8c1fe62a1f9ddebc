#pragma once

#include <gmpxx.h>

#include <string>

namespace socle3 {

using Rational = mpq_class;
using Integer = mpz_class;

// "3", "-1/2"; always canonical because mpq values are kept in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace socle3
