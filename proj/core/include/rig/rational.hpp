#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rig {

/// Exact rational scalar. mpq_class keeps values canonical: reduced,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: \"" + s + "\"");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: \"" + s + "\"");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace rig
