#pragma once
#include <gmpxx.h>
#include <string>

#include "loopalg/errors.hpp"

namespace loopalg {

// Exact arbitrary-precision rationals. All coefficient arithmetic in the
// toolkit is exact; there is no floating-point mode.
using Rat = mpq_class;

inline std::string rat_str(const Rat &q) { return q.get_str(); }

inline Rat rat_parse(const std::string &s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace loopalg
