#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace sctx {

// Exact rational arithmetic everywhere; the core never touches floating point.
using Rat = boost::multiprecision::mpq_rational;

// Serialized form is always "numerator/denominator" ("1/2", "-3/1", "0/1").
inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a/b" or a bare integer "a".  Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat parse_rat(const std::string& s);

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

}  // namespace sctx
