#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qtoric {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using QVec = std::vector<Rat>;

inline int sign_of(const Rat& x) { return x.sign(); }

double to_double(const Rat& x);

/* Canonical text form: "p" for integers, "p/q" with q > 0 otherwise. */
std::string format_rat(const Rat& x);

/* Accepts "p" and "p/q"; throws ParseError on anything else. */
Rat parse_rat(const std::string& text);

std::string format_qvec(const QVec& v);

}  // namespace qtoric
