#include "qtoric/rational.hpp"

#include "qtoric/errors.hpp"

#include <cctype>
#include <sstream>

namespace qtoric {

double to_double(const Rat& x) { return x.convert_to<double>(); }

std::string format_rat(const Rat& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw ParseError("bad rational: '" + text + "'");
    return Rat(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ParseError("bad rational: '" + text + "'");
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  return Rat(BigInt(num), d);
}

std::string format_qvec(const QVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << format_rat(v[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace qtoric
