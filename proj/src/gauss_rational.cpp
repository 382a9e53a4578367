// SPDX-License-Identifier: MIT

#include "frz/gauss_rational.hpp"

#include <cstddef>

namespace frz {
namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p" or "p/q" starting at pos; advances pos past the token.
mpq_class parse_rational(const std::string& s, std::size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = (s[pos] == '-');
    ++pos;
  }
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected number in '" + s + "'");
  std::string num = s.substr(start, pos - start);
  if (negative) num.insert(num.begin(), '-');
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected denominator in '" + s + "'");
    den = s.substr(dstart, pos - dstart);
  }
  mpq_class q(num + "/" + den);
  if (q.get_den() == 0) throw SingularError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussRational::str() const {
  if (im_ == 0) return rational_str(re_);
  std::string out = rational_str(re_);
  if (im_ > 0) out += "+";
  out += rational_str(im_);
  out += "i";
  return out;
}

GaussRational GaussRational::parse(const std::string& text) {
  std::size_t pos = 0;
  mpq_class re = parse_rational(text, pos);
  if (pos == text.size()) return GaussRational(re);
  // Remainder must be "<signed rational>i" or the string "i" variants are
  // not accepted: the canonical grammar always spells the coefficient out.
  mpq_class im = parse_rational(text, pos);
  if (pos + 1 != text.size() || text[pos] != 'i')
    throw ParseError("malformed Gaussian rational '" + text + "'");
  return GaussRational(re, im);
}

}  // namespace frz
