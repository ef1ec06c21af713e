#include "hypent/core.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace hypent {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void append_signed(std::string& out, double v) {
  out += std::signbit(v) ? '-' : '+';
  out += shortest(std::abs(v));
}

}  // namespace

std::string to_string(const HyperbolicNumber& xi, Basis basis) {
  std::string out;
  if (basis == Basis::Idempotent) {
    out = shortest(xi.x1) + "*e1";
    append_signed(out, xi.x2);
    out += "*e2";
  } else {
    out = shortest(xi.real_part());
    append_signed(out, xi.k_part());
    out += 'k';
  }
  return out;
}

double parse_real(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  // from_chars rejects a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

HyperbolicNumber parse_hyperbolic(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      gap = !s.empty();
      continue;
    }
    // Blanks may surround operators but not split a token.
    if (gap && c != '+' && c != '-' && c != '*' && s.back() != '+' && s.back() != '-' && s.back() != '*') {
      throw Error(Errc::ParseError, "unexpected blank in '" + std::string(text) + "'");
    }
    gap = false;
    s += c;
  }
  if (s.empty()) throw Error(Errc::ParseError, "empty hyperbolic literal");

  // Accumulate a general combination  a*1 + b*k + c*e1 + d*e2.
  double one = 0, k = 0, e1 = 0, e2 = 0;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  bool first = true;
  while (p < end) {
    double sign = 1;
    if (*p == '+' || *p == '-') {
      sign = (*p == '-') ? -1 : 1;
      ++p;
    } else if (!first) {
      throw Error(Errc::ParseError, "expected '+' or '-' in '" + s + "'");
    }
    first = false;

    double coeff = 1;
    bool have_number = false;
    // A leading 'e' is a basis name, not an exponent; from_chars would reject it anyway.
    if (p < end && *p != 'e' && *p != 'k') {
      auto res = std::from_chars(p, end, coeff);
      if (res.ec != std::errc()) throw Error(Errc::ParseError, "bad number in '" + s + "'");
      p = res.ptr;
      have_number = true;
    }
    if (p < end && *p == '*') {
      ++p;
      if (p >= end || (*p != 'e' && *p != 'k')) {
        throw Error(Errc::ParseError, "expected e1, e2 or k after '*' in '" + s + "'");
      }
    }

    double* slot = &one;
    if (p < end && *p == 'k') {
      slot = &k;
      ++p;
    } else if (p + 1 < end && p[0] == 'e' && (p[1] == '1' || p[1] == '2')) {
      slot = (p[1] == '1') ? &e1 : &e2;
      p += 2;
    } else if (!have_number) {
      throw Error(Errc::ParseError, "dangling sign in '" + s + "'");
    }
    *slot += sign * coeff;
  }
  return {one + k + e1, one - k + e2};
}

}  // namespace hypent
