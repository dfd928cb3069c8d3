#include "kvsched/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "kvsched/error.hpp"

namespace kvsched {

Rational make_rational(long long num, long long den) {
  if (den == 0) raise(Errc::bad_parameter, "rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

long long floor_ll(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // cpp_rational keeps den > 0
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q.convert_to<long long>();
}

long long ceil_ll(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;
  if (num > 0 && q * den != num) q += 1;
  return q.convert_to<long long>();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text, int max_decimal_den) {
  std::string t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  auto signify = [&](Rational r) { return neg ? Rational(-r) : r; };

  auto slash = t.find('/');
  if (slash != std::string::npos) {
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    BigInt num(a), den(b);
    if (den == 0) return std::nullopt;
    return signify(Rational(num, den));
  }

  auto dot = t.find('.');
  if (dot == std::string::npos) {
    if (!all_digits(t)) return std::nullopt;
    return signify(Rational(BigInt(t)));
  }

  std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
  if (ip.empty()) ip = "0";
  if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) return std::nullopt;
  BigInt scale = 1;
  for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
  Rational exact(BigInt(ip) * scale + BigInt(fp.empty() ? "0" : fp), scale);

  // Closest denominator-bounded rational; ties keep the smaller denominator.
  Rational best;
  Rational best_err(-1);
  for (int q = 1; q <= max_decimal_den; ++q) {
    BigInt p = floor_ll(exact * q);
    for (BigInt cand_p = p; cand_p <= p + 1; ++cand_p) {
      Rational cand(cand_p, q);
      Rational err = cand > exact ? Rational(cand - exact) : Rational(exact - cand);
      if (best_err < 0 || err < best_err) {
        best_err = err;
        best = cand;
      }
    }
  }
  return signify(best);
}

std::string to_decimal_string(const Rational& r, int digits) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up at the last digit
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt ip = scaled / scale;
  BigInt fp = scaled % scale;
  std::string frac = fp.str();
  if (static_cast<int>(frac.size()) < digits)
    frac = std::string(digits - frac.size(), '0') + frac;
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + ip.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace kvsched
