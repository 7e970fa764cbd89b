#include "pdaforge/rational.hpp"

#include <stdexcept>

namespace pdaforge {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // divides exactly: result is C(n-k+i, i) at each step
  }
  return result;
}

BigInt gaussian_binomial(long long q, long long k, long long t) {
  if (t < 0 || t > k || k < 0) return 0;
  if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
  Rational result = 1;
  BigInt qp = 1;  // q^i
  // prod_{i=0}^{t-1} (q^{k-i} - 1) / (q^{i+1} - 1)
  BigInt qk = 1;
  for (long long i = 0; i < k; ++i) qk *= q;
  for (long long i = 0; i < t; ++i) {
    qp *= q;
    result *= Rational(qk - 1, qp - 1);
    qk /= q;
  }
  if (denominator(result) != 1)
    throw std::logic_error("gaussian_binomial: non-integral result");
  return numerator(result);
}

std::string rational_exact_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_decimal_string(const Rational& r, int places) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half away from zero
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), places - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

bool rational_close(const Rational& a, const Rational& b, const Rational& tol) {
  Rational d = a - b;
  if (d < 0) d = -d;
  return d <= tol;
}

}  // namespace pdaforge
