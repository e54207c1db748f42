#include "alcove/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace alcove {

namespace {

std::vector<Int> poly_div_exact(const std::vector<Int>& a, const std::vector<Int>& b) {
  // exact division of integer polynomials, remainder must vanish
  std::vector<Int> r = a, q(a.size() - b.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    Int lead = r[k + b.size() - 1];
    if (lead % b.back() != 0) throw Error("poly_div_exact: not divisible");
    Int c = lead / b.back();
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] -= checked_mul(c, b[j]);
  }
  for (Int v : r)
    if (v != 0) throw Error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
  return c;
}

const std::vector<Int>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
  return cache.emplace(n, std::move(num)).first->second;
}

std::map<int, int> cyclo_of_qd_minus_1(int d) {
  std::map<int, int> out;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) out[e] += 1;
  return out;
}

std::map<int, int> cyclo_of_qd_plus_1(int d) {
  // q^d + 1 = (q^{2d} - 1) / (q^d - 1)
  std::map<int, int> out;
  for (int e = 1; e <= 2 * d; ++e)
    if ((2 * d) % e == 0 && d % e != 0) out[e] += 1;
  return out;
}

void QFactored::mul_cyc(int n, int mult) {
  if (mult == 0) return;
  cyc[n] += mult;
  if (cyc[n] == 0) cyc.erase(n);
}

void QFactored::mul_qd_minus_1(int d, int mult) {
  for (auto [e, c] : cyclo_of_qd_minus_1(d)) mul_cyc(e, c * mult);
}

void QFactored::mul_qd_plus_1(int d, int mult) {
  for (auto [e, c] : cyclo_of_qd_plus_1(d)) mul_cyc(e, c * mult);
}

void QFactored::mul_scalar(Int num, Int den) {
  if (num == 0) throw Error("QFactored: zero scalar");
  scalar_num = checked_mul(scalar_num, num);
  scalar_den = checked_mul(scalar_den, den);
  if (scalar_den < 0) { scalar_den = -scalar_den; scalar_num = -scalar_num; }
  Int g = std::gcd(std::abs(scalar_num), scalar_den);
  scalar_num /= g;
  scalar_den /= g;
}

QFactored QFactored::times(const QFactored& o) const {
  QFactored r = *this;
  r.mul_scalar(o.scalar_num, o.scalar_den);
  r.qpow += o.qpow;
  for (auto [n, e] : o.cyc) r.mul_cyc(n, e);
  return r;
}

QFactored QFactored::divided_by(const QFactored& o) const {
  QFactored r = *this;
  r.mul_scalar(o.scalar_den, o.scalar_num);
  r.qpow -= o.qpow;
  for (auto [n, e] : o.cyc) r.mul_cyc(n, -e);
  return r;
}

bool QFactored::is_polynomial() const {
  if (scalar_den != 1 || qpow < 0) return false;
  return std::all_of(cyc.begin(), cyc.end(), [](auto& p) { return p.second >= 0; });
}

int QFactored::degree() const {
  // phi(n) per cyclotomic factor
  auto phi = [](int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        r -= r / p;
        while (n % p == 0) n /= p;
      }
    if (n > 1) r -= r / n;
    return r;
  };
  int d = static_cast<int>(qpow);
  for (auto [n, e] : cyc) d += phi(n) * e;
  return d;
}

std::vector<Int> QFactored::expand() const {
  if (!is_polynomial()) throw Error("QFactored::expand: not a polynomial");
  std::vector<Int> p = {scalar_num};
  for (auto [n, e] : cyc)
    for (int k = 0; k < e; ++k) p = poly_mul(p, cyclotomic_poly(n));
  std::vector<Int> shifted(static_cast<size_t>(qpow), 0);
  shifted.insert(shifted.end(), p.begin(), p.end());
  return shifted;
}

BigInt QFactored::eval(Int q) const {
  if (q < 2) throw Error("QFactored::eval: q must be >= 2");
  BigInt num(scalar_num);
  BigInt den(scalar_den);
  auto eval_cyc = [&](int n) {
    const auto& c = cyclotomic_poly(n);
    BigInt v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * BigInt(q) + BigInt(c[i]);
    return v;
  };
  Int qp = qpow;
  if (qp > 0) num = num * BigInt::pow(q, qp);
  if (qp < 0) den = den * BigInt::pow(q, -qp);
  for (auto [n, e] : cyc) {
    BigInt v = eval_cyc(n);
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) num = num * v;
      else den = den * v;
    }
  }
  if (den == BigInt(1)) return num;
  throw Error("QFactored::eval: value is not integral; evaluate numerator and denominator separately");
}

std::pair<BigInt, BigInt> QFactored::eval_pair(Int q) const {
  if (q < 2) throw Error("QFactored::eval_pair: q must be >= 2");
  BigInt num(std::abs(scalar_num));
  if (scalar_num < 0) num = BigInt(scalar_num);
  BigInt den(scalar_den);
  auto eval_cyc = [&](int n) {
    const auto& c = cyclotomic_poly(n);
    BigInt v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * BigInt(q) + BigInt(c[i]);
    return v;
  };
  if (qpow > 0) num = num * BigInt::pow(q, qpow);
  if (qpow < 0) den = den * BigInt::pow(q, -qpow);
  for (auto [n, e] : cyc) {
    BigInt v = eval_cyc(n);
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) num = num * v;
      else den = den * v;
    }
  }
  return {num, den};
}

std::string QFactored::to_string() const {
  std::ostringstream os;
  if (scalar_den != 1)
    os << "(" << scalar_num << "/" << scalar_den << ")";
  else if (scalar_num != 1)
    os << scalar_num;
  else
    os << 1;
  if (qpow != 0) os << "*q^" << qpow;
  for (auto [n, e] : cyc) os << "*Phi" << n << "^" << e;
  return os.str();
}

std::string poly_to_string(const std::vector<Int>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    Int c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = std::abs(c);
    if (a != 1 || i == 0) os << a;
    if (i > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace alcove
