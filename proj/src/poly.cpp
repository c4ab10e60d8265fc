#include "lorenz/poly.hpp"

#include <sstream>

namespace lorenz {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  strip();
}

void IntPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(long c) {
  std::vector<BigInt> v;
  if (c != 0) v.push_back(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_tp(size_t p) {
  std::vector<BigInt> v(p + 1, 0);
  v[0] = 1;
  v[p] = -1;
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::operator[](size_t i) const {
  static const BigInt kZero = 0;
  return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (zero() || o.zero()) return IntPoly();
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.zero()) return std::nullopt;
  if (zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  const BigInt& lead = d.c_.back();
  if (lead != 1 && lead != -1) return std::nullopt;
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> q(degree() - d.degree() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    BigInt f = rem[k + d.degree()] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

int IntPoly::sign_at_dyadic(const BigInt& k, unsigned m) const {
  if (zero()) return 0;
  // value * 2^(m*deg) = sum c_i k^i 2^(m*(deg-i)), Horner in k
  BigInt acc = c_.back();
  for (size_t i = c_.size() - 1; i-- > 0;) {
    acc = acc * k + (c_[i] << (m * (c_.size() - 1 - i)));
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

int IntPoly::sign_at_rational(const BigInt& p, const BigInt& q) const {
  if (zero()) return 0;
  BigInt acc = c_.back();
  BigInt qpow = 1;
  for (size_t i = c_.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[i] * qpow;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

double IntPoly::eval_double(double t) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * t + static_cast<double>(c_[i]);
  return acc;
}

std::string IntPoly::str() const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    BigInt a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.str();
    if (i == 1) os << "t";
    else if (i > 1) os << "t^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace lorenz
