#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace lorenz {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficient index = power of t.  Trailing zero
/// coefficients are stripped; the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(long c);
  /// 1 - t^p
  static IntPoly one_minus_tp(size_t p);

  bool zero() const { return c_.empty(); }
  size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& operator[](size_t i) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Exact division; nullopt when the remainder is non-zero.  The
  /// divisor's leading coefficient must be a unit.
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

  /// Sign of the value at the dyadic rational k / 2^m.
  int sign_at_dyadic(const BigInt& k, unsigned m) const;
  /// Sign of the value at p / q, q > 0.
  int sign_at_rational(const BigInt& p, const BigInt& q) const;
  double eval_double(double t) const;

  std::string str() const;

 private:
  std::vector<BigInt> c_;
  void strip();
};

}  // namespace lorenz
