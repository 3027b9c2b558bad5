#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace echar {

/// Element of Z[L], dense, low degree first, no trailing zeros. L^i stands
/// for the class of affine i-space, so evaluation at 1 recovers the Euler
/// characteristic.
class MotivePoly {
public:
  MotivePoly() = default;  // zero
  explicit MotivePoly(std::vector<std::int64_t> coeffs);
  static MotivePoly constant(std::int64_t c);
  static MotivePoly power(unsigned d, std::int64_t c = 1);  // c * L^d

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return (int)coeffs_.size() - 1; }
  std::int64_t leading_coefficient() const;
  std::int64_t evaluate(std::int64_t x) const;

  MotivePoly operator-() const;
  MotivePoly operator+(const MotivePoly& o) const;
  MotivePoly operator-(const MotivePoly& o) const;
  MotivePoly operator*(const MotivePoly& o) const;
  MotivePoly scaled(std::int64_t c) const;
  bool operator==(const MotivePoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const MotivePoly& o) const { return !(*this == o); }

  /// Quotient q with *this = (L-1)*q + r, r constant; r equals evaluate(1).
  MotivePoly divide_by_L_minus_one(std::int64_t* remainder = nullptr) const;

  std::string to_string(const std::string& var = "L") const;

private:
  std::vector<std::int64_t> coeffs_;
  void normalize();
};

}  // namespace echar
