#include "echar/motive_poly.hpp"

#include <sstream>

namespace echar {

void MotivePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

MotivePoly::MotivePoly(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

MotivePoly MotivePoly::constant(std::int64_t c) {
  return MotivePoly(std::vector<std::int64_t>{c});
}

MotivePoly MotivePoly::power(unsigned d, std::int64_t c) {
  std::vector<std::int64_t> v(d + 1, 0);
  v[d] = c;
  return MotivePoly(std::move(v));
}

std::int64_t MotivePoly::leading_coefficient() const {
  return coeffs_.empty() ? 0 : coeffs_.back();
}

std::int64_t MotivePoly::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

MotivePoly MotivePoly::operator-() const { return scaled(-1); }

MotivePoly MotivePoly::operator+(const MotivePoly& o) const {
  std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return MotivePoly(std::move(v));
}

MotivePoly MotivePoly::operator-(const MotivePoly& o) const {
  return *this + (-o);
}

MotivePoly MotivePoly::operator*(const MotivePoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return MotivePoly();
  std::vector<std::int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return MotivePoly(std::move(v));
}

MotivePoly MotivePoly::scaled(std::int64_t c) const {
  std::vector<std::int64_t> v = coeffs_;
  for (auto& x : v) x *= c;
  return MotivePoly(std::move(v));
}

MotivePoly MotivePoly::divide_by_L_minus_one(std::int64_t* remainder) const {
  // synthetic division by (L - 1)
  std::vector<std::int64_t> q(coeffs_.size() > 0 ? coeffs_.size() - 1 : 0, 0);
  std::int64_t carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::int64_t cur = coeffs_[i] + carry;
    if (i == 0) {
      if (remainder) *remainder = cur;
      break;
    }
    q[i - 1] = cur;
    carry = cur;
  }
  if (coeffs_.empty() && remainder) *remainder = 0;
  return MotivePoly(std::move(q));
}

std::string MotivePoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace echar
