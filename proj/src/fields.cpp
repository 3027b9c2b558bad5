#include "echar/fields.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace echar {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
u64 mulm(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invm(u64 a, u64 p) {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
  return powm(a % p, p - 2, p);
}

// ---- dense univariate arithmetic over F_p (used for extension fields) ----

using UPoly = std::vector<u64>;  // low degree first

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int udeg(const UPoly& f) { return (int)f.size() - 1; }

UPoly umul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

// remainder of f modulo g, g nonzero
UPoly umod(UPoly f, const UPoly& g, u64 p) {
  trim(f);
  u64 lg = invm(g.back(), p);
  while ((int)f.size() >= (int)g.size()) {
    u64 c = mulm(f.back(), lg, p);
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] = subm(f[shift + i], mulm(c, g[i], p), p);
    trim(f);
  }
  return f;
}

UPoly ugcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    u64 s = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, s, p);
  }
  return a;
}

// extended Euclid: returns s with s*a = gcd(a,m) mod m
UPoly uinv_mod(const UPoly& a, const UPoly& m, u64 p) {
  UPoly r0 = m, r1 = umod(a, m, p);
  UPoly s0 = {}, s1 = {1};
  if (r1.empty()) throw DivisionByZero("inverse of 0 in extension field");
  while (!r1.empty()) {
    // quotient of r0 by r1
    UPoly q;
    UPoly f = r0;
    u64 l = invm(r1.back(), p);
    if ((int)f.size() >= (int)r1.size()) q.assign(f.size() - r1.size() + 1, 0);
    while ((int)f.size() >= (int)r1.size()) {
      u64 c = mulm(f.back(), l, p);
      size_t shift = f.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        f[shift + i] = subm(f[shift + i], mulm(c, r1[i], p), p);
      trim(f);
    }
    // (r0, r1) <- (r1, r0 - q r1); (s0, s1) likewise
    UPoly qs = umul(q, s1, p);
    UPoly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = subm(s2[i], qs[i], p);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(f);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (udeg(r0) != 0)
    throw DivisionByZero("element not invertible modulo the field modulus");
  u64 s = invm(r0[0], p);
  UPoly out = s0;
  for (auto& c : out) c = mulm(c, s, p);
  trim(out);
  return umod(out, m, p);
}

// x^(p^i) mod m via iterated p-th powering
UPoly frobenius_power_of_x(unsigned i, const UPoly& m, u64 p) {
  UPoly r = {0, 1};  // x
  r = umod(r, m, p);
  for (unsigned step = 0; step < i; ++step) {
    // r <- r^p mod m
    UPoly acc = {1};
    UPoly base = r;
    u64 e = p;
    while (e) {
      if (e & 1) acc = umod(umul(acc, base, p), m, p);
      base = umod(umul(base, base, p), m, p);
      e >>= 1;
    }
    r = std::move(acc);
  }
  return r;
}

bool is_irreducible(const UPoly& m, u64 p) {
  int k = udeg(m);
  if (k < 1) return false;
  if (k == 1) return true;
  // m | x^(p^k) - x  and  gcd(x^(p^i) - x, m) = 1 for 1 <= i <= k/2
  for (int i = 1; i <= k / 2; ++i) {
    UPoly t = frobenius_power_of_x((unsigned)i, m, p);
    if (t.size() < 2) t.resize(2, 0);
    t[1] = subm(t[1], 1, p);
    trim(t);
    UPoly g = ugcd(t, m, p);
    if (udeg(g) != 0) return false;
  }
  UPoly t = frobenius_power_of_x((unsigned)k, m, p);
  if (t.size() < 2) t.resize(2, 0);
  t[1] = subm(t[1], 1, p);
  trim(t);
  if (!t.empty()) return false;
  return true;
}

bool trial_division_prime(u64 p, u64 bound) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (u64 d = 3;; d += 2) {
    if (d > bound) throw NotPrime("primality of " + std::to_string(p) +
                                  " not certifiable within trial bound");
    if (d * d > p) return true;
    if (p % d == 0) return false;
  }
}

u64 reduce_mpz(const mpz_class& v, u64 p) {
  mpz_class r = v % (unsigned long)p;
  if (r < 0) r += (unsigned long)p;
  return r.get_ui();
}

}  // namespace

// ---------------------------------------------------------------- FieldDesc

FieldPtr FieldDesc::rationals() {
  static FieldPtr q(new FieldDesc(FieldKind::Rationals, 0, 0, {}));
  return q;
}

FieldPtr FieldDesc::prime(u64 p, u64 trial_bound) {
  if (!trial_division_prime(p, trial_bound))
    throw NotPrime(std::to_string(p) + " is not prime");
  return FieldPtr(new FieldDesc(FieldKind::Prime, p, 1, {0, 1}));
}

FieldPtr FieldDesc::extension(u64 p, unsigned k, u64 seed, u64 trial_bound) {
  if (!trial_division_prime(p, trial_bound))
    throw NotPrime(std::to_string(p) + " is not prime");
  if (k == 0) throw Error("BadExtensionDegree", ErrorKind::Input, "k must be >= 1");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
  for (;;) {
    std::vector<u64> m(k + 1, 0);
    m[k] = 1;
    for (unsigned i = 0; i < k; ++i) m[i] = rng() % p;
    if (k == 1 || is_irreducible(m, p))
      return FieldPtr(new FieldDesc(k == 1 ? FieldKind::Prime : FieldKind::Extension,
                                    p, k, std::move(m)));
  }
}

FieldPtr FieldDesc::extension_with_modulus(u64 p, std::vector<u64> modulus) {
  if (!trial_division_prime(p, kDefaultTrialBound))
    throw NotPrime(std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error("BadModulus", ErrorKind::Input, "modulus must be monic of degree >= 1");
  unsigned k = (unsigned)modulus.size() - 1;
  if (k > 1 && !is_irreducible(modulus, p))
    throw Error("BadModulus", ErrorKind::Input, "modulus is reducible");
  return FieldPtr(new FieldDesc(k == 1 ? FieldKind::Prime : FieldKind::Extension,
                                p, k, std::move(modulus)));
}

FieldPtr FieldDesc::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.size() >= 2 && spec[0] == 'F') {
    auto caret = spec.find('^');
    try {
      if (caret == std::string::npos) {
        u64 p = std::stoull(spec.substr(1));
        return prime(p);
      }
      u64 p = std::stoull(spec.substr(1, caret - 1));
      unsigned k = (unsigned)std::stoul(spec.substr(caret + 1));
      if (k == 1) return prime(p);
      return extension(p, k, 0);
    } catch (const NotPrime&) {
      throw;
    } catch (const std::exception&) {
      throw BadFieldSpec("cannot parse field specifier '" + spec + "'");
    }
  }
  throw BadFieldSpec("cannot parse field specifier '" + spec + "'");
}

u64 FieldDesc::order() const {
  if (!is_finite())
    throw Error("InfiniteField", ErrorKind::Input, "Q has no finite order");
  u64 o = 1;
  for (unsigned i = 0; i < k_; ++i) o *= p_;
  return o;
}

bool FieldDesc::same_as(const FieldDesc& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_ &&
         modulus_ == other.modulus_;
}

std::string FieldDesc::to_string() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "F" + std::to_string(p_);
    case FieldKind::Extension:
      return "F" + std::to_string(p_) + "^" + std::to_string(k_);
  }
  return "?";
}

// -------------------------------------------------------------- FieldScalar

FieldScalar::FieldScalar() : field_(FieldDesc::rationals()), v_(mpq_class(0)) {}

FieldScalar FieldScalar::zero(const FieldPtr& f) { return from_integer(f, 0); }
FieldScalar FieldScalar::one(const FieldPtr& f) { return from_integer(f, 1); }

FieldScalar FieldScalar::from_integer(const FieldPtr& f, long v) {
  return from_mpz(f, mpz_class(v));
}

FieldScalar FieldScalar::from_mpz(const FieldPtr& f, const mpz_class& v) {
  FieldScalar s;
  s.field_ = f;
  switch (f->kind()) {
    case FieldKind::Rationals: s.v_ = mpq_class(v); break;
    case FieldKind::Prime: s.v_ = reduce_mpz(v, f->characteristic()); break;
    case FieldKind::Extension: {
      std::vector<u64> c(f->extension_degree(), 0);
      c[0] = reduce_mpz(v, f->characteristic());
      s.v_ = std::move(c);
      break;
    }
  }
  return s;
}

FieldScalar FieldScalar::from_fraction(const FieldPtr& f, const mpz_class& num,
                                       const mpz_class& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (f->kind() == FieldKind::Rationals) {
    mpq_class q(num, den);
    q.canonicalize();
    return rational(q);
  }
  return from_mpz(f, num) / from_mpz(f, den);
}

FieldScalar FieldScalar::rational(mpq_class q) {
  FieldScalar s;
  s.field_ = FieldDesc::rationals();
  q.canonicalize();
  s.v_ = std::move(q);
  return s;
}

FieldScalar FieldScalar::prime_elem(const FieldPtr& f, u64 residue) {
  if (f->kind() != FieldKind::Prime)
    throw FieldMismatch("prime_elem needs a prime field");
  FieldScalar s;
  s.field_ = f;
  s.v_ = residue % f->characteristic();
  return s;
}

FieldScalar FieldScalar::ext_elem(const FieldPtr& f, std::vector<u64> coeffs) {
  if (f->kind() != FieldKind::Extension)
    throw FieldMismatch("ext_elem needs an extension field");
  coeffs.resize(f->extension_degree(), 0);
  for (auto& c : coeffs) c %= f->characteristic();
  FieldScalar s;
  s.field_ = f;
  s.v_ = std::move(coeffs);
  return s;
}

void FieldScalar::check_same_field(const FieldScalar& o) const {
  if (field_.get() == o.field_.get()) return;
  if (!field_->same_as(*o.field_))
    throw FieldMismatch(field_->to_string() + " vs " + o.field_->to_string());
}

bool FieldScalar::is_zero() const {
  switch (field_->kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(v_) == 0;
    case FieldKind::Prime: return std::get<u64>(v_) == 0;
    case FieldKind::Extension: {
      for (u64 c : std::get<std::vector<u64>>(v_))
        if (c) return false;
      return true;
    }
  }
  return false;
}

bool FieldScalar::is_one() const {
  switch (field_->kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(v_) == 1;
    case FieldKind::Prime: return std::get<u64>(v_) == 1;
    case FieldKind::Extension: {
      const auto& c = std::get<std::vector<u64>>(v_);
      if (c.empty() || c[0] != 1) return false;
      for (size_t i = 1; i < c.size(); ++i)
        if (c[i]) return false;
      return true;
    }
  }
  return false;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  switch (field_->kind()) {
    case FieldKind::Rationals: r.v_ = mpq_class(-std::get<mpq_class>(v_)); break;
    case FieldKind::Prime: {
      u64 p = field_->characteristic();
      u64 a = std::get<u64>(v_);
      r.v_ = a == 0 ? 0 : p - a;
      break;
    }
    case FieldKind::Extension: {
      u64 p = field_->characteristic();
      auto c = std::get<std::vector<u64>>(v_);
      for (auto& x : c) x = x == 0 ? 0 : p - x;
      r.v_ = std::move(c);
      break;
    }
  }
  return r;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same_field(o);
  FieldScalar r = *this;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
      break;
    case FieldKind::Prime:
      r.v_ = addm(std::get<u64>(v_), std::get<u64>(o.v_), field_->characteristic());
      break;
    case FieldKind::Extension: {
      u64 p = field_->characteristic();
      auto c = std::get<std::vector<u64>>(v_);
      const auto& d = std::get<std::vector<u64>>(o.v_);
      for (size_t i = 0; i < c.size(); ++i) c[i] = addm(c[i], d[i], p);
      r.v_ = std::move(c);
      break;
    }
  }
  return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  return *this + (-o);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same_field(o);
  FieldScalar r = *this;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
      break;
    case FieldKind::Prime:
      r.v_ = mulm(std::get<u64>(v_), std::get<u64>(o.v_), field_->characteristic());
      break;
    case FieldKind::Extension: {
      u64 p = field_->characteristic();
      UPoly prod = umul(std::get<std::vector<u64>>(v_),
                        std::get<std::vector<u64>>(o.v_), p);
      prod = umod(prod, field_->modulus(), p);
      prod.resize(field_->extension_degree(), 0);
      r.v_ = std::move(prod);
      break;
    }
  }
  return r;
}

FieldScalar FieldScalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  FieldScalar r = *this;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
      break;
    case FieldKind::Prime:
      r.v_ = invm(std::get<u64>(v_), field_->characteristic());
      break;
    case FieldKind::Extension: {
      UPoly a = std::get<std::vector<u64>>(v_);
      trim(a);
      UPoly i = uinv_mod(a, field_->modulus(), field_->characteristic());
      i.resize(field_->extension_degree(), 0);
      r.v_ = std::move(i);
      break;
    }
  }
  return r;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  return *this * o.inv();
}

FieldScalar FieldScalar::pow(u64 e) const {
  FieldScalar r = one(field_);
  FieldScalar b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  check_same_field(o);
  return v_ == o.v_;
}

FieldScalar FieldScalar::frobenius(unsigned i) const {
  if (!field_->is_finite())
    throw FieldMismatch("frobenius needs a finite field");
  FieldScalar r = *this;
  for (unsigned s = 0; s < i; ++s) r = r.pow(field_->characteristic());
  return r;
}

bool FieldScalar::in_subfield(unsigned d) const {
  if (!field_->is_finite())
    throw FieldMismatch("in_subfield needs a finite field");
  unsigned k = field_->extension_degree();
  if (d == 0 || k % d != 0)
    throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(k));
  return frobenius(d) == *this;
}

const mpq_class& FieldScalar::as_rational() const {
  return std::get<mpq_class>(v_);
}

u64 FieldScalar::residue() const { return std::get<u64>(v_); }

const std::vector<u64>& FieldScalar::coeffs() const {
  return std::get<std::vector<u64>>(v_);
}

std::string FieldScalar::to_string() const {
  switch (field_->kind()) {
    case FieldKind::Rationals: {
      std::ostringstream os;
      os << std::get<mpq_class>(v_);
      return os.str();
    }
    case FieldKind::Prime: return std::to_string(std::get<u64>(v_));
    case FieldKind::Extension: {
      const auto& c = std::get<std::vector<u64>>(v_);
      std::string out;
      for (int i = (int)c.size() - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(c[i]);
        } else {
          if (c[i] != 1) out += std::to_string(c[i]) + "*";
          out += "a";
          if (i > 1) out += "^" + std::to_string(i);
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

bool FieldScalar::key_less(const FieldScalar& o) const {
  check_same_field(o);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(v_) < std::get<mpq_class>(o.v_);
    case FieldKind::Prime: return std::get<u64>(v_) < std::get<u64>(o.v_);
    case FieldKind::Extension:
      return std::get<std::vector<u64>>(v_) < std::get<std::vector<u64>>(o.v_);
  }
  return false;
}

FieldScalar parse_scalar(const FieldPtr& f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return FieldScalar::from_mpz(f, mpz_class(text));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return FieldScalar::from_fraction(f, num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal '" + text + "'");
  }
}

std::vector<FieldScalar> all_elements(const FieldPtr& f) {
  if (!f->is_finite())
    throw Error("InfiniteField", ErrorKind::Input, "cannot enumerate Q");
  u64 p = f->characteristic();
  unsigned k = f->extension_degree();
  u64 n = f->order();
  std::vector<FieldScalar> out;
  out.reserve(n);
  for (u64 idx = 0; idx < n; ++idx) {
    if (f->kind() == FieldKind::Prime) {
      out.push_back(FieldScalar::prime_elem(f, idx));
    } else {
      std::vector<u64> c(k);
      u64 t = idx;
      for (unsigned i = 0; i < k; ++i) {
        c[i] = t % p;
        t /= p;
      }
      out.push_back(FieldScalar::ext_elem(f, std::move(c)));
    }
  }
  return out;
}

std::vector<FieldScalar> subfield_elements(const FieldPtr& f, unsigned d) {
  std::vector<FieldScalar> out;
  for (auto& e : all_elements(f))
    if (e.in_subfield(d)) out.push_back(e);
  return out;
}

FieldScalar embed_in_extension(const FieldScalar& e, const FieldPtr& ext) {
  if (ext->kind() != FieldKind::Extension)
    throw FieldMismatch("embed target must be an extension field");
  switch (e.field()->kind()) {
    case FieldKind::Rationals:
      throw FieldMismatch("cannot embed Q into a finite field");
    case FieldKind::Prime: {
      if (e.field()->characteristic() != ext->characteristic())
        throw FieldMismatch("characteristics differ");
      std::vector<u64> c(ext->extension_degree(), 0);
      c[0] = e.residue();
      return FieldScalar::ext_elem(ext, std::move(c));
    }
    case FieldKind::Extension: {
      if (!e.field()->same_as(*ext)) throw FieldMismatch("extension fields differ");
      return e;
    }
  }
  throw FieldMismatch("unreachable");
}

}  // namespace echar
