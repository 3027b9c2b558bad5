#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "echar/errors.hpp"

namespace echar {

enum class FieldKind { Rationals, Prime, Extension };

class FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

/// Immutable descriptor of a coefficient field: Q, F_p, or F_{p^k} presented
/// as F_p[a]/(m(a)) with m monic irreducible of degree k.
class FieldDesc {
public:
  static constexpr std::uint64_t kDefaultTrialBound = 1000000;

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p,
                        std::uint64_t trial_bound = kDefaultTrialBound);
  /// Seeded search for a monic irreducible modulus of degree k over F_p.
  /// Deterministic: same (p, k, seed) always yields the same modulus.
  static FieldPtr extension(std::uint64_t p, unsigned k, std::uint64_t seed,
                            std::uint64_t trial_bound = kDefaultTrialBound);
  /// Extension with a caller-supplied monic modulus (checked irreducible).
  static FieldPtr extension_with_modulus(std::uint64_t p,
                                         std::vector<std::uint64_t> modulus);
  /// Parse "Q", "F<p>" or "F<p>^<k>"; extension moduli use seed 0.
  static FieldPtr parse(const std::string& spec);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }  // 0 for Q
  unsigned extension_degree() const { return k_; }     // 1 for F_p, 0 for Q
  /// Modulus polynomial of the extension, low degree first, length k+1, monic.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  /// p^k as an unsigned integer; finite fields only.
  std::uint64_t order() const;
  bool is_finite() const { return kind_ != FieldKind::Rationals; }
  bool same_as(const FieldDesc& other) const;
  std::string to_string() const;  // "Q", "F5", "F5^2"

private:
  FieldDesc(FieldKind kind, std::uint64_t p, unsigned k,
            std::vector<std::uint64_t> modulus)
      : kind_(kind), p_(p), k_(k), modulus_(std::move(modulus)) {}

  FieldKind kind_;
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;
};

/// An exact element of Q, F_p or F_{p^k}. Values are immutable in spirit:
/// arithmetic returns fresh scalars, so sharing across threads is safe.
class FieldScalar {
public:
  FieldScalar();  // zero of Q

  static FieldScalar zero(const FieldPtr& f);
  static FieldScalar one(const FieldPtr& f);
  static FieldScalar from_integer(const FieldPtr& f, long v);
  static FieldScalar from_mpz(const FieldPtr& f, const mpz_class& v);
  /// a/b mapped into f (exact in Q, a*b^-1 in finite fields).
  static FieldScalar from_fraction(const FieldPtr& f, const mpz_class& num,
                                   const mpz_class& den);
  static FieldScalar rational(mpq_class q);
  static FieldScalar prime_elem(const FieldPtr& f, std::uint64_t residue);
  /// coeffs low degree first, length <= k; padded with zeros.
  static FieldScalar ext_elem(const FieldPtr& f,
                              std::vector<std::uint64_t> coeffs);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldScalar operator-() const;
  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar inv() const;
  FieldScalar pow(std::uint64_t e) const;
  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  /// e^(p^i); finite fields only. i = 0 is the identity.
  FieldScalar frobenius(unsigned i) const;
  /// True iff the element lies in F_{p^d}; requires d | k.
  bool in_subfield(unsigned d) const;

  /// Access for Q scalars.
  const mpq_class& as_rational() const;
  /// Residue of a prime-field scalar.
  std::uint64_t residue() const;
  /// Coefficient vector (length k) of an extension scalar.
  const std::vector<std::uint64_t>& coeffs() const;

  std::string to_string() const;
  /// Total order usable as a container key; not algebraically meaningful.
  bool key_less(const FieldScalar& o) const;

private:
  friend class FieldDesc;
  void check_same_field(const FieldScalar& o) const;

  FieldPtr field_;
  std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>> v_;
};

/// Parse a scalar literal: "n" or "n/d" for Q, residues for F_p.
FieldScalar parse_scalar(const FieldPtr& f, const std::string& text);

/// All elements of a finite field, in a fixed deterministic order.
std::vector<FieldScalar> all_elements(const FieldPtr& f);
/// Elements of the subfield F_{p^d} inside f = F_{p^k}; requires d | k.
std::vector<FieldScalar> subfield_elements(const FieldPtr& f, unsigned d);
/// Embed an F_p scalar (or a Q integer already reduced) into an extension of F_p.
FieldScalar embed_in_extension(const FieldScalar& e, const FieldPtr& ext);

}  // namespace echar
