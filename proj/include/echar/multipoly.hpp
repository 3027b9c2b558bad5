#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "echar/fields.hpp"

namespace echar {

/// Exponent vector of a monomial, with cached total degree.
class ExponentVec {
public:
  ExponentVec() = default;
  explicit ExponentVec(std::vector<unsigned> e);
  static ExponentVec zeros(std::size_t n);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned total_degree() const { return deg_; }
  bool is_constant() const { return deg_ == 0; }

  bool divides(const ExponentVec& m) const;
  ExponentVec plus(const ExponentVec& o) const;
  ExponentVec minus(const ExponentVec& o) const;  // pre: o.divides(*this)
  static ExponentVec lcm(const ExponentVec& a, const ExponentVec& b);
  bool coprime_with(const ExponentVec& o) const;

  ExponentVec with_value(std::size_t i, unsigned v) const;

  /// Plain lexicographic compare on the raw vector; container key only.
  friend bool operator<(const ExponentVec& a, const ExponentVec& b) {
    return a.e_ < b.e_;
  }
  friend bool operator==(const ExponentVec& a, const ExponentVec& b) {
    return a.e_ == b.e_;
  }
  const std::vector<unsigned>& raw() const { return e_; }

private:
  std::vector<unsigned> e_;
  unsigned deg_ = 0;
};

enum class Cmp { LT, EQ, GT };

/// Total multiplicative well-orders on monomials. block(k) compares the
/// first k variables by grevlex first (so those variables dominate and a
/// block-order Groebner basis eliminates them), then grevlex on the rest.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  unsigned block = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_elim(unsigned k) { return {Kind::Block, k}; }
  std::string key() const;
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block == o.block;
  }
};

Cmp compare(const MonomialOrder& order, const ExponentVec& a,
            const ExponentVec& b);

/// Comparator adapter so std::map can be keyed by a monomial order.
struct OrderLess {
  MonomialOrder order;
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return compare(order, a, b) == Cmp::LT;
  }
};

/// A polynomial ring: coefficient field plus an ordered list of variables.
struct Ring {
  FieldPtr field;
  std::vector<std::string> vars;
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);
std::size_t var_index(const RingPtr& r, const std::string& name);

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
/// Values are immutable once built; all operations are pure.
class Poly {
public:
  using TermMap = std::map<ExponentVec, FieldScalar>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly zero(const RingPtr& r) { return Poly(r); }
  static Poly constant(const RingPtr& r, const FieldScalar& c);
  static Poly one(const RingPtr& r);
  static Poly variable(const RingPtr& r, std::size_t idx);
  static Poly monomial(const RingPtr& r, const ExponentVec& m,
                       const FieldScalar& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;  // 0 for the zero polynomial
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool uses_var(std::size_t var) const;

  /// Merge a term into the map, dropping it if the sum cancels.
  void add_term(const ExponentVec& m, const FieldScalar& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FieldScalar& c) const;
  Poly mul_monomial(const ExponentVec& m, const FieldScalar& c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly differentiate(std::size_t var) const;
  FieldScalar evaluate(const std::vector<FieldScalar>& point) const;
  /// Substitute one variable by a constant; the variable stays in the ring.
  Poly substitute(std::size_t var, const FieldScalar& value) const;

  std::pair<ExponentVec, FieldScalar> leading_term(const MonomialOrder& o) const;
  FieldScalar coefficient(const ExponentVec& m) const;
  /// Divide through by the leading coefficient under the order.
  Poly monic(const MonomialOrder& o) const;
  FieldScalar content_integer() const;  // Q only: gcd of numerators / lcm of dens

  std::string to_string(const MonomialOrder& o = MonomialOrder::grevlex()) const;

private:
  void check_compatible(const Poly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

// ----- ring-changing helpers -----

/// Homogenize with a fresh variable prepended at position 0.
Poly homogenize_poly(const Poly& f, const std::string& x0);
/// Substitute x0 := value (0 or 1) and drop it from the ring.
Poly dehomogenize(const Poly& f, const std::string& x0, int value);
/// Substitute variable `var` := value and drop it from the ring.
Poly substitute_and_drop(const Poly& f, std::size_t var, const FieldScalar& value);
/// Map f into `target` using positions[i] = index in target of f's variable i.
Poly map_to_ring(const Poly& f, const RingPtr& target,
                 const std::vector<std::size_t>& positions);
/// Pick a variable name not already used in the ring ("x0", "x0_", ...).
std::string fresh_var_name(const RingPtr& r, const std::string& base);

// ----- small dense linear algebra over the coefficient field -----

using Matrix = std::vector<std::vector<FieldScalar>>;

Matrix identity_matrix(const FieldPtr& f, std::size_t n);
FieldScalar det(const Matrix& A);
Matrix matrix_inverse(const Matrix& A);  // SingularMatrix if det = 0
Matrix matrix_mul(const Matrix& A, const Matrix& B);

/// Compose f with the substitution x_i -> sum_j A[i][j] x_j (A invertible).
Poly apply_linear(const Poly& f, const Matrix& A);

}  // namespace echar
