#pragma once

#include <cstdint>
#include <mutex>

#include "echar/multipoly.hpp"
#include "echar/polygcd.hpp"

namespace echar {

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by the leading term of another, sorted ascending by leading monomial.
/// Canonical for a given ideal and order.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> elems;

  bool is_unit() const {
    return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
  }
  bool is_zero() const { return elems.empty(); }
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                         const MonomialOrder& order);

/// Unique remainder with no term divisible by a leading term of G;
/// f - normal_form(f, G) lies in the ideal of G.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

/// Generator list plus a lazily filled per-order cache of reduced bases.
/// The cache behaves as an atomic insert-if-absent map, so Ideal values can
/// be shared across threads.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Poly> gens);
  static Ideal zero(const RingPtr& r) { return Ideal(r, {}); }
  static Ideal unit(const RingPtr& r) { return Ideal(r, {Poly::one(r)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  const GroebnerBasis& groebner(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero_ideal() const { return groebner().is_zero(); }
  bool contains(const Poly& f) const;

private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const std::vector<Poly>& extra);

/// Rabinowitsch test: f in sqrt(I) iff 1 in I + (1 - t f).
bool radical_membership(const Poly& f, const Ideal& I);

/// I intersect k[keep], from a block-order basis; the result lives in the
/// smaller ring whose variables are exactly `keep` (in their original order).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& keep);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Poly& f);      // I : f^inf
Ideal quotient(const Ideal& I, const Ideal& J);     // I : J
Ideal saturate_ideal(const Ideal& I, const Ideal& J);  // I : J^inf

/// Homogenization of I: a degree-compatible (grevlex) basis homogenized
/// element-wise, with the fresh variable prepended at position 0.
Ideal homogenize_ideal(const Ideal& I);

/// Krull dimension via independent variable sets of the leading-term ideal;
/// -1 for the unit ideal, n for the zero ideal.
int dimension(const Ideal& I);

/// First maximal independent set in increasing-bitmask order (bit i = var i).
std::vector<std::size_t> first_maximal_independent_set(const Ideal& I);

/// Univariate polynomial in t with rational coefficients taking integer
/// values at all large integers.
struct HilbertPoly {
  std::vector<mpq_class> coeffs;  // low degree first, no trailing zeros

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return (int)coeffs.size() - 1; }
  mpq_class leading_coefficient() const;
  mpq_class evaluate(const mpz_class& t) const;
  std::string to_string() const;
};

HilbertPoly hilbert_polynomial(const Ideal& Ih);  // NotHomogeneous if not
std::int64_t degree(const Ideal& I);  // lc(P) * (deg P)!, 0 when P = 0

bool ideal_equal(const Ideal& I, const Ideal& J);
/// Canonical serialization: field, ambient and the reduced grevlex basis.
/// Used as memo key and recursion fingerprint.
std::string canonical_key(const Ideal& I);

}  // namespace echar
