#include "echar/polygcd.hpp"

#include <algorithm>

namespace echar {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Poly normalized_monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f.monic(kGrevlex);
}

// leading coefficient of f in var: coefficient polynomial of var^(deg_var f)
Poly lead_coeff_in(const Poly& f, std::size_t var, unsigned deg) {
  Poly out(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m[var] == deg) out.add_term(m.with_value(var, 0), c);
  return out;
}

}  // namespace

bool try_exact_divide(const Poly& f, const Poly& g, Poly* quotient) {
  if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  Poly q(f.ring());
  Poly p = f;
  auto [ltg, lcg] = g.leading_term(kGrevlex);
  FieldScalar lcg_inv = lcg.inv();
  while (!p.is_zero()) {
    auto [ltp, lcp] = p.leading_term(kGrevlex);
    if (!ltg.divides(ltp)) return false;
    ExponentVec m = ltp.minus(ltg);
    FieldScalar c = lcp * lcg_inv;
    q.add_term(m, c);
    p = p - g.mul_monomial(m, c);
  }
  if (quotient) *quotient = q;
  return true;
}

Poly exact_divide(const Poly& f, const Poly& g) {
  Poly q(f.ring());
  if (!try_exact_divide(f, g, &q))
    throw Error("InexactDivision", ErrorKind::Input,
                "polynomial division is not exact");
  return q;
}

std::vector<Poly> univariate_coeffs(const Poly& f, std::size_t var) {
  if (f.is_zero()) return {};
  unsigned d = f.degree_in(var);
  std::vector<Poly> out((std::size_t)d + 1, Poly::zero(f.ring()));
  for (const auto& [m, c] : f.terms())
    out[m[var]].add_term(m.with_value(var, 0), c);
  return out;
}

Poly from_univariate_coeffs(const RingPtr& ring, const std::vector<Poly>& coeffs,
                            std::size_t var) {
  Poly out(ring);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [m, c] : coeffs[d].terms()) {
      if (m[var]) throw AmbientMismatch("coefficient uses the main variable");
      out.add_term(m.with_value(var, (unsigned)d), c);
    }
  }
  return out;
}

Poly pseudo_rem(const Poly& f, const Poly& g, std::size_t var) {
  if (g.is_zero()) throw ZeroPolynomial("pseudo-remainder by zero");
  unsigned dg = g.degree_in(var);
  Poly lcg = lead_coeff_in(g, var, dg);
  Poly r = f;
  unsigned df = f.degree_in(var);
  if (f.is_zero() || df < dg) return r;
  long n = (long)df - (long)dg + 1;
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    unsigned dr = r.degree_in(var);
    Poly lcr = lead_coeff_in(r, var, dr);
    ExponentVec shift = ExponentVec::zeros(r.ring()->vars.size())
                            .with_value(var, dr - dg);
    r = r * lcg - (g * lcr).mul_monomial(shift, FieldScalar::one(r.ring()->field));
    --n;
  }
  // pad so that exactly lc(g)^(deg f - deg g + 1) multiplies f
  for (; n > 0; --n) r = r * lcg;
  return r;
}

Poly poly_content(const Poly& f, std::size_t var) {
  std::vector<Poly> cs = univariate_coeffs(f, var);
  Poly g = Poly::zero(f.ring());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized_monic(c) : poly_gcd(g, c);
    if (!g.is_zero() && g.is_constant()) return Poly::one(f.ring());
  }
  return g;
}

Poly primitive_part(const Poly& f, std::size_t var) {
  if (f.is_zero()) return f;
  Poly c = poly_content(f, var);
  if (c.is_constant()) return normalized_monic(f);
  return normalized_monic(exact_divide(f, c));
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return normalized_monic(g);
  if (g.is_zero()) return normalized_monic(f);
  if (f.is_constant() || g.is_constant()) return Poly::one(f.ring());

  std::size_t n = f.ring()->vars.size();
  std::size_t var = n;
  for (std::size_t i = n; i-- > 0;) {
    if (f.uses_var(i) || g.uses_var(i)) {
      var = i;
      break;
    }
  }
  if (var == n) return Poly::one(f.ring());

  unsigned df = f.degree_in(var), dg = g.degree_in(var);
  if (df == 0) return poly_gcd(f, poly_content(g, var));
  if (dg == 0) return poly_gcd(poly_content(f, var), g);

  Poly cf = poly_content(f, var);
  Poly cg = poly_content(g, var);
  Poly c = poly_gcd(cf, cg);
  Poly A = cf.is_constant() ? f : exact_divide(f, cf);
  Poly B = cg.is_constant() ? g : exact_divide(g, cg);
  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);

  // subresultant polynomial remainder sequence (Brown)
  Poly gg = Poly::one(f.ring());
  Poly h = Poly::one(f.ring());
  for (;;) {
    unsigned delta = A.degree_in(var) - B.degree_in(var);
    Poly R = pseudo_rem(A, B, var);
    if (R.is_zero()) break;
    if (R.degree_in(var) == 0) {
      B = R;
      break;
    }
    Poly divisor = gg * h.pow(delta);
    Poly next(f.ring());
    if (!try_exact_divide(R, divisor, &next)) next = primitive_part(R, var);
    A = B;
    B = next;
    gg = lead_coeff_in(A, var, A.degree_in(var));
    if (delta > 0) {
      Poly num = gg.pow(delta);
      if (delta == 1) {
        h = num;
      } else {
        Poly hd(f.ring());
        if (!try_exact_divide(num, h.pow(delta - 1), &hd))
          hd = primitive_part(num, var);
        h = hd;
      }
    }
  }
  if (B.degree_in(var) == 0) return normalized_monic(c);
  Poly pp = primitive_part(B, var);
  return normalized_monic(c.is_constant() ? pp : c * pp);
}

Poly squarefree_part(const Poly& f, std::size_t var) {
  if (f.is_zero() || f.degree_in(var) == 0) return normalized_monic(f);
  Poly df = f.differentiate(var);
  if (df.is_zero())
    throw InseparableEliminant(
        "derivative in " + f.ring()->vars[var] +
        " vanishes in characteristic " +
        std::to_string(f.ring()->field->characteristic()));
  Poly g = poly_gcd(f, df);
  Poly s = g.is_constant() ? f : exact_divide(f, g);
  return primitive_part(s, var);
}

}  // namespace echar
