#include "echar/decompose.hpp"

#include <algorithm>
#include <set>

namespace echar {

namespace {

std::vector<std::size_t> complement(std::size_t n,
                                    const std::vector<std::size_t>& u) {
  std::vector<bool> in(n, false);
  for (std::size_t i : u) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

// Product of the leading coefficients (as polynomials in the parameter
// variables u) of a block-order basis of I in which the non-parameters
// dominate. GTZ lemma: I k(u) cap k[x] = I : h^inf for this h.
Poly leading_coeff_product(const Ideal& I, const std::vector<std::size_t>& u) {
  const RingPtr& r = I.ring();
  std::size_t n = r->vars.size();
  std::vector<std::size_t> y = complement(n, u);

  std::vector<std::string> pvars;
  std::vector<std::size_t> pos(n);
  for (std::size_t i : y) {
    pos[i] = pvars.size();
    pvars.push_back(r->vars[i]);
  }
  for (std::size_t i : u) {
    pos[i] = pvars.size();
    pvars.push_back(r->vars[i]);
  }
  RingPtr pr = make_ring(r->field, pvars);
  std::vector<Poly> pgens;
  for (const auto& g : I.gens()) pgens.push_back(map_to_ring(g, pr, pos));
  MonomialOrder order = MonomialOrder::block_elim((unsigned)y.size());
  GroebnerBasis gb = buchberger(pr, pgens, order);

  std::vector<std::size_t> back(pr->vars.size());
  for (std::size_t i = 0; i < n; ++i) back[pos[i]] = i;

  std::vector<Poly> coeffs;
  for (const auto& g : gb.elems) {
    ExponentVec lt = g.leading_term(order).first;
    // coefficient in k[u] of the leading y-monomial
    Poly lc(pr);
    for (const auto& [m, c] : g.terms()) {
      bool same_head = true;
      for (std::size_t i = 0; i < y.size() && same_head; ++i)
        if (m[i] != lt[i]) same_head = false;
      if (!same_head) continue;
      std::vector<unsigned> e(m.raw());
      for (std::size_t i = 0; i < y.size(); ++i) e[i] = 0;
      lc.add_term(ExponentVec(std::move(e)), c);
    }
    if (lc.is_constant()) continue;
    Poly mapped = map_to_ring(lc.monic(MonomialOrder::grevlex()), r, back);
    bool seen = false;
    for (const auto& c : coeffs)
      if (c == mapped) seen = true;
    if (!seen) coeffs.push_back(mapped);
  }
  Poly h = Poly::one(r);
  for (const auto& c : coeffs) h = h * c;
  return h;
}

// squarefree parts (over the function field k(u)) of an eliminant of each
// non-parameter variable, lifted back into the ring of I
std::vector<Poly> squarefree_eliminants(const Ideal& I,
                                        const std::vector<std::size_t>& u) {
  const RingPtr& r = I.ring();
  std::size_t n = r->vars.size();
  std::vector<Poly> out;
  for (std::size_t yj : complement(n, u)) {
    std::vector<std::size_t> keep = u;
    keep.push_back(yj);
    std::sort(keep.begin(), keep.end());
    Ideal E = eliminate(I, keep);
    std::size_t jpos = var_index(E.ring(), r->vars[yj]);
    const Poly* best = nullptr;
    unsigned best_deg = 0;
    for (const auto& g : E.gens()) {
      unsigned d = g.degree_in(jpos);
      if (d == 0) continue;
      if (!best || d < best_deg) {
        best = &g;
        best_deg = d;
      }
    }
    if (!best)
      throw Error("Internal", ErrorKind::Input,
                  "no eliminant found for an independent set");
    Poly s = squarefree_part(*best, jpos);
    std::vector<std::size_t> back(E.ring()->vars.size());
    for (std::size_t i = 0; i < back.size(); ++i)
      back[i] = var_index(r, E.ring()->vars[i]);
    out.push_back(map_to_ring(s, r, back));
  }
  return out;
}

}  // namespace

Ideal radical_zero_dim(const Ideal& I) {
  int d = dimension(I);
  if (d > 0) throw NotZeroDimensional("radical_zero_dim needs dim <= 0");
  if (d < 0) return I;  // unit ideal
  const RingPtr& r = I.ring();
  std::vector<Poly> extra;
  for (std::size_t i = 0; i < r->vars.size(); ++i) {
    Ideal E = eliminate(I, {i});
    if (E.gens().empty())
      throw NotZeroDimensional("missing univariate eliminant");
    Poly m = E.gens()[0];
    Poly s = squarefree_part(m, 0);
    extra.push_back(map_to_ring(s, r, {i}));
  }
  return ideal_sum(I, extra);
}

Ideal radical(const Ideal& I) {
  if (I.is_zero_ideal() || I.is_unit()) return I;
  int d = dimension(I);
  if (d <= 0) return radical_zero_dim(I);

  std::vector<std::size_t> u = first_maximal_independent_set(I);
  std::vector<Poly> sf = squarefree_eliminants(I, u);
  Ideal J = ideal_sum(I, sf);
  Poly h = leading_coeff_product(I, u) * leading_coeff_product(J, u);
  Ideal C = h.is_constant() ? J : saturate(J, h);
  if (h.is_constant()) return C;
  Ideal rest = radical(ideal_sum(I, {h}));
  if (rest.is_unit()) return C;
  return intersect(C, rest);
}

ComponentList components(const Ideal& I) {
  if (I.is_unit()) throw UnitIdeal("components of the unit ideal");
  return components_of_radical(radical(I));
}

ComponentList components_of_radical(const Ideal& input) {
  if (input.is_unit()) throw UnitIdeal("components of the unit ideal");
  Ideal R = input;
  ComponentList out;
  while (!R.is_unit()) {
    int d = dimension(R);
    if (d <= 0) {
      out.components.push_back(R);
      break;
    }
    // peel off every minimal prime of top dimension
    std::vector<Ideal> pieces;
    Ideal cur = R;
    while (!cur.is_unit() && dimension(cur) == d) {
      std::vector<std::size_t> u = first_maximal_independent_set(cur);
      Poly h = leading_coeff_product(cur, u);
      if (h.is_constant()) {
        pieces.push_back(cur);
        cur = Ideal::unit(cur.ring());
        break;
      }
      pieces.push_back(saturate(cur, h));
      cur = radical(ideal_sum(cur, {h}));
    }
    // merge coinciding pieces, then intersect into the dim-d component
    std::sort(pieces.begin(), pieces.end(), [](const Ideal& a, const Ideal& b) {
      return canonical_key(a) < canonical_key(b);
    });
    std::vector<Ideal> unique_pieces;
    for (const auto& p : pieces) {
      if (!unique_pieces.empty() &&
          canonical_key(unique_pieces.back()) == canonical_key(p))
        continue;
      unique_pieces.push_back(p);
    }
    Ideal top = unique_pieces[0];
    for (std::size_t i = 1; i < unique_pieces.size(); ++i)
      top = intersect(top, unique_pieces[i]);
    out.components.push_back(top);

    // remainder: strip primes lying inside the components found so far
    R = cur;
    for (const auto& piece : out.components) {
      if (R.is_unit()) break;
      R = saturate_ideal(R, piece);
    }
  }
  return out;
}

std::int64_t count_points_zero_dim(const Ideal& I) {
  int d = dimension(I);
  if (d > 0) throw NotZeroDimensional("count_points_zero_dim needs dim <= 0");
  if (d < 0) return 0;  // empty variety
  Ideal R = radical_zero_dim(I);
  const GroebnerBasis& gb = R.groebner();
  std::size_t n = R.ring()->vars.size();
  std::vector<ExponentVec> lts;
  for (const auto& g : gb.elems) lts.push_back(g.leading_term(gb.order).first);
  // bound per variable from the pure-power leading terms
  std::vector<unsigned> bound(n, 0);
  for (const auto& lt : lts) {
    std::size_t nz = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i]) {
        ++nz;
        var = i;
      }
    if (nz == 1 && (bound[var] == 0 || lt[var] < bound[var]))
      bound[var] = lt[var];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0)
      throw NotZeroDimensional("leading-term ideal has no pure power in " +
                               R.ring()->vars[i]);
  // walk the staircase
  std::int64_t count = 0;
  std::vector<unsigned> e(n, 0);
  for (;;) {
    ExponentVec m{std::vector<unsigned>(e)};
    bool standard = true;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

}  // namespace echar
