#include "echar/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace echar {

namespace {

using OMap = std::map<ExponentVec, FieldScalar, OrderLess>;

OMap to_omap(const Poly& f, const MonomialOrder& order) {
  OMap m{OrderLess{order}};
  for (const auto& [e, c] : f.terms()) m.emplace(e, c);
  return m;
}

// p -= c * x^shift * g, in place
void subtract_multiple(OMap& p, const Poly& g, const ExponentVec& shift,
                       const FieldScalar& c) {
  for (const auto& [e, k] : g.terms()) {
    ExponentVec m = e.plus(shift);
    FieldScalar delta = k * c;
    auto it = p.find(m);
    if (it == p.end()) {
      p.emplace(m, -delta);
    } else {
      FieldScalar s = it->second - delta;
      if (s.is_zero())
        p.erase(it);
      else
        it->second = s;
    }
  }
}

struct BasisEntry {
  Poly poly;          // monic under the active order
  ExponentVec lt;
};

// full division of f by the entries; returns the remainder
Poly reduce_full(const Poly& f, const std::vector<BasisEntry>& basis,
                 const MonomialOrder& order) {
  OMap p = to_omap(f, order);
  Poly rem(f.ring());
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    const ExponentVec m = lead->first;
    const FieldScalar c = lead->second;
    bool reduced = false;
    for (const auto& b : basis) {
      if (!b.lt.divides(m)) continue;
      subtract_multiple(p, b.poly, m.minus(b.lt), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(m, c);
      p.erase(lead);
    }
  }
  return rem;
}

struct Pair {
  unsigned deg;
  std::size_t i, j;
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

// ---- fraction-free core over Q: primitive integer polynomials ----
//
// Reductions cross-multiply by gcd-reduced leading coefficients instead of
// dividing, which keeps everything in Z and avoids rational blowup on the
// large eliminants this kernel produces.

using ZMap = std::map<ExponentVec, mpz_class, OrderLess>;

struct ZEntry {
  ExponentVec lt;
  std::vector<std::pair<ExponentVec, mpz_class>> terms;  // lt first
};

ZMap poly_to_zmap(const Poly& f, const MonomialOrder& order) {
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_class d = c.as_rational().get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  ZMap out{OrderLess{order}};
  for (const auto& [m, c] : f.terms()) {
    const mpq_class& q = c.as_rational();
    out.emplace(m, mpz_class(q.get_num() * (den_lcm / q.get_den())));
  }
  return out;
}

void zmap_make_primitive(ZMap& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& [m, c] : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (std::prev(p.end())->second < 0) g = -g;
  if (g == 1) return;
  for (auto& [m, c] : p) c /= g;
}

ZEntry zmap_to_entry(const ZMap& p) {
  ZEntry e;
  e.lt = std::prev(p.end())->first;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    e.terms.emplace_back(it->first, it->second);
  return e;
}

Poly zentry_to_poly(const RingPtr& r, const ZEntry& e, bool monic) {
  Poly f(r);
  const mpz_class& lc = e.terms[0].second;
  for (const auto& [m, c] : e.terms) {
    mpq_class q = monic ? mpq_class(c, lc) : mpq_class(c);
    q.canonicalize();
    f.add_term(m, FieldScalar::rational(q));
  }
  return f;
}

// full fraction-free reduction; result is primitive (or empty)
ZMap zreduce_full(ZMap p, const std::vector<ZEntry>& basis,
                  const MonomialOrder& order) {
  ZMap rem{OrderLess{order}};
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    const ZEntry* div = nullptr;
    for (const auto& b : basis) {
      if (b.lt.divides(lead->first)) {
        div = &b;
        break;
      }
    }
    if (!div) {
      rem.emplace(lead->first, lead->second);
      p.erase(lead);
      continue;
    }
    ExponentVec shift = lead->first.minus(div->lt);
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), lead->second.get_mpz_t(),
            div->terms[0].second.get_mpz_t());
    mpz_class a = div->terms[0].second / d;  // scales p and rem
    mpz_class b = lead->second / d;          // multiplies the divisor
    if (a < 0) {
      a = -a;
      b = -b;
    }
    if (a != 1) {
      for (auto& [m, c] : p) c *= a;
      for (auto& [m, c] : rem) c *= a;
    }
    for (const auto& [m, c] : div->terms) {
      ExponentVec t = m.plus(shift);
      auto it = p.find(t);
      if (it == p.end()) {
        mpz_class v = -b * c;
        if (v != 0) p.emplace(t, std::move(v));
      } else {
        it->second -= b * c;
        if (it->second == 0) p.erase(it);
      }
    }
  }
  zmap_make_primitive(rem);
  return rem;
}

GroebnerBasis buchberger_rational(const RingPtr& ring,
                                  const std::vector<Poly>& gens,
                                  const MonomialOrder& order) {
  GroebnerBasis out{order, {}};
  std::vector<ZEntry> G;
  bool unit = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      unit = true;
      break;
    }
    ZMap z = poly_to_zmap(g, order);
    zmap_make_primitive(z);
    G.push_back(zmap_to_entry(z));
  }
  if (unit) {
    out.elems = {Poly::one(ring)};
    return out;
  }
  if (G.empty()) return out;

  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      ExponentVec l = ExponentVec::lcm(G[i].lt, G[j].lt);
      queue.insert({l.total_degree(), i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    std::size_t i = pr.i, j = pr.j;
    done.insert({i, j});
    if (G[i].lt.coprime_with(G[j].lt)) continue;
    ExponentVec l = ExponentVec::lcm(G[i].lt, G[j].lt);
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == i || k == j || !G[k].lt.divides(l)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(i, k)) && done.count(key(j, k))) chained = true;
    }
    if (chained) continue;

    // integer S-polynomial with gcd-reduced cofactors
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), G[i].terms[0].second.get_mpz_t(),
            G[j].terms[0].second.get_mpz_t());
    mpz_class ci = G[j].terms[0].second / d;
    mpz_class cj = G[i].terms[0].second / d;
    ExponentVec si = l.minus(G[i].lt), sj = l.minus(G[j].lt);
    ZMap s{OrderLess{order}};
    for (const auto& [m, c] : G[i].terms) {
      auto [it, fresh] = s.emplace(m.plus(si), ci * c);
      if (!fresh) it->second += ci * c;
    }
    for (const auto& [m, c] : G[j].terms) {
      ExponentVec t = m.plus(sj);
      auto it = s.find(t);
      if (it == s.end()) {
        s.emplace(t, -cj * c);
      } else {
        it->second -= cj * c;
        if (it->second == 0) s.erase(it);
      }
    }
    ZMap h = zreduce_full(std::move(s), G, order);
    if (h.empty()) continue;
    if (std::prev(h.end())->first.is_constant()) {
      out.elems = {Poly::one(ring)};
      return out;
    }
    G.push_back(zmap_to_entry(h));
    add_pairs_for(G.size() - 1);
  }

  std::vector<ZEntry> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lt.divides(G[i].lt) && !(G[j].lt == G[i].lt && j > i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ZEntry> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ZMap z{OrderLess{order}};
    for (const auto& [m, c] : minimal[i].terms) z.emplace(m, c);
    ZMap r = zreduce_full(std::move(z), others, order);
    reduced.push_back(zentry_to_poly(ring, zmap_to_entry(r), true));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return compare(order, a.leading_term(order).first,
                   b.leading_term(order).first) == Cmp::LT;
  });
  out.elems = std::move(reduced);
  return out;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                         const MonomialOrder& order) {
  if (ring->field->kind() == FieldKind::Rationals)
    return buchberger_rational(ring, gens, order);
  GroebnerBasis out{order, {}};
  std::vector<BasisEntry> G;
  auto push_poly = [&](const Poly& f) -> bool {
    // returns true when the ideal turns out to be the unit ideal
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    Poly m = f.monic(order);
    G.push_back({m, m.leading_term(order).first});
    return false;
  };

  bool unit = false;
  for (const auto& g : gens)
    if (push_poly(g)) unit = true;
  if (unit) {
    out.elems = {Poly::one(ring)};
    return out;
  }
  if (G.empty()) return out;

  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      ExponentVec l = ExponentVec::lcm(G[i].lt, G[j].lt);
      queue.insert({l.total_degree(), i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    std::size_t i = pr.i, j = pr.j;
    done.insert({i, j});
    // coprime leading terms: S-polynomial reduces to zero
    if (G[i].lt.coprime_with(G[j].lt)) continue;
    // chain criterion: some lt_k divides lcm(i,j) and both side pairs are done
    ExponentVec l = ExponentVec::lcm(G[i].lt, G[j].lt);
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == i || k == j || !G[k].lt.divides(l)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(i, k)) && done.count(key(j, k))) chained = true;
    }
    if (chained) continue;

    FieldScalar one = FieldScalar::one(ring->field);
    Poly s = G[i].poly.mul_monomial(l.minus(G[i].lt), one) -
             G[j].poly.mul_monomial(l.minus(G[j].lt), one);
    Poly h = reduce_full(s, G, order);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      out.elems = {Poly::one(ring)};
      return out;
    }
    Poly m = h.monic(order);
    G.push_back({m, m.leading_term(order).first});
    add_pairs_for(G.size() - 1);
  }

  // minimalize: drop elements whose lt is divisible by another lt
  std::vector<BasisEntry> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lt.divides(G[i].lt) && !(G[j].lt == G[i].lt && j > i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // inter-reduce tails
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasisEntry> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce_full(minimal[i].poly, others, order);
    reduced.push_back(r.monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return compare(order, a.leading_term(order).first,
                   b.leading_term(order).first) == Cmp::LT;
  });
  out.elems = std::move(reduced);
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  if (!G.elems.empty() && !same_ring(f.ring(), G.elems[0].ring()))
    throw AmbientMismatch("normal form across different ambients");
  std::vector<BasisEntry> basis;
  basis.reserve(G.elems.size());
  for (const auto& g : G.elems)
    basis.push_back({g, g.leading_term(G.order).first});
  return reduce_full(f, basis, G.order);
}

// -------------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::string, GroebnerBasis> by_order;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;  // zero generators dropped
    if (!same_ring(g.ring(), ring_))
      throw AmbientMismatch("generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
  }
  GroebnerBasis gb = buchberger(ring_, gens_, order);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->by_order.emplace(key, std::move(gb));
  return it->second;
}

bool Ideal::contains(const Poly& f) const {
  return normal_form(f, groebner()).is_zero();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw AmbientMismatch("sum of ideals in different ambients");
  std::vector<Poly> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const std::vector<Poly>& extra) {
  std::vector<Poly> gens = I.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(I.ring(), std::move(gens));
}

bool radical_membership(const Poly& f, const Ideal& I) {
  if (f.is_zero()) return true;
  const RingPtr& r = I.ring();
  std::string tname = fresh_var_name(r, "t");
  std::vector<std::string> vars;
  vars.push_back(tname);
  vars.insert(vars.end(), r->vars.begin(), r->vars.end());
  RingPtr rt = make_ring(r->field, std::move(vars));
  std::vector<std::size_t> shift(r->vars.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(map_to_ring(g, rt, shift));
  Poly t = Poly::variable(rt, 0);
  gens.push_back(Poly::one(rt) - t * map_to_ring(f, rt, shift));
  return Ideal(rt, std::move(gens)).is_unit();
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& keep) {
  const RingPtr& r = I.ring();
  std::size_t n = r->vars.size();
  std::vector<bool> keep_mask(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw UnknownVariable("eliminate: variable out of range");
    keep_mask[k] = true;
  }
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < n; ++i)
    if (!keep_mask[i]) dropped.push_back(i);

  // permuted ring: eliminated variables first, kept variables after
  std::vector<std::string> pvars;
  std::vector<std::size_t> pos(n);
  for (std::size_t i : dropped) {
    pos[i] = pvars.size();
    pvars.push_back(r->vars[i]);
  }
  std::vector<std::size_t> kept_sorted;
  for (std::size_t i = 0; i < n; ++i)
    if (keep_mask[i]) kept_sorted.push_back(i);
  for (std::size_t i : kept_sorted) {
    pos[i] = pvars.size();
    pvars.push_back(r->vars[i]);
  }
  RingPtr pr = make_ring(r->field, pvars);
  std::vector<Poly> pgens;
  for (const auto& g : I.gens()) pgens.push_back(map_to_ring(g, pr, pos));

  GroebnerBasis gb = buchberger(pr, pgens,
                                MonomialOrder::block_elim((unsigned)dropped.size()));

  std::vector<std::string> kvars;
  for (std::size_t i : kept_sorted) kvars.push_back(r->vars[i]);
  RingPtr kr = make_ring(r->field, kvars);
  std::vector<Poly> kept_polys;
  for (const auto& g : gb.elems) {
    bool free_of_dropped = true;
    for (std::size_t d = 0; d < dropped.size() && free_of_dropped; ++d)
      if (g.uses_var(d)) free_of_dropped = false;
    if (!free_of_dropped) continue;
    // positions vector must cover all vars of pr; dropped ones are unused
    std::vector<std::size_t> full(pr->vars.size(), 0);
    for (std::size_t t = 0; t < kept_sorted.size(); ++t)
      full[dropped.size() + t] = t;
    kept_polys.push_back(map_to_ring(g, kr, full));
  }
  return Ideal(kr, std::move(kept_polys));
}

namespace {

// rebuild an ideal produced by eliminate() over an existing ring with the
// same variable names (so callers keep their ring identity)
Ideal rebase(const Ideal& I, const RingPtr& target) {
  std::vector<std::size_t> pos(I.ring()->vars.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    pos[i] = var_index(target, I.ring()->vars[i]);
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(map_to_ring(g, target, pos));
  return Ideal(target, std::move(gens));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw AmbientMismatch("intersection of ideals in different ambients");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  const RingPtr& r = I.ring();
  std::string tname = fresh_var_name(r, "t");
  std::vector<std::string> vars;
  vars.push_back(tname);
  vars.insert(vars.end(), r->vars.begin(), r->vars.end());
  RingPtr rt = make_ring(r->field, std::move(vars));
  std::vector<std::size_t> shift(r->vars.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  Poly t = Poly::variable(rt, 0);
  Poly omt = Poly::one(rt) - t;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(t * map_to_ring(g, rt, shift));
  for (const auto& g : J.gens()) gens.push_back(omt * map_to_ring(g, rt, shift));
  std::vector<std::size_t> keep(r->vars.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i + 1;
  return rebase(eliminate(Ideal(rt, std::move(gens)), keep), r);
}

Ideal saturate(const Ideal& I, const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial("saturation by the zero polynomial");
  if (!same_ring(I.ring(), f.ring()))
    throw AmbientMismatch("saturation polynomial from a different ring");
  if (f.is_constant()) return I;
  const RingPtr& r = I.ring();
  std::string tname = fresh_var_name(r, "t");
  std::vector<std::string> vars;
  vars.push_back(tname);
  vars.insert(vars.end(), r->vars.begin(), r->vars.end());
  RingPtr rt = make_ring(r->field, std::move(vars));
  std::vector<std::size_t> shift(r->vars.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(map_to_ring(g, rt, shift));
  Poly t = Poly::variable(rt, 0);
  gens.push_back(Poly::one(rt) - t * map_to_ring(f, rt, shift));
  std::vector<std::size_t> keep(r->vars.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i + 1;
  return rebase(eliminate(Ideal(rt, std::move(gens)), keep), r);
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw AmbientMismatch("quotient of ideals in different ambients");
  if (J.gens().empty()) return Ideal::unit(I.ring());
  bool first = true;
  Ideal acc = Ideal::unit(I.ring());
  for (const auto& g : J.gens()) {
    Ideal Ig = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Poly> divided;
    for (const auto& h : Ig.gens()) divided.push_back(exact_divide(h, g));
    Ideal part(I.ring(), std::move(divided));
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

Ideal saturate_ideal(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
}

Ideal homogenize_ideal(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner();
  std::string x0 = fresh_var_name(I.ring(), "x0");
  std::vector<std::string> vars;
  vars.push_back(x0);
  vars.insert(vars.end(), I.ring()->vars.begin(), I.ring()->vars.end());
  RingPtr rh = make_ring(I.ring()->field, std::move(vars));
  std::vector<Poly> gens;
  for (const auto& g : gb.elems) gens.push_back(homogenize_poly(g, x0));
  return Ideal(rh, std::move(gens));
}

namespace {

std::vector<std::uint32_t> lt_supports(const GroebnerBasis& gb, std::size_t n) {
  if (n > 25)
    throw Error("TooManyVariables", ErrorKind::Input,
                "dimension computation limited to 25 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elems) {
    const ExponentVec lt = g.leading_term(gb.order).first;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i]) mask |= (1u << i);
    supports.push_back(mask);
  }
  return supports;
}

bool independent(const std::vector<std::uint32_t>& supports, std::uint32_t s) {
  for (std::uint32_t m : supports)
    if ((m & ~s) == 0) return false;  // lt lies purely inside s
  return true;
}

}  // namespace

int dimension(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_unit()) return -1;
  std::size_t n = I.ring()->vars.size();
  if (gb.is_zero()) return (int)n;
  auto supports = lt_supports(gb, n);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int pc = __builtin_popcount(s);
    if (pc <= best) continue;
    if (independent(supports, s)) best = pc;
  }
  return best;
}

std::vector<std::size_t> first_maximal_independent_set(const Ideal& I) {
  int d = dimension(I);
  if (d < 0) throw UnitIdeal("no independent set for the unit ideal");
  std::size_t n = I.ring()->vars.size();
  const GroebnerBasis& gb = I.groebner();
  auto supports = gb.is_zero() ? std::vector<std::uint32_t>{}
                               : lt_supports(gb, n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) != d) continue;
    if (!independent(supports, s)) continue;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) out.push_back(i);
    return out;
  }
  throw Error("Internal", ErrorKind::Input, "no independent set of full size");
}

std::int64_t degree(const Ideal& I) {
  HilbertPoly P = hilbert_polynomial(homogenize_ideal(I));
  if (P.is_zero()) return 0;
  mpq_class lead = P.leading_coefficient();
  mpz_class fact = 1;
  for (int i = 2; i <= P.degree(); ++i) fact *= i;
  mpq_class g = lead * mpq_class(fact);
  if (g.get_den() != 1)
    throw Error("Internal", ErrorKind::Input, "degree is not an integer");
  return (std::int64_t)g.get_num().get_si();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw AmbientMismatch("comparing ideals in different ambients");
  const auto& a = I.groebner().elems;
  const auto& b = J.groebner().elems;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string canonical_key(const Ideal& I) {
  std::ostringstream os;
  os << I.ring()->field->to_string() << "|";
  for (const auto& v : I.ring()->vars) os << v << ",";
  os << "|";
  for (const auto& g : I.groebner().elems) os << g.to_string() << ";";
  return os.str();
}

}  // namespace echar
