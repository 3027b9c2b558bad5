#include "echar/arrangements.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace echar {

namespace {

using Row = std::vector<FieldScalar>;  // n coefficients then the constant

// form a1 x1 + ... + an xn + c  ->  row [a1 .. an | -c]
Row form_to_row(const Poly& f) {
  const RingPtr& r = f.ring();
  std::size_t n = r->vars.size();
  Row row(n + 1, FieldScalar::zero(r->field));
  for (const auto& [m, c] : f.terms()) {
    if (m.total_degree() == 0) {
      row[n] = row[n] - c;
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i]) row[i] = c;
    }
  }
  return row;
}

struct LinearSystem {
  std::vector<Row> rows;  // reduced row echelon form
  bool inconsistent = false;

  std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }

  // reduce a row against the current rref; returns the residual
  Row reduce(Row r) const {
    for (const auto& p : rows) {
      std::size_t piv = 0;
      while (piv + 1 < p.size() && p[piv].is_zero()) ++piv;
      if (!r[piv].is_zero()) {
        FieldScalar f = r[piv];
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = r[c] - f * p[c];
      }
    }
    return r;
  }

  bool row_is_zero(const Row& r, bool* contradiction) const {
    std::size_t n = r.size() - 1;
    for (std::size_t c = 0; c < n; ++c)
      if (!r[c].is_zero()) {
        *contradiction = false;
        return false;
      }
    *contradiction = !r[n].is_zero();
    return !*contradiction;
  }

  // insert a new equation, keeping rref; returns false if inconsistent
  bool add(Row r) {
    r = reduce(std::move(r));
    bool contradiction = false;
    if (row_is_zero(r, &contradiction)) return true;
    if (contradiction) {
      inconsistent = true;
      return false;
    }
    std::size_t piv = 0;
    while (r[piv].is_zero()) ++piv;
    FieldScalar inv = r[piv].inv();
    for (auto& c : r) c = c * inv;
    // eliminate the new pivot from existing rows
    for (auto& p : rows) {
      if (p[piv].is_zero()) continue;
      FieldScalar f = p[piv];
      for (std::size_t c = 0; c < p.size(); ++c) p[c] = p[c] - f * r[c];
    }
    rows.push_back(std::move(r));
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      std::size_t pa = 0, pb = 0;
      while (pa + 1 < a.size() && a[pa].is_zero()) ++pa;
      while (pb + 1 < b.size() && b[pb].is_zero()) ++pb;
      return pa < pb;
    });
    return true;
  }

  std::string key() const {
    std::ostringstream os;
    for (const auto& r : rows) {
      for (const auto& c : r) os << c.to_string() << ",";
      os << ";";
    }
    return os.str();
  }

  // does this system's solution set contain the other's (other implies this)?
  bool contains_solutions_of(const LinearSystem& other) const {
    for (const auto& r : rows) {
      Row res = other.reduce(r);
      bool contradiction = false;
      if (!other.row_is_zero(res, &contradiction)) return false;
      if (contradiction) return false;
    }
    return true;
  }
};

}  // namespace

Arrangement Arrangement::from_forms(RingPtr ring, std::vector<Poly> forms) {
  if (ring->field->kind() != FieldKind::Rationals)
    throw FieldMismatch("arrangements are defined over Q");
  for (const auto& f : forms) {
    if (f.is_zero() || f.total_degree() != 1)
      throw Error("NotLinear", ErrorKind::Input,
                  "arrangement forms must have total degree exactly 1");
  }
  // reject repeated hyperplanes (proportional forms)
  std::vector<Row> rows;
  for (const auto& f : forms) rows.push_back(form_to_row(f));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      std::size_t p = 0;
      while (p < rows[i].size() && rows[i][p].is_zero()) ++p;
      if (p == rows[i].size() || rows[j][p].is_zero()) continue;
      FieldScalar ratio = rows[j][p] / rows[i][p];
      bool proportional = true;
      for (std::size_t c = 0; c < rows[i].size() && proportional; ++c)
        if (rows[j][c] != rows[i][c] * ratio) proportional = false;
      if (proportional)
        throw Error("RepeatedHyperplane", ErrorKind::Input,
                    "two forms define the same hyperplane");
    }
  Arrangement A;
  A.ring = std::move(ring);
  A.forms = std::move(forms);
  return A;
}

IntersectionLattice intersection_lattice(const Arrangement& A) {
  std::size_t n = A.ambient_dim();
  std::vector<Row> hrows;
  for (const auto& f : A.forms) hrows.push_back(form_to_row(f));

  std::map<std::string, LinearSystem> seen;
  LinearSystem ambient;  // no constraints
  seen.emplace(ambient.key(), ambient);
  std::vector<LinearSystem> frontier = {ambient};
  while (!frontier.empty()) {
    std::vector<LinearSystem> next;
    for (const auto& sys : frontier) {
      for (const auto& h : hrows) {
        LinearSystem ext = sys;
        if (!ext.add(h)) continue;  // empty intersection
        auto [it, fresh] = seen.emplace(ext.key(), ext);
        if (fresh) next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }

  IntersectionLattice L;
  for (auto& [key, sys] : seen) {
    Flat f;
    f.rref = sys.rows;
    f.dim = (int)n - (int)sys.rows.size();
    f.key = key;
    for (std::size_t i = 0; i < hrows.size(); ++i) {
      Row res = sys.reduce(hrows[i]);
      bool contradiction = false;
      if (sys.row_is_zero(res, &contradiction)) f.hyperplanes.push_back(i);
    }
    L.flats.push_back(std::move(f));
  }
  // ambient first, then decreasing dimension, canonical key as tie-break
  std::sort(L.flats.begin(), L.flats.end(), [](const Flat& a, const Flat& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.key < b.key;
  });
  std::size_t m = L.flats.size();
  L.contains.assign(m, std::vector<bool>(m, false));
  std::vector<LinearSystem> systems(m);
  for (std::size_t i = 0; i < m; ++i) systems[i].rows = L.flats[i].rref;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      L.contains[i][j] = systems[i].contains_solutions_of(systems[j]);
  return L;
}

std::vector<std::int64_t> mobius_values(const IntersectionLattice& L) {
  std::size_t m = L.flats.size();
  std::vector<std::int64_t> mu(m, 0);
  // flats are sorted by decreasing dimension, so predecessors come first
  for (std::size_t j = 0; j < m; ++j) {
    if (j == 0) {
      mu[0] = 1;  // the ambient space
      continue;
    }
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j && L.contains[i][j]) s += mu[i];
    mu[j] = -s;
  }
  return mu;
}

MotivePoly characteristic_polynomial(const Arrangement& A) {
  IntersectionLattice L = intersection_lattice(A);
  std::vector<std::int64_t> mu = mobius_values(L);
  MotivePoly chi;
  for (std::size_t i = 0; i < L.flats.size(); ++i)
    chi = chi + MotivePoly::power((unsigned)L.flats[i].dim, mu[i]);
  return chi;
}

std::pair<MotivePoly, MotivePoly> deletion_restriction_check(
    const Arrangement& A, std::size_t H) {
  if (H >= A.forms.size())
    throw Error("BadHyperplaneIndex", ErrorKind::Input, "index out of range");
  std::size_t n = A.ambient_dim();
  MotivePoly lhs = characteristic_polynomial(A);

  std::vector<Poly> deleted;
  for (std::size_t i = 0; i < A.forms.size(); ++i)
    if (i != H) deleted.push_back(A.forms[i]);
  MotivePoly chi_deleted =
      deleted.empty() ? MotivePoly::power((unsigned)n)
                      : characteristic_polynomial(
                            Arrangement::from_forms(A.ring, deleted));

  // restriction: eliminate the pivot variable of H inside H
  Row h = form_to_row(A.forms[H]);
  std::size_t piv = 0;
  while (h[piv].is_zero()) ++piv;
  FieldScalar inv = h[piv].inv();
  // x_piv = inv * (h[n] - sum_{j != piv} h[j] x_j)
  std::vector<std::string> subvars;
  for (std::size_t i = 0; i < n; ++i)
    if (i != piv) subvars.push_back(A.ring->vars[i]);
  RingPtr subring = make_ring(A.ring->field, subvars);
  auto subvar_index = [&](std::size_t i) {
    return i < piv ? i : i - 1;
  };
  std::vector<Poly> restricted;
  for (std::size_t i = 0; i < A.forms.size(); ++i) {
    if (i == H) continue;
    Row r = form_to_row(A.forms[i]);
    // substitute the pivot
    Poly g(subring);
    FieldScalar cpiv = r[piv] * inv;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv) continue;
      FieldScalar c = r[j] - cpiv * h[j];
      if (c.is_zero()) continue;
      g.add_term(ExponentVec::zeros(n - 1).with_value(subvar_index(j), 1), c);
    }
    FieldScalar c0 = (cpiv * h[n]) - r[n];
    g.add_term(ExponentVec::zeros(n - 1), c0);
    if (g.is_zero() || g.total_degree() == 0) continue;  // empty or all of H
    restricted.push_back(g);
  }
  // deduplicate proportional restricted forms
  std::vector<Poly> distinct;
  for (const auto& g : restricted) {
    bool dup = false;
    for (const auto& d : distinct) {
      Row rg = form_to_row(g), rd = form_to_row(d);
      std::size_t p = 0;
      while (p < rg.size() && rg[p].is_zero()) ++p;
      if (p == rg.size() || rd[p].is_zero()) continue;
      FieldScalar ratio = rd[p] / rg[p];
      bool proportional = true;
      for (std::size_t c = 0; c < rg.size() && proportional; ++c)
        if (rd[c] != rg[c] * ratio) proportional = false;
      if (proportional) dup = true;
    }
    if (!dup) distinct.push_back(g);
  }
  MotivePoly chi_restricted =
      distinct.empty() ? MotivePoly::power((unsigned)n - 1)
                       : characteristic_polynomial(
                             Arrangement::from_forms(subring, distinct));
  return {lhs, chi_deleted - chi_restricted};
}

std::pair<MotivePoly, MotivePoly> arrangement_motive_identity(
    const Arrangement& A, const ProjectionConfig& cfg) {
  Poly prod = Poly::one(A.ring);
  for (const auto& f : A.forms) prod = prod * f;
  MotivePoly from_engine = Engine(cfg).motive(Ideal(A.ring, {prod}));
  MotivePoly from_lattice = MotivePoly::power((unsigned)A.ambient_dim()) -
                            characteristic_polynomial(A);
  return {from_engine, from_lattice};
}

}  // namespace echar
