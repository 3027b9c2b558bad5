#include "echar/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace echar {

// -------------------------------------------------------------- ExponentVec

ExponentVec::ExponentVec(std::vector<unsigned> e) : e_(std::move(e)) {
  for (unsigned x : e_) deg_ += x;
}

ExponentVec ExponentVec::zeros(std::size_t n) {
  return ExponentVec(std::vector<unsigned>(n, 0));
}

bool ExponentVec::divides(const ExponentVec& m) const {
  if (e_.size() != m.e_.size()) throw AmbientMismatch("exponent sizes differ");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

ExponentVec ExponentVec::plus(const ExponentVec& o) const {
  if (e_.size() != o.e_.size()) throw AmbientMismatch("exponent sizes differ");
  std::vector<unsigned> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return ExponentVec(std::move(r));
}

ExponentVec ExponentVec::minus(const ExponentVec& o) const {
  if (e_.size() != o.e_.size()) throw AmbientMismatch("exponent sizes differ");
  std::vector<unsigned> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
  return ExponentVec(std::move(r));
}

ExponentVec ExponentVec::lcm(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("exponent sizes differ");
  std::vector<unsigned> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return ExponentVec(std::move(r));
}

bool ExponentVec::coprime_with(const ExponentVec& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

ExponentVec ExponentVec::with_value(std::size_t i, unsigned v) const {
  std::vector<unsigned> r = e_;
  r[i] = v;
  return ExponentVec(std::move(r));
}

// ------------------------------------------------------------ MonomialOrder

std::string MonomialOrder::key() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block" + std::to_string(block);
  }
  return "?";
}

namespace {

// grevlex on a contiguous slice [lo, hi) of the exponent vectors:
// higher total degree wins; on ties the rightmost nonzero entry of a-b
// being negative means a > b.
Cmp grevlex_slice(const ExponentVec& a, const ExponentVec& b, std::size_t lo,
                  std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  for (std::size_t i = hi; i-- > lo;) {
    long d = (long)a[i] - (long)b[i];
    if (d != 0) return d < 0 ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

}  // namespace

Cmp compare(const MonomialOrder& order, const ExponentVec& a,
            const ExponentVec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("exponent sizes differ");
  std::size_t n = a.size();
  switch (order.kind) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::LT : Cmp::GT;
      }
      return Cmp::EQ;
    case MonomialOrder::Kind::Grevlex:
      return grevlex_slice(a, b, 0, n);
    case MonomialOrder::Kind::Block: {
      std::size_t k = std::min<std::size_t>(order.block, n);
      Cmp head = grevlex_slice(a, b, 0, k);
      if (head != Cmp::EQ) return head;
      return grevlex_slice(a, b, k, n);
    }
  }
  return Cmp::EQ;
}

// --------------------------------------------------------------------- Ring

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !seen.insert(v).second)
      throw VariableClash("duplicate or empty variable name '" + v + "'");
  }
  auto r = std::make_shared<Ring>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return true;
  return a->field->same_as(*b->field) && a->vars == b->vars;
}

std::size_t var_index(const RingPtr& r, const std::string& name) {
  for (std::size_t i = 0; i < r->vars.size(); ++i)
    if (r->vars[i] == name) return i;
  throw UnknownVariable("variable '" + name + "' not in ring");
}

// --------------------------------------------------------------------- Poly

Poly Poly::constant(const RingPtr& r, const FieldScalar& c) {
  Poly f(r);
  if (!c.is_zero()) f.terms_.emplace(ExponentVec::zeros(r->vars.size()), c);
  return f;
}

Poly Poly::one(const RingPtr& r) {
  return constant(r, FieldScalar::one(r->field));
}

Poly Poly::variable(const RingPtr& r, std::size_t idx) {
  if (idx >= r->vars.size()) throw UnknownVariable("variable index out of range");
  std::vector<unsigned> e(r->vars.size(), 0);
  e[idx] = 1;
  Poly f(r);
  f.terms_.emplace(ExponentVec(std::move(e)), FieldScalar::one(r->field));
  return f;
}

Poly Poly::monomial(const RingPtr& r, const ExponentVec& m, const FieldScalar& c) {
  if (m.size() != r->vars.size()) throw AmbientMismatch("monomial size vs ring");
  Poly f(r);
  if (!c.is_zero()) f.terms_.emplace(m, c);
  return f;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

bool Poly::uses_var(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var]) return true;
  return false;
}

void Poly::add_term(const ExponentVec& m, const FieldScalar& c) {
  if (c.is_zero()) return;
  if (m.size() != ring_->vars.size())
    throw AmbientMismatch("term size vs ring");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  FieldScalar s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

void Poly::check_compatible(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) {
    if (!ring_->field->same_as(*o.ring_->field))
      throw FieldMismatch("polynomials over different fields");
    throw AmbientMismatch("polynomials in different ambients");
  }
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_compatible(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1.plus(m2), c1 * c2);
  return r;
}

Poly Poly::scaled(const FieldScalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::mul_monomial(const ExponentVec& m, const FieldScalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1.plus(m), c1 * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = one(ring_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_compatible(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

Poly Poly::differentiate(std::size_t var) const {
  if (var >= ring_->vars.size())
    throw UnknownVariable("derivative variable out of range");
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[var];
    if (e == 0) continue;
    FieldScalar k = c * FieldScalar::from_integer(ring_->field, (long)e);
    if (k.is_zero()) continue;
    r.add_term(m.with_value(var, e - 1), k);
  }
  return r;
}

FieldScalar Poly::evaluate(const std::vector<FieldScalar>& point) const {
  if (point.size() != ring_->vars.size())
    throw AmbientMismatch("point size vs ring");
  FieldScalar acc = FieldScalar::zero(ring_->field);
  for (const auto& [m, c] : terms_) {
    FieldScalar t = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m[i]) t = t * point[i].pow(m[i]);
    acc = acc + t;
  }
  return acc;
}

Poly Poly::substitute(std::size_t var, const FieldScalar& value) const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[var];
    if (e == 0) {
      r.add_term(m, c);
    } else {
      FieldScalar k = c * value.pow(e);
      if (!k.is_zero()) r.add_term(m.with_value(var, 0), k);
    }
  }
  return r;
}

std::pair<ExponentVec, FieldScalar> Poly::leading_term(
    const MonomialOrder& o) const {
  if (terms_.empty())
    throw ZeroPolynomial("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (compare(o, it->first, best->first) == Cmp::GT) best = it;
  return {best->first, best->second};
}

FieldScalar Poly::coefficient(const ExponentVec& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return FieldScalar::zero(ring_->field);
  return it->second;
}

Poly Poly::monic(const MonomialOrder& o) const {
  if (terms_.empty()) return *this;
  FieldScalar lc = leading_term(o).second;
  if (lc.is_one()) return *this;
  return scaled(lc.inv());
}

FieldScalar Poly::content_integer() const {
  if (ring_->field->kind() != FieldKind::Rationals)
    throw FieldMismatch("integer content is a Q notion");
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    const mpq_class& q = c.as_rational();
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  if (g == 0) return FieldScalar::rational(mpq_class(0));
  mpq_class q(g, l);
  q.canonicalize();
  return FieldScalar::rational(q);
}

std::string Poly::to_string(const MonomialOrder& o) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
    return compare(o, a->first, b->first) == Cmp::GT;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : sorted) {
    const ExponentVec& m = t->first;
    std::string cs = t->second.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) cs = cs.substr(1);
    bool has_vars = !m.is_constant();
    bool coeff_is_one = (cs == "1");
    bool needs_parens = cs.find('+') != std::string::npos ||
                        cs.find('-') != std::string::npos;
    if (!has_vars) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      bool wrote_coeff = false;
      if (!coeff_is_one) {
        os << (needs_parens ? "(" + cs + ")" : cs);
        wrote_coeff = true;
      }
      bool first_var = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (wrote_coeff || !first_var) os << "*";
        os << ring_->vars[i];
        if (m[i] > 1) os << "^" << m[i];
        first_var = false;
        wrote_coeff = true;
      }
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------- ring-changing helpers

std::string fresh_var_name(const RingPtr& r, const std::string& base) {
  std::string name = base;
  auto used = [&](const std::string& n) {
    return std::find(r->vars.begin(), r->vars.end(), n) != r->vars.end();
  };
  while (used(name)) name += "_";
  return name;
}

Poly homogenize_poly(const Poly& f, const std::string& x0) {
  const RingPtr& r = f.ring();
  for (const auto& v : r->vars)
    if (v == x0) throw VariableClash("homogenization variable already used");
  std::vector<std::string> vars;
  vars.reserve(r->vars.size() + 1);
  vars.push_back(x0);
  vars.insert(vars.end(), r->vars.begin(), r->vars.end());
  RingPtr target = make_ring(r->field, std::move(vars));
  unsigned d = f.total_degree();
  Poly out(target);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(m.size() + 1);
    e[0] = d - m.total_degree();
    for (std::size_t i = 0; i < m.size(); ++i) e[i + 1] = m[i];
    out.add_term(ExponentVec(std::move(e)), c);
  }
  return out;
}

Poly substitute_and_drop(const Poly& f, std::size_t var, const FieldScalar& value) {
  const RingPtr& r = f.ring();
  if (var >= r->vars.size()) throw UnknownVariable("substitution variable");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < r->vars.size(); ++i)
    if (i != var) vars.push_back(r->vars[i]);
  RingPtr target = make_ring(r->field, std::move(vars));
  Poly out(target);
  for (const auto& [m, c] : f.terms()) {
    FieldScalar k = m[var] ? c * value.pow(m[var]) : c;
    if (k.is_zero()) continue;
    std::vector<unsigned> e;
    e.reserve(m.size() - 1);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var) e.push_back(m[i]);
    out.add_term(ExponentVec(std::move(e)), k);
  }
  return out;
}

Poly dehomogenize(const Poly& f, const std::string& x0, int value) {
  std::size_t idx = var_index(f.ring(), x0);
  return substitute_and_drop(f, idx,
                             FieldScalar::from_integer(f.ring()->field, value));
}

Poly map_to_ring(const Poly& f, const RingPtr& target,
                 const std::vector<std::size_t>& positions) {
  if (positions.size() != f.ring()->vars.size())
    throw AmbientMismatch("position map size");
  Poly out(target);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(target->vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (positions[i] >= e.size())
        throw AmbientMismatch("position map out of range");
      e[positions[i]] = m[i];
    }
    out.add_term(ExponentVec(std::move(e)), c);
  }
  return out;
}

// ------------------------------------------------------------ linear algebra

Matrix identity_matrix(const FieldPtr& f, std::size_t n) {
  Matrix A(n, std::vector<FieldScalar>(n, FieldScalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = FieldScalar::one(f);
  return A;
}

FieldScalar det(const Matrix& A) {
  std::size_t n = A.size();
  if (n == 0) throw SingularMatrix("empty matrix");
  FieldPtr f = A[0][0].field();
  Matrix M = A;
  FieldScalar d = FieldScalar::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) return FieldScalar::zero(f);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      d = -d;
    }
    d = d * M[col][col];
    FieldScalar inv = M[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (M[r][col].is_zero()) continue;
      FieldScalar factor = M[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        M[r][c] = M[r][c] - factor * M[col][c];
    }
  }
  return d;
}

Matrix matrix_inverse(const Matrix& A) {
  std::size_t n = A.size();
  if (n == 0) throw SingularMatrix("empty matrix");
  FieldPtr f = A[0][0].field();
  Matrix M = A;
  Matrix I = identity_matrix(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    std::swap(M[piv], M[col]);
    std::swap(I[piv], I[col]);
    FieldScalar inv = M[col][col].inv();
    for (std::size_t c = 0; c < n; ++c) {
      M[col][c] = M[col][c] * inv;
      I[col][c] = I[col][c] * inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      FieldScalar factor = M[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        M[r][c] = M[r][c] - factor * M[col][c];
        I[r][c] = I[r][c] - factor * I[col][c];
      }
    }
  }
  return I;
}

Matrix matrix_mul(const Matrix& A, const Matrix& B) {
  std::size_t n = A.size(), m = B[0].size(), k = B.size();
  FieldPtr f = A[0][0].field();
  Matrix C(n, std::vector<FieldScalar>(m, FieldScalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      FieldScalar s = FieldScalar::zero(f);
      for (std::size_t t = 0; t < k; ++t) s = s + A[i][t] * B[t][j];
      C[i][j] = s;
    }
  return C;
}

Poly apply_linear(const Poly& f, const Matrix& A) {
  const RingPtr& r = f.ring();
  std::size_t n = r->vars.size();
  if (A.size() != n) throw AmbientMismatch("matrix size vs ring");
  if (det(A).is_zero()) throw SingularMatrix("coordinate change is singular");
  // linear form L_i = sum_j A[i][j] x_j, then x^e -> prod L_i^{e_i}
  std::vector<Poly> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly L(r);
    for (std::size_t j = 0; j < n; ++j) {
      if (A[i][j].is_zero()) continue;
      std::vector<unsigned> e(n, 0);
      e[j] = 1;
      L.add_term(ExponentVec(std::move(e)), A[i][j]);
    }
    forms.push_back(L);
  }
  // cache powers of each form up to the max exponent used
  std::vector<std::vector<Poly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned maxe = f.degree_in(i);
    powers[i].push_back(Poly::one(r));
    for (unsigned e = 1; e <= maxe; ++e)
      powers[i].push_back(powers[i].back() * forms[i]);
  }
  Poly out(r);
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(r, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) t = t * powers[i][m[i]];
    out = out + t;
  }
  return out;
}

}  // namespace echar
