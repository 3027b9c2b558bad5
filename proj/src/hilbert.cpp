#include <algorithm>
#include <sstream>

#include "echar/groebner.hpp"

// Hilbert series numerator of a monomial ideal by pivot recursion, then the
// Hilbert polynomial from the reduced numerator.

namespace echar {

namespace {

using ZPoly = std::vector<mpz_class>;  // low degree first

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  ztrim(c);
  return c;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

ZPoly zshift(const ZPoly& a, unsigned k) {  // * t^k
  if (a.empty()) return {};
  ZPoly c(a.size() + k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i + k] = a[i];
  return c;
}

mpz_class zeval1(const ZPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a) s += c;
  return s;
}

// q / (1 - t), exact when q(1) = 0
ZPoly zdiv_one_minus_t(const ZPoly& q) {
  if (q.empty()) return {};
  ZPoly r(q.size() - 1, 0);
  mpz_class acc = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    acc += q[i];
    r[i] = acc;
  }
  ztrim(r);
  return r;
}

std::vector<ExponentVec> minimalize(std::vector<ExponentVec> gens) {
  std::vector<ExponentVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[j] == gens[i] && j > i))
        redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// numerator N(t) with HS(k[x]/M) = N(t) / (1-t)^n
ZPoly hilbert_numerator(std::vector<ExponentVec> gens, std::size_t n) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_constant()) return {};  // unit ideal
  // all generators pure powers of distinct variables?
  bool pure = true;
  for (const auto& g : gens) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++nz;
    if (nz != 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    ZPoly acc = {1};
    for (const auto& g : gens) {
      ZPoly f(g.total_degree() + 1, 0);
      f[0] = 1;
      f[g.total_degree()] = -1;
      acc = zmul(acc, f);
    }
    return acc;
  }
  // pivot on the most frequent variable among mixed generators
  std::vector<std::size_t> freq(n, 0);
  for (const auto& g : gens) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++nz;
    if (nz < 2) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++freq[i];
  }
  std::size_t pivot = std::max_element(freq.begin(), freq.end()) - freq.begin();

  // I + (x_pivot)
  std::vector<ExponentVec> plus;
  for (const auto& g : gens)
    if (g[pivot] == 0) plus.push_back(g);
  plus.push_back(ExponentVec::zeros(n).with_value(pivot, 1));
  // I : x_pivot
  std::vector<ExponentVec> colon;
  for (const auto& g : gens)
    colon.push_back(g[pivot] ? g.with_value(pivot, g[pivot] - 1) : g);

  return zadd(hilbert_numerator(std::move(plus), n),
              zshift(hilbert_numerator(std::move(colon), n), 1));
}

// binomial C(t + a, k) as a polynomial in t, rational coefficients
std::vector<mpq_class> binom_poly(long a, int k) {
  std::vector<mpq_class> acc = {mpq_class(1)};
  for (int i = 0; i < k; ++i) {
    // multiply by (t + a - i)
    std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * mpq_class(a - i);
    }
    acc = std::move(next);
  }
  mpz_class fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (auto& c : acc) c /= mpq_class(fact);
  return acc;
}

}  // namespace

mpq_class HilbertPoly::leading_coefficient() const {
  if (coeffs.empty()) return mpq_class(0);
  return coeffs.back();
}

mpq_class HilbertPoly::evaluate(const mpz_class& t) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * mpq_class(t) + coeffs[i];
  return acc;
}

std::string HilbertPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    mpq_class c = coeffs[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpq_class a = abs(c);
    if (a != 1 || i == 0) os << a;
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

HilbertPoly hilbert_polynomial(const Ideal& Ih) {
  for (const auto& g : Ih.gens())
    if (!g.is_homogeneous())
      throw NotHomogeneous("hilbert_polynomial needs a homogeneous ideal");
  const GroebnerBasis& gb = Ih.groebner();
  std::size_t n = Ih.ring()->vars.size();
  std::vector<ExponentVec> lts;
  for (const auto& g : gb.elems) lts.push_back(g.leading_term(gb.order).first);
  ZPoly N = hilbert_numerator(std::move(lts), n);

  // cancel (1-t) factors: HS = q(t) / (1-t)^e with q(1) != 0
  ZPoly q = N;
  std::size_t e = n;
  while (!q.empty() && zeval1(q) == 0) {
    q = zdiv_one_minus_t(q);
    --e;
  }
  HilbertPoly P;
  if (q.empty() || e == 0) return P;  // zero polynomial
  // P(t) = sum_j q_j * C(t - j + e - 1, e - 1)
  std::vector<mpq_class> acc;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] == 0) continue;
    auto b = binom_poly((long)e - 1 - (long)j, (int)e - 1);
    if (acc.size() < b.size()) acc.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) acc[i] += mpq_class(q[j]) * b[i];
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  P.coeffs = std::move(acc);
  return P;
}

}  // namespace echar
