#include "echar/engine.hpp"

#include <cinttypes>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>

#ifdef ECHAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace echar {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t h) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return std::string(buf);
}

// run the closures, possibly as OpenMP tasks; exceptions are rethrown in
// call order so failures are deterministic
void run_all(std::vector<std::function<void()>> fns, bool parallel) {
#ifdef ECHAR_HAVE_OPENMP
  if (parallel && fns.size() > 1 && omp_in_parallel()) {
    std::vector<std::exception_ptr> errs(fns.size());
#pragma omp taskgroup
    {
      for (std::size_t i = 0; i < fns.size(); ++i) {
#pragma omp task firstprivate(i) shared(errs, fns)
        {
          try {
            fns[i]();
          } catch (...) {
            errs[i] = std::current_exception();
          }
        }
      }
    }
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    return;
  }
#endif
  (void)parallel;
  for (auto& f : fns) f();
}

template <typename T, typename Fn>
T with_parallel_region(bool parallel, Fn&& fn) {
#ifdef ECHAR_HAVE_OPENMP
  if (parallel && !omp_in_parallel()) {
    T result{};
    std::exception_ptr err;
#pragma omp parallel
    {
#pragma omp single
      {
        try {
          result = fn();
        } catch (...) {
          err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return result;
  }
#endif
  (void)parallel;
  return fn();
}

struct TraceNode;
using TracePtr = std::shared_ptr<const TraceNode>;
struct TraceNode {
  std::string fp;
  const char* step;
  std::vector<TracePtr> kids;
};

TracePtr trace_node(const std::string& fp, const char* step,
                    std::vector<TracePtr> kids = {}) {
  auto n = std::make_shared<TraceNode>();
  n->fp = fp;
  n->step = step;
  n->kids = std::move(kids);
  return n;
}

bool gb_homogeneous(const Ideal& I) {
  for (const auto& g : I.groebner().elems)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::int64_t univariate_distinct_roots(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_zero()) return 1;  // the affine line
  Poly s = squarefree_part(gb.elems[0], 0);
  return s.total_degree();
}

Poly poly_det(const std::vector<std::vector<Poly>>& M,
              const std::vector<std::size_t>& rows,
              std::vector<std::size_t> cols, const RingPtr& r) {
  std::size_t m = rows.size();
  if (m == 1) return M[rows[0]][cols[0]];
  Poly acc(r);
  for (std::size_t i = 0; i < m; ++i) {
    const Poly& pivot = M[rows[i]][cols[0]];
    if (pivot.is_zero()) continue;
    std::vector<std::size_t> subrows;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) subrows.push_back(rows[j]);
    std::vector<std::size_t> subcols(cols.begin() + 1, cols.end());
    Poly minor = poly_det(M, subrows, subcols, r);
    Poly term = pivot * minor;
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Ideal lift_into(const Ideal& K, const RingPtr& full) {
  std::vector<std::size_t> pos(K.ring()->vars.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    pos[i] = var_index(full, K.ring()->vars[i]);
  std::vector<Poly> gens;
  for (const auto& g : K.gens()) gens.push_back(map_to_ring(g, full, pos));
  return Ideal(full, std::move(gens));
}

}  // namespace

std::string ideal_fingerprint(const Ideal& I) {
  return hex16(fnv64(canonical_key(I)));
}

bool is_general_position(const Ideal& I) {
  if (I.is_unit()) throw UnitIdeal("general position of the unit ideal");
  int d = dimension(I);
  std::size_t n = I.ring()->vars.size();
  Ideal Ih = homogenize_ideal(I);
  const RingPtr& rh = Ih.ring();
  // center of the projection: x0 = x1 = ... = xd = 0
  std::vector<Poly> cut;
  for (int j = 0; j <= d; ++j) cut.push_back(Poly::variable(rh, (std::size_t)j));
  Ideal A = ideal_sum(Ih, cut);
  bool by_dimension = dimension(A) <= 0;
  bool by_membership = true;
  for (std::size_t j = (std::size_t)d + 1; j <= n && by_membership; ++j)
    if (!radical_membership(Poly::variable(rh, j), A)) by_membership = false;
  if (by_dimension != by_membership)
    throw Error("Internal", ErrorKind::Engine,
                "general-position tests disagree");
  return by_dimension;
}

std::pair<Ideal, Matrix> randomize_coordinates(const Ideal& I,
                                               const ProjectionConfig& cfg) {
  const RingPtr& r = I.ring();
  const FieldPtr& f = r->field;
  std::size_t n = r->vars.size();
  std::uint64_t base = splitmix(cfg.seed ^ fnv64(canonical_key(I)));
  const auto& gens = I.groebner().elems;
  for (unsigned attempt = 0; attempt < cfg.retries; ++attempt) {
    std::mt19937_64 rng(splitmix(base + attempt));
    auto draw_entry = [&] {
      return (long)(rng() % (2 * (std::uint64_t)cfg.bound + 1)) -
             (long)cfg.bound;
    };
    Matrix A;
    // early attempts use unipotent shears (always invertible, and they keep
    // the transformed generators sparse); later ones fall back to dense draws
    bool shear = attempt < cfg.retries / 2 || cfg.retries < 2;
    for (int draw = 0; draw < 10000; ++draw) {
      Matrix cand = identity_matrix(f, n);
      if (shear) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            cand[i][j] = FieldScalar::from_integer(f, draw_entry());
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            cand[i][j] = FieldScalar::from_integer(f, draw_entry());
      }
      if (!det(cand).is_zero()) {
        A = std::move(cand);
        break;
      }
    }
    if (A.empty()) continue;
    std::vector<Poly> tg;
    for (const auto& g : gens) tg.push_back(apply_linear(g, A));
    Ideal T(r, std::move(tg));
    if (is_general_position(T)) return {T, A};
  }
  throw RetriesExhausted("no general-position coordinates after " +
                         std::to_string(cfg.retries) + " attempts");
}

std::pair<Ideal, Ideal> branch_data(const Ideal& I, int d) {
  const RingPtr& r = I.ring();
  std::size_t n = r->vars.size();
  if (d < 1 || (std::size_t)d >= n)
    throw Error("BadBranchDimension", ErrorKind::Input,
                "branch_data needs 1 <= d < n");
  const auto& gens = I.groebner().elems;
  std::size_t s = gens.size();
  std::size_t m = n - (std::size_t)d;

  std::vector<std::vector<Poly>> M(s, std::vector<Poly>(m, Poly::zero(r)));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < m; ++j)
      M[i][j] = gens[i].differentiate((std::size_t)d + j);

  std::vector<Poly> minors;
  if (s >= m) {
    std::vector<std::size_t> cols(m);
    for (std::size_t j = 0; j < m; ++j) cols[j] = j;
    std::vector<std::size_t> rows(m);
    std::function<void(std::size_t, std::size_t)> combos = [&](std::size_t start,
                                                               std::size_t k) {
      if (k == m) {
        minors.push_back(poly_det(M, rows, cols, r));
        return;
      }
      for (std::size_t i = start; i + (m - k) <= s; ++i) {
        rows[k] = i;
        combos(i + 1, k + 1);
      }
    };
    combos(0, 0);
  }
  Ideal IJ = ideal_sum(I, minors);
  std::vector<std::size_t> keep((std::size_t)d);
  for (int j = 0; j < d; ++j) keep[(std::size_t)j] = (std::size_t)j;
  Ideal K = eliminate(IJ, keep);
  if (K.is_zero_ideal())
    throw DegenerateBranchLocus(
        "discriminant image is dense; projection does not branch properly");
  return {Ideal(r, minors), K};
}

// ------------------------------------------------------------------- Engine

struct Engine::Impl {
  ProjectionConfig cfg;
  std::mutex mu;
  std::unordered_map<std::string, std::pair<MotivePoly, TracePtr>> motive_memo;
  std::unordered_map<std::string, std::int64_t> euler_memo;
  std::unordered_map<std::string, Ideal> radical_memo;

  Ideal radical_cached(const Ideal& I) {
    std::string key = canonical_key(I);
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = radical_memo.find(key);
      if (it != radical_memo.end()) return it->second;
    }
    Ideal R = radical(I);
    std::string rkey = canonical_key(R);
    std::lock_guard<std::mutex> lock(mu);
    radical_memo.emplace(key, R);
    radical_memo.emplace(rkey, R);  // radicals are fixed points
    return R;
  }

  std::int64_t euler_of(const Ideal& I) {
    std::string key = canonical_key(I);
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = euler_memo.find(key);
      if (it != euler_memo.end()) return it->second;
    }
    std::int64_t v = euler_impl(I);
    std::lock_guard<std::mutex> lock(mu);
    euler_memo.emplace(key, v);
    return v;
  }

  std::int64_t euler_impl(const Ideal& I) {
    std::size_t n = I.ring()->vars.size();
    if (I.is_unit()) return 0;
    if (n == 0) return 1;
    if (n == 1) return univariate_distinct_roots(I);
    Ideal R = radical_cached(I);
    if (gb_homogeneous(R)) return 1;  // cone over the origin is contractible
    ComponentList comps = components_of_radical(R);
    if (comps.components.size() > 1) {
      Ideal I1 = comps.components[0];
      Ideal I2 = comps.components[1];
      for (std::size_t i = 2; i < comps.components.size(); ++i)
        I2 = intersect(I2, comps.components[i]);
      Ideal I12 = ideal_sum(I1, I2);
      std::int64_t a = 0, b = 0, c = 0;
      run_all({[&] { a = euler_of(I1); }, [&] { b = euler_of(I2); },
               [&] { c = euler_of(I12); }},
              cfg.parallel);
      return a + b - c;
    }
    Ideal R1 = comps.components[0];
    int d = dimension(R1);
    std::int64_t g = degree(R1);
    if (d == 0) return count_points_zero_dim(R1);
    if (g == 1) return 1;  // a linear space
    if (!is_general_position(R1)) {
      auto [T, A] = randomize_coordinates(R1, cfg);
      (void)A;
      return euler_of(T);
    }
    auto [J, K] = branch_data(R1, d);
    (void)J;
    Ideal IK = ideal_sum(R1, lift_into(K, R1.ring()).gens());
    std::int64_t a = 0, b = 0;
    run_all({[&] { a = euler_of(K); }, [&] { b = euler_of(IK); }},
            cfg.parallel);
    return g - g * a + b;
  }

  std::pair<MotivePoly, TracePtr> motive_of(const Ideal& I) {
    std::string key = canonical_key(I);
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = motive_memo.find(key);
      if (it != motive_memo.end()) return it->second;
    }
    auto v = motive_impl(I, key);
    std::lock_guard<std::mutex> lock(mu);
    motive_memo.emplace(key, v);
    return v;
  }

  std::pair<MotivePoly, TracePtr> motive_impl(const Ideal& I,
                                              const std::string& key) {
    const std::string fp = hex16(fnv64(key));
    std::size_t n = I.ring()->vars.size();
    if (I.is_unit()) return {MotivePoly(), trace_node(fp, "unit")};
    if (I.is_zero_ideal())
      return {MotivePoly::power((unsigned)n), trace_node(fp, "zero")};
    if (n == 1)
      return {MotivePoly::constant(univariate_distinct_roots(I)),
              trace_node(fp, "univariate")};
    Ideal R = radical_cached(I);
    if (gb_homogeneous(R)) {
      // hyperplane split along the last variable: F = (L-1) F(I_1) + F(I_0)
      std::size_t last = n - 1;
      std::vector<Poly> g1, g0;
      const FieldPtr& f = I.ring()->field;
      for (const auto& g : R.groebner().elems) {
        g1.push_back(substitute_and_drop(g, last, FieldScalar::one(f)));
        g0.push_back(substitute_and_drop(g, last, FieldScalar::zero(f)));
      }
      std::vector<std::string> vars(I.ring()->vars.begin(),
                                    I.ring()->vars.end() - 1);
      RingPtr sub = make_ring(f, vars);
      Ideal I1(sub, g1), I0(sub, g0);
      MotivePoly a, b;
      TracePtr ta, tb;
      run_all({[&] { std::tie(a, ta) = motive_of(I1); },
               [&] { std::tie(b, tb) = motive_of(I0); }},
              cfg.parallel);
      MotivePoly Lm1(std::vector<std::int64_t>{-1, 1});
      return {Lm1 * a + b, trace_node(fp, "split", {ta, tb})};
    }
    ComponentList comps = components_of_radical(R);
    if (comps.components.size() > 1) {
      Ideal I1 = comps.components[0];
      Ideal I2 = comps.components[1];
      for (std::size_t i = 2; i < comps.components.size(); ++i)
        I2 = intersect(I2, comps.components[i]);
      Ideal I12 = ideal_sum(I1, I2);
      MotivePoly a, b, c;
      TracePtr ta, tb, tc;
      run_all({[&] { std::tie(a, ta) = motive_of(I1); },
               [&] { std::tie(b, tb) = motive_of(I2); },
               [&] { std::tie(c, tc) = motive_of(I12); }},
              cfg.parallel);
      return {a + b - c, trace_node(fp, "decompose", {ta, tb, tc})};
    }
    Ideal R1 = comps.components[0];
    int d = dimension(R1);
    std::int64_t g = degree(R1);
    if (d == 0)
      return {MotivePoly::constant(count_points_zero_dim(R1)),
              trace_node(fp, "points")};
    if (g == 1)
      return {MotivePoly::power((unsigned)d), trace_node(fp, "linear")};
    if (!is_general_position(R1)) {
      auto [T, A] = randomize_coordinates(R1, cfg);
      (void)A;
      auto [v, t] = motive_of(T);
      return {v, trace_node(fp, "randomize", {t})};
    }
    auto [J, K] = branch_data(R1, d);
    (void)J;
    Ideal IK = ideal_sum(R1, lift_into(K, R1.ring()).gens());
    MotivePoly a, b;
    TracePtr ta, tb;
    run_all({[&] { std::tie(a, ta) = motive_of(K); },
             [&] { std::tie(b, tb) = motive_of(IK); }},
            cfg.parallel);
    return {MotivePoly::power((unsigned)d, g) - a.scaled(g) + b,
            trace_node(fp, "branch", {ta, tb})};
  }

  std::int64_t projective_euler_rec(const Ideal& Ih) {
    std::size_t n1 = Ih.ring()->vars.size();
    if (n1 == 0)
      throw AmbientMismatch("projective recursion needs >= 1 variable");
    if (n1 == 1) return Ih.is_zero_ideal() ? 1 : 0;
    const FieldPtr& f = Ih.ring()->field;
    std::vector<Poly> ga, gi;
    for (const auto& g : Ih.gens()) {
      ga.push_back(substitute_and_drop(g, 0, FieldScalar::one(f)));
      gi.push_back(substitute_and_drop(g, 0, FieldScalar::zero(f)));
    }
    std::vector<std::string> vars(Ih.ring()->vars.begin() + 1,
                                  Ih.ring()->vars.end());
    RingPtr sub = make_ring(f, vars);
    Ideal affine(sub, ga), infinity(sub, gi);
    std::int64_t val = euler_of(affine) + projective_euler_rec(infinity);
    if (n1 == 2 && !Ih.is_zero_ideal()) {
      // point count in the projective line equals deg of the radical
      std::int64_t alt = degree(radical_cached(Ih));
      if (alt != val)
        throw Error("Internal", ErrorKind::Engine,
                    "CP^1 base cases disagree");
    }
    return val;
  }
};

Engine::Engine(ProjectionConfig cfg) : impl_(std::make_shared<Impl>()) {
  impl_->cfg = cfg;
}

const ProjectionConfig& Engine::config() const { return impl_->cfg; }

std::int64_t Engine::euler(const Ideal& I) {
  return with_parallel_region<std::int64_t>(
      impl_->cfg.parallel, [&] { return impl_->euler_of(I); });
}

MotivePoly Engine::motive(const Ideal& I) {
  return with_parallel_region<MotivePoly>(
      impl_->cfg.parallel, [&] { return impl_->motive_of(I).first; });
}

std::int64_t Engine::projective_euler(const Ideal& Ih) {
  for (const auto& g : Ih.gens())
    if (!g.is_homogeneous())
      throw NotHomogeneous("projective_euler needs homogeneous generators");
  return with_parallel_region<std::int64_t>(
      impl_->cfg.parallel, [&] { return impl_->projective_euler_rec(Ih); });
}

namespace {

MotivePoly projective_motive_rec(Engine& engine, const Ideal& Ih) {
  std::size_t n1 = Ih.ring()->vars.size();
  if (n1 == 0)
    throw AmbientMismatch("projective recursion needs >= 1 variable");
  if (n1 == 1)
    return MotivePoly::constant(Ih.is_zero_ideal() ? 1 : 0);
  const FieldPtr& f = Ih.ring()->field;
  std::vector<Poly> ga, gi;
  for (const auto& g : Ih.gens()) {
    ga.push_back(substitute_and_drop(g, 0, FieldScalar::one(f)));
    gi.push_back(substitute_and_drop(g, 0, FieldScalar::zero(f)));
  }
  std::vector<std::string> vars(Ih.ring()->vars.begin() + 1,
                                Ih.ring()->vars.end());
  RingPtr sub = make_ring(f, vars);
  Ideal affine(sub, ga), infinity(sub, gi);
  return engine.motive(affine) + projective_motive_rec(engine, infinity);
}

}  // namespace

MotivePoly Engine::projective_motive(const Ideal& Ih) {
  for (const auto& g : Ih.gens())
    if (!g.is_homogeneous())
      throw NotHomogeneous("projective_motive needs homogeneous generators");
  if (Ih.is_unit()) throw UnitIdeal("projective_motive of the unit ideal");
  const ProjectionConfig& cfg = impl_->cfg;
  for (unsigned attempt = 0; attempt < cfg.retries; ++attempt) {
    Engine sub = *this;
    if (attempt > 0) {
      ProjectionConfig c2 = cfg;
      c2.seed = splitmix(cfg.seed + attempt);
      sub = Engine(c2);
    }
    MotivePoly fproj = with_parallel_region<MotivePoly>(
        cfg.parallel, [&] { return projective_motive_rec(sub, Ih); });
    MotivePoly fcone = sub.motive(Ih);
    // cone identity: F(cone) - 1 = (L-1) F(V')
    std::int64_t rem = 0;
    MotivePoly q = (fcone - MotivePoly::constant(1)).divide_by_L_minus_one(&rem);
    if (rem == 0 && q == fproj) return fproj;
  }
  throw ConeIdentityViolation(
      "cone identity failed for every sampled projection");
}

VarietyReport Engine::report(const Ideal& I) {
  VarietyReport rep;
  rep.seed = impl_->cfg.seed;
  auto [F, trace] = with_parallel_region<std::pair<MotivePoly, TracePtr>>(
      impl_->cfg.parallel, [&] { return impl_->motive_of(I); });
  rep.motive = F;
  rep.euler = with_parallel_region<std::int64_t>(
      impl_->cfg.parallel, [&] { return impl_->euler_of(I); });
  Ideal R = impl_->radical_cached(I);
  rep.dimension = dimension(R);
  rep.degree = degree(R);
  // flatten the trace, expanding each ideal only once
  std::set<std::string> seen;
  std::function<void(const TracePtr&)> walk = [&](const TracePtr& t) {
    if (!t) return;
    rep.trace.emplace_back(t->fp, t->step);
    if (!seen.insert(t->fp).second) return;
    for (const auto& k : t->kids) walk(k);
  };
  walk(trace);
  return rep;
}

std::int64_t euler_characteristic(const Ideal& I, const ProjectionConfig& cfg) {
  return Engine(cfg).euler(I);
}
MotivePoly motive(const Ideal& I, const ProjectionConfig& cfg) {
  return Engine(cfg).motive(I);
}
std::int64_t projective_euler(const Ideal& Ih, const ProjectionConfig& cfg) {
  return Engine(cfg).projective_euler(Ih);
}
MotivePoly projective_motive(const Ideal& Ih, const ProjectionConfig& cfg) {
  return Engine(cfg).projective_motive(Ih);
}

}  // namespace echar
