#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "echar/decompose.hpp"
#include "echar/motive_poly.hpp"

namespace echar {

/// Knobs for the seeded generic coordinate changes.
struct ProjectionConfig {
  std::uint64_t seed = 0;
  unsigned bound = 10;    // matrix entries drawn from [-bound, bound]
  unsigned retries = 20;  // general-position attempts before giving up
  bool parallel = true;   // task-parallel recursion when built with OpenMP
};

struct VarietyReport {
  int dimension = -1;
  std::int64_t degree = 0;
  std::int64_t euler = 0;
  MotivePoly motive;
  std::vector<std::pair<std::string, std::string>> trace;  // (fingerprint, step)
  std::uint64_t seed = 0;
};

/// True iff the projective closure of V(I) misses the center of the
/// projection onto the first dim(I) coordinates. Two equivalent tests run
/// (cone dimension and radical membership) and must agree.
bool is_general_position(const Ideal& I);

/// Seeded random invertible coordinate change; resamples until the
/// transformed ideal is in general position, up to cfg.retries attempts.
std::pair<Ideal, Matrix> randomize_coordinates(const Ideal& I,
                                               const ProjectionConfig& cfg);

/// Jacobian-minor ideal J over the last n-d variables and the discriminant
/// image K = (I+J) eliminated down to the first d variables. K lives in the
/// d-variable ring. K = (0) raises DegenerateBranchLocus.
std::pair<Ideal, Ideal> branch_data(const Ideal& I, int d);

/// Short hex fingerprint of the canonical form of an ideal.
std::string ideal_fingerprint(const Ideal& I);

/// Recursion driver with memoization keyed by canonical reduced bases.
/// One Engine instance fixes one ProjectionConfig; results are reused
/// across calls, and all methods are safe to call concurrently.
class Engine {
public:
  explicit Engine(ProjectionConfig cfg = {});

  const ProjectionConfig& config() const;

  std::int64_t euler(const Ideal& I);
  MotivePoly motive(const Ideal& I);
  std::int64_t projective_euler(const Ideal& Ih);
  MotivePoly projective_motive(const Ideal& Ih);
  VarietyReport report(const Ideal& I);

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// one-shot wrappers
std::int64_t euler_characteristic(const Ideal& I,
                                  const ProjectionConfig& cfg = {});
MotivePoly motive(const Ideal& I, const ProjectionConfig& cfg = {});
std::int64_t projective_euler(const Ideal& Ih,
                              const ProjectionConfig& cfg = {});
MotivePoly projective_motive(const Ideal& Ih,
                             const ProjectionConfig& cfg = {});

}  // namespace echar
