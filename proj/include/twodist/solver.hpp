#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twodist/graph.hpp"

namespace twodist {

struct Representation {
  std::vector<Eigen::Vector2d> points;  // indexed by vertex
};

struct SolveConfig {
  int restarts = 64;
  int max_iters = 160;
  double tol_residual = 1e-9;   // squared-distance residuals
  double tol_distinct = 1e-6;   // minimum pairwise separation
  std::uint64_t rng_seed = 0;
  double box_radius = 0;  // 0: auto (2 + |V|, or the provenance bound)
};

enum class FeasStatus { Feasible, LikelyInfeasible, Degenerate };

struct FeasibilityReport {
  FeasStatus status = FeasStatus::LikelyInfeasible;
  double residual = 0;
  int restarts_used = 0;
  std::optional<Representation> rep;
  std::string note;
};

struct RangeSample {
  double d = 0;
  FeasStatus status = FeasStatus::LikelyInfeasible;
  double residual = 0;
};

struct RangeProfile {
  struct Interval {
    double lo = 0, hi = 0;
    std::string note;
  };
  std::vector<RangeSample> samples;  // sorted by d
  std::vector<Interval> inferred_intervals;
};

// Verifies red lengths 1, blue lengths d, per-class green vector equality and
// pairwise distinctness; residual is the worst squared-scale violation.
FeasibilityReport check_representation(const Graph& g, double d, const Representation& rep,
                                       const SolveConfig& cfg);

// Random-restart damped least squares over the reduced variable set obtained
// by eliminating green edges exactly. Throws InconsistentGreenCycle if the
// class relations force some class vector to zero.
FeasibilityReport solve(const Graph& g, double d, const SolveConfig& cfg);

RangeProfile sweep_range(const Graph& g, double d_lo, double d_hi, int steps,
                         const SolveConfig& cfg);

struct AlignResult {
  Representation rep;
  bool reflected = false;
  double rms = 0;
};

// Best isometry (rotation/translation, reflection allowed) mapping the
// anchors of b onto the anchors of a, applied to all of b.
AlignResult align_isometry(const Representation& a, const Representation& b,
                           const std::vector<int>& anchors);

std::string format_report(const FeasibilityReport& r);
std::string format_profile(const RangeProfile& p);

// Representation file (JSON): points plus the producing context.
void save_representation(const Representation& rep, const Graph& g, double d,
                         const SolveConfig& cfg, const std::string& path);
Representation load_representation(const std::string& path);

}  // namespace twodist
