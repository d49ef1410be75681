#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dlab/measure.hpp"

namespace dlab {

struct Density1D {
  std::string label;
  std::function<double(double)> rule;
};

/// Density on R^d evaluated at a point of length d.
using DensityNd = std::function<double(std::span<const double>)>;
using Density2D = std::function<double(double, double)>;

struct QuadratureOptions {
  /// Absolute error bound each 1-D integral must certify.
  double abs_tol = 1e-12;
  unsigned max_depth = 15;
};

/// Adaptive Gauss-Kronrod integral of f over [a, b]; throws QuadratureFailure
/// when the error estimate exceeds abs_tol.
double integrate_1d(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& options = {},
                    double* error = nullptr);

// ---------------------------------------------------------------- 1-D ------

struct DyadicDiscretization {
  int k = 0;
  std::int64_t j_lo = 0;
  std::int64_t j_hi = 0;
  /// masses[j - j_lo] = integral of u over [2^-k j, 2^-k (j+1)).
  std::vector<double> masses;
  std::vector<double> errors;
  [[nodiscard]] double mass(std::int64_t j) const;
};

/// Masses of the dyadic intervals I_j^k for j_lo <= j <= j_hi.
DyadicDiscretization discretize_1d(const Density1D& u, int k, std::int64_t j_lo, std::int64_t j_hi,
                                   const QuadratureOptions& options = {});

/// max_j |m_k(j) - m_{k+1}(2j) - m_{k+1}(2j+1)| / |m_k(j)| over the range.
double telescoping_defect(const Density1D& u, int k, std::int64_t j_lo, std::int64_t j_hi,
                          const QuadratureOptions& options = {});

/// The discretization as a measure on Z (vertex j gets masses[j], converted to
/// a Rational exactly). Vertices outside the range raise WindowOverflow.
VertexMeasure discretization_measure(const DyadicDiscretization& disc);

struct TripleBallReport {
  double max_ratio = 0.0;
  double argmax_center = 0.0;
  double argmax_radius = 0.0;
  /// (center, radius, mu(B(x,3r)) / mu(B(x,r))) for every pair, centers outer.
  std::vector<std::tuple<double, double, double>> ratios;
  /// max_ratio <= 3 + tolerance.
  bool within_three = false;
  double tolerance = 1e-9;
};

TripleBallReport triple_ball_check(const Density1D& u, const std::vector<double>& centers,
                                   const std::vector<double>& radii, const QuadratureOptions& options = {});

// ---------------------------------------------------------------- 2-D ------

/// Mass of {|x - cx| + |y - cy| < h}.
double l1_ball_mass(const Density2D& u, double cx, double cy, double h, const QuadratureOptions& options = {});

/// Mass of {max(|x - cx|, |y - cy|) < h}, computed as twice the l1 mass of
/// v(s, t) = u(s + t, s - t) around ((cx + cy)/2, (cx - cy)/2).
double linf_ball_mass(const Density2D& u, double cx, double cy, double h, const QuadratureOptions& options = {});

enum class PlaneNorm { kL1, kLinf };

struct DyadicBallReport {
  int k = 0;
  PlaneNorm norm = PlaneNorm::kL1;
  std::vector<std::pair<std::int64_t, std::int64_t>> centers;
  /// Mass of the radius-2^-k ball around 2^-k * center.
  std::vector<double> masses;
  /// (center mass + lattice-neighbor masses) / center mass; neighbors are the
  /// 4 axis neighbors for l1 and the 8 king moves for l-infinity.
  std::vector<double> neighborhood_ratio;
  /// neighborhood_ratio <= bound * (1 + tolerance) with bound 5 (l1) or 9.
  std::vector<bool> satisfied;
  double bound = 5.0;
  double max_ratio = 0.0;
  double tolerance = 1e-9;
};

DyadicBallReport dyadic_ball_masses(const Density2D& u, int k,
                                    const std::vector<std::pair<std::int64_t, std::int64_t>>& centers,
                                    PlaneNorm norm = PlaneNorm::kL1, const QuadratureOptions& options = {});

// ------------------------------------------------------------ Laplacian ----

struct LaplacianProbe {
  double h = 1e-4;
  double tolerance = 1e-7;
  std::vector<double> estimates;
  double max_estimate = 0.0;
  /// Indices of points whose estimate exceeds tolerance.
  std::vector<std::size_t> flagged;
};

/// Central-difference Laplacian (2d+1 points) at each point; points with an
/// estimate above 10 h^2 are flagged as not superharmonic.
LaplacianProbe c2_superharmonicity_probe(const DensityNd& u, const std::vector<std::vector<double>>& points,
                                         double h = 1e-4);

// ----------------------------------------------------------- mean value ----

/// g(|x|_2) on R^dim. `kinks` lists radii where g is not smooth.
struct RadialDensity {
  std::string label;
  int dim = 3;
  std::function<double(double)> profile;
  std::vector<double> kinks;
  [[nodiscard]] DensityNd as_function() const;
};

enum class FkExponent {
  kTwoMinusD,  ///< min(k^{2-d}, |x|^{2-d})
  kDMinusTwo,  ///< k^{d-2} on |x| <= k, |x|^{d-2} outside
};
const char* to_string(FkExponent e);

RadialDensity fk_density(int d, double k, FkExponent exponent = FkExponent::kTwoMinusD);

struct MeanValueOptions {
  /// Grid spacing is r / grid_divisions.
  int grid_divisions = 64;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  double rel_tol = 1e-6;
  /// Cap on cells for the general (non-radial) grid.
  double max_grid_cells = 3e8;
};

struct BallAverage {
  double grid = 0.0;
  /// |grid at spacing r/N - grid at spacing 2r/N|.
  double grid_error = 0.0;
  double mc = 0.0;
  double mc_se = 0.0;
  /// Adaptive reduced-coordinate quadrature; radial densities only.
  std::optional<double> reference;
  /// |grid - mc| / sqrt(mc_se^2 + grid_error^2).
  double z = 0.0;
  bool agree = false;
};

struct MeanValueResult {
  BallAverage at_r;
  BallAverage at_2r;
  /// Averages used for the verdict (reference when present, grid otherwise).
  double avg_r = 0.0;
  double avg_2r = 0.0;
  std::string estimator;
  bool satisfied = false;
  bool estimators_agree = false;
};

/// Average over B(center, r) vs B(center, 2r). Radial densities use a grid
/// aligned with the ray through the center.
MeanValueResult mean_value_check(const RadialDensity& f, std::span<const double> center, double r,
                                 const MeanValueOptions& options = {});
MeanValueResult mean_value_check(int d, const DensityNd& f, std::span<const double> center, double r,
                                 const MeanValueOptions& options = {});

// -------------------------------------------------------------- parsing ----

/// Arithmetic expression over the variables x, y, z, t (t = x) and x1..x8,
/// with + - * / ^, unary minus, parentheses, abs(e) and norm2(e, ...).
class Expression {
 public:
  static Expression parse(const std::string& text);
  double operator()(std::span<const double> point) const;
  [[nodiscard]] const std::string& text() const { return text_; }
  /// 1 + the largest variable index used (0 for constants).
  [[nodiscard]] int arity() const { return arity_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
  int arity_ = 0;
};

struct NamedDensity {
  std::string label;
  DensityNd rule;
  std::optional<RadialDensity> radial;
};

/// const[:c], linear, invsq, radial_fk:d:k[:2-d|d-2], expr:<expression>.
/// `dim` fixes the dimension for radial rules that do not name one.
NamedDensity density_by_name(const std::string& spec, int dim);

Density1D as_density_1d(const NamedDensity& density);
Density2D as_density_2d(const NamedDensity& density);

}  // namespace dlab
