#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "urt/random.hpp"

namespace urt::hyp {

/// Point of the upper half-plane.
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  HPoint() = default;
  /// Throws DomainError unless y > 0 and both coordinates are finite.
  HPoint(double x, double y);

  std::complex<double> z() const { return {x, y}; }
};

double hyperbolic_distance(const HPoint& a, const HPoint& b);

/// z -> (az + b)/(cz + d) with ad - bc = 1.
class MobiusMap {
 public:
  MobiusMap() = default;
  /// Throws DomainError when |ad - bc - 1| > 1e-12.
  MobiusMap(double a, double b, double c, double d);

  static MobiusMap translation(double t) { return {1.0, t, 0.0, 1.0}; }
  /// Affine map sending i to w.
  static MobiusMap affine_to(const HPoint& w);
  /// Rotation by angle 2*theta about i.
  static MobiusMap rotation(double theta);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  HPoint operator()(const HPoint& p) const;
  /// Image of a boundary point; nullopt stands for infinity.
  std::optional<double> boundary(std::optional<double> x) const;

  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

 private:
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

struct Rational {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

/// A horoball stored as the image of {y >= 1} under `chart`. Ford balls also
/// remember their exact tangency point.
class Horoball {
 public:
  /// {y >= height}.
  static Horoball at_infinity(double height = 1.0);
  /// The Ford ball tangent at p/q (lowest terms, q >= 1), radius 1/(2q^2).
  static Horoball ford(std::int64_t p, std::int64_t q);
  static Horoball from_chart(const MobiusMap& chart) { return Horoball(chart, {}); }

  const MobiusMap& chart() const { return chart_; }
  const std::optional<Rational>& rational_tangency() const { return tangency_; }

  /// Tangency point on the boundary; nullopt for infinity.
  std::optional<double> tangency() const { return chart_.boundary(std::nullopt); }
  bool is_at_infinity() const { return !tangency().has_value(); }
  /// Euclidean radius of the disc (only when tangent at a real point).
  double euclidean_radius() const;
  /// Height of the bounding horizontal line (only for the ball at infinity).
  double height() const;

  bool contains(const HPoint& p) const;
  Horoball transformed(const MobiusMap& g) const { return Horoball(g * chart_, {}); }

 private:
  Horoball(MobiusMap chart, std::optional<Rational> tangency)
      : chart_(chart), tangency_(tangency) {}

  MobiusMap chart_;
  std::optional<Rational> tangency_;
};

/// The ball at infinity (height 1) followed by the Ford balls at p/q,
/// gcd(p, q) = 1, q <= q_max, lo <= p/q <= hi, ordered by q then p.
std::vector<Horoball> ford_horoballs(int q_max, double lo = 0.0, double hi = 1.0);

enum class Contact { disjoint, tangent, overlapping };

/// Exact relation between two Ford balls (or a Ford ball and the ball at
/// infinity) from their rational tangency points.
Contact ford_contact(const Horoball& a, const Horoball& b);

/// Points of the horocycle at depth delta inside h with unit horocyclic
/// spacing: chart(k e^delta + i e^delta) for k = first, ..., first+count-1.
/// Throws PrecisionError once consecutive points can no longer be resolved.
std::vector<HPoint> horocycle_lattice(const Horoball& h, double delta, std::int64_t first,
                                      std::int64_t count);

struct ForestPath {
  std::size_t horoball = 0;
  std::int64_t first = 0;  // lattice index of points[0]
  std::vector<HPoint> points;
  /// The component continues past the window on that side.
  bool open_left = false;
  bool open_right = false;
};

struct Horoforest {
  std::vector<Horoball> horoballs;
  std::vector<ForestPath> paths;
};

/// Lattice copies of Z at depth delta in every Ford ball with q <= q_max in
/// [lo, hi] (plus the ball at infinity), restricted to indices |k| <= half_width;
/// each lattice edge is kept independently with probability keep.
Horoforest build_horoforest(int q_max, double delta, double keep, std::int64_t half_width,
                            Rng& rng, double lo = 0.0, double hi = 1.0);

/// Smallest hyperbolic distance between vertices lying in different horoballs.
double min_cross_separation(const Horoforest& forest);

/// Hyperbolic area estimate of {|x| <= 1/2, |z| >= 1} by rejection from the
/// box {|x| <= 1/2, y >= sqrt(3)/2}, which has area 2/sqrt(3).
double fundamental_domain_area_estimate(long proposals, Rng& rng);

/// (T_w R_theta)^{-1} with w area-uniform in the fundamental domain of the
/// modular group and theta uniform. Throws RetryError after max_tries
/// rejected proposals.
MobiusMap random_isometry(Rng& rng, int max_tries = 1000);

/// Cayley map to the unit disc, z -> (z - i)/(z + i).
std::complex<double> to_disc(const HPoint& p);
/// Boundary version; nullopt (infinity) maps to 1.
std::complex<double> to_disc_boundary(std::optional<double> x);

struct RayTrace {
  std::vector<HPoint> points;
  std::vector<double> distance;  // d(x_0, x_n)
  std::vector<double> speed;     // d(x_0, x_n)/n, speed[0] = 0
  std::vector<std::complex<double>> disc;
  std::complex<double> limit;
  std::vector<double> disc_error;  // |disc[n] - limit|
};

/// Metrics of x_0..x_{n_max}; `limit` is the boundary point the ray should
/// converge to (nullopt for infinity).
RayTrace ray_metrics(const std::vector<HPoint>& ray, std::size_t n_max,
                     std::optional<double> limit);

}  // namespace urt::hyp
