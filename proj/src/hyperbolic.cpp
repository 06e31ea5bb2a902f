#include "urt/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "urt/errors.hpp"

namespace urt::hyp {

HPoint::HPoint(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw DomainError("upper half-plane point needs finite x and y > 0");
  }
}

double hyperbolic_distance(const HPoint& a, const HPoint& b) {
  double chord = std::hypot(a.x - b.x, a.y - b.y);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(a.y * b.y)));
}

MobiusMap::MobiusMap(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d) ||
      std::abs(a * d - b * c - 1.0) > 1e-12) {
    throw DomainError("Mobius map needs finite coefficients with ad - bc = 1");
  }
}

MobiusMap MobiusMap::affine_to(const HPoint& w) {
  double s = std::sqrt(w.y);
  return {s, w.x / s, 0.0, 1.0 / s};
}

MobiusMap MobiusMap::rotation(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return {c, s, -s, c};
}

HPoint MobiusMap::operator()(const HPoint& p) const {
  double wr = c_ * p.x + d_, wi = c_ * p.y;
  double n2 = wr * wr + wi * wi;
  double x = ((a_ * p.x + b_) * wr + a_ * p.y * wi) / n2;
  return HPoint(x, p.y / n2);
}

std::optional<double> MobiusMap::boundary(std::optional<double> x) const {
  if (!x) {
    if (c_ == 0.0) return std::nullopt;
    return a_ / c_;
  }
  double den = c_ * *x + d_;
  if (den == 0.0) return std::nullopt;
  return (a_ * *x + b_) / den;
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  MobiusMap h;
  h.a_ = f.a_ * g.a_ + f.b_ * g.c_;
  h.b_ = f.a_ * g.b_ + f.b_ * g.d_;
  h.c_ = f.c_ * g.a_ + f.d_ * g.c_;
  h.d_ = f.c_ * g.b_ + f.d_ * g.d_;
  return h;
}

Horoball Horoball::at_infinity(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw DomainError("horoball height must be positive");
  }
  double s = std::sqrt(height);
  std::optional<Rational> tangency;
  if (height == 1.0) tangency = Rational{1, 0};
  return Horoball(MobiusMap(s, 0.0, 0.0, 1.0 / s), tangency);
}

Horoball Horoball::ford(std::int64_t p, std::int64_t q) {
  if (q < 1 || std::gcd(p, q) != 1) {
    throw DomainError("Ford ball needs p/q in lowest terms with q >= 1");
  }
  // Extended Euclid for p*s + q*t = 1; the chart is [[p, -t], [q, s]].
  std::int64_t r0 = p, r1 = q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    r0 = std::exchange(r1, r0 - k * r1);
    s0 = std::exchange(s1, s0 - k * s1);
    t0 = std::exchange(t1, t0 - k * t1);
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  MobiusMap chart(static_cast<double>(p), static_cast<double>(-t0), static_cast<double>(q),
                  static_cast<double>(s0));
  return Horoball(chart, Rational{p, q});
}

double Horoball::euclidean_radius() const {
  if (chart_.c() == 0.0) throw DomainError("the ball at infinity has no radius");
  return 0.5 / (chart_.c() * chart_.c());
}

double Horoball::height() const {
  if (chart_.c() != 0.0) throw DomainError("only the ball at infinity has a height");
  return chart_.a() * chart_.a();
}

bool Horoball::contains(const HPoint& p) const {
  return chart_.inverse()(p).y >= 1.0 - 1e-12;
}

std::vector<Horoball> ford_horoballs(int q_max, double lo, double hi) {
  if (q_max < 1) throw DomainError("q_max must be >= 1");
  if (!(lo <= hi)) throw DomainError("empty window");
  std::vector<Horoball> out{Horoball::at_infinity()};
  for (std::int64_t q = 1; q <= q_max; ++q) {
    auto p_lo = static_cast<std::int64_t>(std::ceil(lo * static_cast<double>(q)));
    auto p_hi = static_cast<std::int64_t>(std::floor(hi * static_cast<double>(q)));
    for (std::int64_t p = p_lo; p <= p_hi; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(Horoball::ford(p, q));
    }
  }
  return out;
}

Contact ford_contact(const Horoball& a, const Horoball& b) {
  const auto& ra = a.rational_tangency();
  const auto& rb = b.rational_tangency();
  if (!ra || !rb) throw DomainError("exact contact needs Ford balls");
  // Infinity is 1/0; the squared center distance minus the squared radius sum
  // has the sign of (pq' - p'q)^2 - 1.
  std::int64_t det = ra->p * rb->q - rb->p * ra->q;
  if (det == 0) return Contact::overlapping;
  return det == 1 || det == -1 ? Contact::tangent : Contact::disjoint;
}

std::vector<HPoint> horocycle_lattice(const Horoball& h, double delta, std::int64_t first,
                                      std::int64_t count) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("delta must be >= 0");
  if (count < 1) throw DomainError("count must be >= 1");
  const double e = std::exp(delta);
  const double chord = 2.0 * std::asinh(0.5);
  std::vector<HPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    double k = static_cast<double>(first + i);
    out.push_back(h.chart()(HPoint(k * e, e)));
    if (i > 0 && std::abs(hyperbolic_distance(out[out.size() - 2], out.back()) - chord) > 1e-6) {
      throw PrecisionError("lattice points near the tangency point are no longer resolved");
    }
  }
  return out;
}

Horoforest build_horoforest(int q_max, double delta, double keep, std::int64_t half_width,
                            Rng& rng, double lo, double hi) {
  if (!(keep > 0.0 && keep <= 1.0)) throw DomainError("keep must lie in (0, 1]");
  if (half_width < 0) throw DomainError("half width must be >= 0");
  Horoforest f;
  f.horoballs = ford_horoballs(q_max, lo, hi);
  std::bernoulli_distribution coin(keep);
  for (std::size_t b = 0; b < f.horoballs.size(); ++b) {
    auto pts = horocycle_lattice(f.horoballs[b], delta, -half_width, 2 * half_width + 1);
    ForestPath cur{b, -half_width, {pts[0]}, true, false};
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (keep >= 1.0 || coin(rng)) {
        cur.points.push_back(pts[i]);
        continue;
      }
      f.paths.push_back(std::move(cur));
      cur = ForestPath{b, -half_width + static_cast<std::int64_t>(i), {pts[i]}, false, false};
    }
    cur.open_right = true;
    f.paths.push_back(std::move(cur));
  }
  return f;
}

double min_cross_separation(const Horoforest& forest) {
  double best = std::numeric_limits<double>::infinity();
  const auto& paths = forest.paths;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[i].horoball == paths[j].horoball) continue;
      for (const HPoint& a : paths[i].points) {
        for (const HPoint& b : paths[j].points) {
          best = std::min(best, hyperbolic_distance(a, b));
        }
      }
    }
  }
  return best;
}

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

// Area-uniform proposal on the box {|x| <= 1/2, y >= sqrt(3)/2}: the y
// marginal has density proportional to 1/y^2.
HPoint box_proposal(Rng& rng) {
  double x = uniform01(rng) - 0.5;
  double y = kHalfSqrt3 / (1.0 - uniform01(rng));
  return HPoint(x, y);
}

bool in_domain(const HPoint& p) { return p.x * p.x + p.y * p.y >= 1.0; }

}  // namespace

double fundamental_domain_area_estimate(long proposals, Rng& rng) {
  if (proposals < 1) throw DomainError("need at least one proposal");
  long hits = 0;
  for (long i = 0; i < proposals; ++i) hits += in_domain(box_proposal(rng)) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(proposals) * (2.0 / std::sqrt(3.0));
}

MobiusMap random_isometry(Rng& rng, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    HPoint w = box_proposal(rng);
    if (!in_domain(w)) continue;
    double theta = uniform01(rng) * std::numbers::pi;
    return (MobiusMap::affine_to(w) * MobiusMap::rotation(theta)).inverse();
  }
  throw RetryError("no fundamental-domain point in " + std::to_string(max_tries) +
                   " proposals");
}

std::complex<double> to_disc(const HPoint& p) {
  const std::complex<double> i(0.0, 1.0);
  return (p.z() - i) / (p.z() + i);
}

std::complex<double> to_disc_boundary(std::optional<double> x) {
  if (!x) return {1.0, 0.0};
  const std::complex<double> i(0.0, 1.0);
  return (*x - i) / (*x + i);
}

RayTrace ray_metrics(const std::vector<HPoint>& ray, std::size_t n_max,
                     std::optional<double> limit) {
  if (ray.size() < n_max + 1) throw DomainError("ray is shorter than n_max + 1 points");
  RayTrace t;
  t.points.assign(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  t.limit = to_disc_boundary(limit);
  for (std::size_t n = 0; n <= n_max; ++n) {
    double d = hyperbolic_distance(t.points[0], t.points[n]);
    t.distance.push_back(d);
    t.speed.push_back(n == 0 ? 0.0 : d / static_cast<double>(n));
    t.disc.push_back(to_disc(t.points[n]));
    t.disc_error.push_back(std::abs(t.disc.back() - t.limit));
  }
  return t;
}

}  // namespace urt::hyp
