#include "fairagg/welfare_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "fairagg/acts_mixing.hpp"
#include "fairagg/errors.hpp"
#include "fairagg/parallel.hpp"
#include "fairagg/random.hpp"
#include "fairagg/tolerances.hpp"

namespace fairagg {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec random_point(Rng& rng, std::size_t n) {
  Vec u(n);
  for (auto& v : u) v = rng.uniform();
  return u;
}

Vec clamp_unit(Vec u) {
  for (auto& v : u) v = std::clamp(v, 0.0, 1.0);
  return u;
}

}  // namespace

ProbeAct probe_act(const std::vector<double>& u, ProbeBeliefs mode) {
  if (u.empty()) throw Error(ErrorCode::kInvalidVector, "empty utility vector");
  for (double v : u) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidVector, "coordinate " + std::to_string(v) + " outside [0,1]");
    }
  }
  std::vector<ValueFunction> values(u.size(), ValueFunction{0.0, 1.0});
  auto ev = problem_with_event({"worst", "best"}, std::move(values), u);
  Problem problem = mode == ProbeBeliefs::kSplitComplement
                        ? refine_proportional(ev.problem, std::size_t{1}, 0.5).refined
                        : std::move(ev.problem);
  const bool all_best = std::all_of(u.begin(), u.end(), [](double v) { return v == 1.0; });
  const bool all_worst = std::all_of(u.begin(), u.end(), [](double v) { return v == 0.0; });
  Act act = all_best    ? Act::constant(problem, 1)
            : all_worst ? Act::constant(problem, 0)
                        : binary_act(problem, 1, {0}, 0);
  return ProbeAct{std::move(problem), std::move(act)};
}

double psi_of_rule(const AggregationRule& rule, const std::vector<double>& u,
                   ProbeBeliefs mode) {
  if (rule.comparator_only()) {
    throw Error(ErrorCode::kComparatorOnly, rule.label() + " has no score to probe");
  }
  auto probe = probe_act(u, mode);
  return rule.evaluate(probe.problem, probe.act);
}

WelfareFunction::WelfareFunction(std::size_t n, Raw raw, std::string name)
    : n_(n), raw_(std::move(raw)), name_(std::move(name)) {
  const double at_zero = raw_(Vec(n_, 0.0));
  const double at_one = raw_(Vec(n_, 1.0));
  if (std::isfinite(at_zero) && std::isfinite(at_one) && at_one > at_zero) {
    offset_ = at_zero;
    scale_ = at_one - at_zero;
    calibrated_ = true;
  }
}

double WelfareFunction::operator()(const std::vector<double>& u) const {
  if (u.size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "psi expects " + std::to_string(n_) + " coordinates");
  }
  const double r = raw_(u);
  return calibrated_ ? (r - offset_) / scale_ : r;
}

WelfareFunction welfare_of_rule(const AggregationRule& rule, std::size_t n, ProbeBeliefs mode) {
  if (rule.comparator_only()) {
    throw Error(ErrorCode::kComparatorOnly, rule.label() + " has no score to probe");
  }
  if (!rule.accepts(n)) {
    throw Error(ErrorCode::kDimensionMismatch, rule.label() + " does not accept n = " +
                                                   std::to_string(n));
  }
  return WelfareFunction(
      n, [rule, mode](const Vec& u) { return psi_of_rule(rule, u, mode); }, rule.label());
}

std::string_view property_name(WelfareProperty p) {
  switch (p) {
    case WelfareProperty::kMonotone: return "monotone";
    case WelfareProperty::kQuasiconcave: return "quasiconcave";
    case WelfareProperty::kHomogeneous: return "homogeneous";
    case WelfareProperty::kTranslationInvariant: return "translation_invariant";
    case WelfareProperty::kSymmetric: return "symmetric";
  }
  return "?";
}

const std::vector<WelfareProperty>& all_welfare_properties() {
  static const std::vector<WelfareProperty> all{
      WelfareProperty::kMonotone, WelfareProperty::kQuasiconcave, WelfareProperty::kHomogeneous,
      WelfareProperty::kTranslationInvariant, WelfareProperty::kSymmetric};
  return all;
}

std::string_view verdict_name(VerdictStatus s) {
  return s == VerdictStatus::kViolated ? "violated" : "no_violation_found";
}

namespace {

struct PropertySample {
  std::vector<Vec> points;
  double scalar = 0.0;
};

PropertySample draw_sample(WelfareProperty property, std::size_t n, Rng& rng,
                           std::size_t index) {
  PropertySample s;
  switch (property) {
    case WelfareProperty::kMonotone: {
      Vec v(n), u(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = rng.uniform(0.0, 1.0 - 1e-3);
        u[i] = std::min(1.0, v[i] + rng.uniform(1e-3, 1.0 - v[i]));
      }
      s.points = {u, v};
      break;
    }
    case WelfareProperty::kQuasiconcave: {
      if (index == 0 && n >= 2) {
        Vec u(n, 0.0), v(n, 0.0);
        u[0] = 1.0;
        v[1] = 1.0;
        s.points = {u, v};
        s.scalar = 0.5;
      } else {
        s.points = {random_point(rng, n), random_point(rng, n)};
        s.scalar = rng.uniform();
      }
      break;
    }
    case WelfareProperty::kHomogeneous: {
      Vec u = random_point(rng, n);
      const double top = *std::max_element(u.begin(), u.end());
      s.points = {u};
      s.scalar = rng.uniform(0.0, 1.0) * (top > 0.0 ? 1.0 / top : 1.0);
      break;
    }
    case WelfareProperty::kTranslationInvariant: {
      Vec u = random_point(rng, n);
      const double lo = *std::min_element(u.begin(), u.end());
      const double hi = *std::max_element(u.begin(), u.end());
      s.points = {u};
      s.scalar = rng.uniform(-lo, 1.0 - hi);
      break;
    }
    case WelfareProperty::kSymmetric: {
      Vec u;
      std::vector<std::size_t> perm;
      if (index == 0 && n >= 2) {
        u.assign(n, 0.0);
        u[0] = 1.0;
        perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[0], perm[1]);
      } else {
        u = random_point(rng, n);
        perm = rng.permutation(n);
      }
      Vec pu(n);
      for (std::size_t i = 0; i < n; ++i) pu[i] = u[perm[i]];
      s.points = {u, pu};
      break;
    }
  }
  return s;
}

bool sample_violates(const WelfareFunction& psi, WelfareProperty property,
                     const std::vector<Vec>& pts, double scalar) {
  switch (property) {
    case WelfareProperty::kMonotone:
      return psi(pts.at(0)) <= psi(pts.at(1));
    case WelfareProperty::kQuasiconcave: {
      const auto& u = pts.at(0);
      const auto& v = pts.at(1);
      Vec w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = scalar * u[i] + (1.0 - scalar) * v[i];
      return psi(clamp_unit(w)) < std::min(psi(u), psi(v)) - kDerivedTolerance;
    }
    case WelfareProperty::kHomogeneous: {
      const auto& u = pts.at(0);
      Vec au(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) au[i] = scalar * u[i];
      return std::abs(psi(clamp_unit(au)) - scalar * psi(u)) > kDerivedTolerance;
    }
    case WelfareProperty::kTranslationInvariant: {
      const auto& u = pts.at(0);
      Vec uc(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) uc[i] = u[i] + scalar;
      return std::abs(psi(clamp_unit(uc)) - psi(u) - scalar) > kDerivedTolerance;
    }
    case WelfareProperty::kSymmetric:
      return std::abs(psi(pts.at(1)) - psi(pts.at(0))) > kDerivedTolerance;
  }
  return false;
}

}  // namespace

PropertyVerdict check_property(const WelfareFunction& psi, WelfareProperty property,
                               std::size_t samples, std::uint64_t seed) {
  const std::size_t n = psi.dimension();
  const auto tag = static_cast<std::uint64_t>(property) + 101;
  auto sample_at = [&](std::size_t i) {
    Rng rng(derive_seed(seed, tag, i));
    return draw_sample(property, n, rng, i);
  };
  auto hit = first_index_where(samples, [&](std::size_t i) {
    auto s = sample_at(i);
    return sample_violates(psi, property, s.points, s.scalar);
  });
  PropertyVerdict out;
  out.property = property;
  out.seed = seed;
  if (hit) {
    auto s = sample_at(*hit);
    out.status = VerdictStatus::kViolated;
    out.points = std::move(s.points);
    out.scalar = s.scalar;
    out.samples = *hit + 1;
  } else {
    out.samples = samples;
  }
  return out;
}

PropertyVerdict check_monotone(const WelfareFunction& psi, std::size_t samples,
                               std::uint64_t seed) {
  return check_property(psi, WelfareProperty::kMonotone, samples, seed);
}
PropertyVerdict check_quasiconcave(const WelfareFunction& psi, std::size_t samples,
                                   std::uint64_t seed) {
  return check_property(psi, WelfareProperty::kQuasiconcave, samples, seed);
}
PropertyVerdict check_homogeneous(const WelfareFunction& psi, std::size_t samples,
                                  std::uint64_t seed) {
  return check_property(psi, WelfareProperty::kHomogeneous, samples, seed);
}
PropertyVerdict check_translation_invariant(const WelfareFunction& psi, std::size_t samples,
                                            std::uint64_t seed) {
  return check_property(psi, WelfareProperty::kTranslationInvariant, samples, seed);
}
PropertyVerdict check_symmetric(const WelfareFunction& psi, std::size_t samples,
                                std::uint64_t seed) {
  return check_property(psi, WelfareProperty::kSymmetric, samples, seed);
}

bool witness_violates(const WelfareFunction& psi, const PropertyVerdict& verdict) {
  if (verdict.status != VerdictStatus::kViolated) return false;
  return sample_violates(psi, verdict.property, verdict.points, verdict.scalar);
}

std::vector<PropertyRow> property_matrix(
    const std::vector<std::pair<std::string, WelfareFunction>>& functions, std::size_t samples,
    std::uint64_t seed) {
  std::vector<PropertyRow> rows;
  for (const auto& [name, psi] : functions) {
    PropertyRow row{name, {}};
    for (auto p : all_welfare_properties()) {
      row.verdicts.push_back(check_property(psi, p, samples, seed));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> make_direction_grid(std::size_t n, std::size_t count,
                                                     std::uint64_t seed) {
  std::vector<Vec> grid;
  auto push_unique = [&grid](Vec u) {
    if (std::find(grid.begin(), grid.end(), u) == grid.end()) grid.push_back(std::move(u));
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    push_unique(e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 1.0);
    e[i] = 0.0;
    push_unique(e);
  }
  Rng rng(seed);
  while (grid.size() < count) {
    Vec u = random_point(rng, n);
    const double lo = *std::min_element(u.begin(), u.end());
    const double hi = *std::max_element(u.begin(), u.end());
    if (hi - lo < 1e-6) continue;
    for (auto& v : u) v = (v - lo) / (hi - lo);
    grid.push_back(std::move(u));
  }
  return grid;
}

namespace {

// --- recovery geometry -----------------------------------------------------

// Simplex point for n = 3 written as (mu0, mu1); mu2 = 1 - mu0 - mu1.
struct Corner {
  double x;
  double y;
  std::size_t edge;  // constraint carrying the edge from this corner to the next
};

struct PlaneConstraint {
  double a0;
  double a1;
  double c;  // a0 * x + a1 * y >= c
};

PlaneConstraint to_plane(const Vec& u, double bound) {
  return {u[0] - u[2], u[1] - u[2], bound - u[2]};
}

std::vector<Corner> clip(const std::vector<Corner>& poly, const PlaneConstraint& h,
                         std::size_t label) {
  std::vector<Corner> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  const double eps = 1e-13 * (1.0 + std::abs(h.a0) + std::abs(h.a1));
  auto g = [&](const Corner& p) { return h.a0 * p.x + h.a1 * p.y - h.c; };
  for (std::size_t k = 0; k < m; ++k) {
    const Corner& p = poly[k];
    const Corner& q = poly[(k + 1) % m];
    const double gp = g(p);
    const double gq = g(q);
    const bool in_p = gp >= -eps;
    const bool in_q = gq >= -eps;
    if (in_p) out.push_back(p);
    if (in_p != in_q) {
      const double s = gp / (gp - gq);
      Corner cut{p.x + s * (q.x - p.x), p.y + s * (q.y - p.y), in_p ? label : p.edge};
      out.push_back(cut);
    }
  }
  return out;
}

Vec to_mu(const Corner& c) { return {c.x, c.y, 1.0 - c.x - c.y}; }

std::vector<Vec> cleaned_vertices(const std::vector<Vec>& raw) {
  std::vector<Vec> out;
  for (const auto& v : raw) {
    Vec w = v;
    double total = 0.0;
    for (auto& x : w) {
      x = std::max(0.0, x);
      total += x;
    }
    for (auto& x : w) x /= total;
    bool near = std::any_of(out.begin(), out.end(), [&](const Vec& o) {
      double d = 0.0;
      for (std::size_t i = 0; i < o.size(); ++i) d = std::max(d, std::abs(o[i] - w[i]));
      return d <= 1e-9;
    });
    if (!near) out.push_back(std::move(w));
  }
  return out;
}

void require_support_function(const WelfareFunction& psi, const RecoveryOptions& options) {
  for (auto p : {WelfareProperty::kHomogeneous, WelfareProperty::kTranslationInvariant}) {
    auto v = check_property(psi, p, options.support_check_samples, options.support_check_seed);
    if (v.status == VerdictStatus::kViolated) {
      throw Error(ErrorCode::kNotSupportFunction,
                  psi.name() + " is not " + std::string(property_name(p)));
    }
  }
}

Vec direction_from_plane_normal(double a0, double a1) {
  Vec u{a0, a1, 0.0};
  const double lo = *std::min_element(u.begin(), u.end());
  const double hi = *std::max_element(u.begin(), u.end());
  for (auto& v : u) v = (v - lo) / (hi - lo);
  return u;
}

}  // namespace

RecoveredWeightSet recover_weight_set(const WelfareFunction& psi,
                                      const std::vector<std::vector<double>>& grid,
                                      const RecoveryOptions& options) {
  const std::size_t n = psi.dimension();
  if (n < 2) throw Error(ErrorCode::kDimensionMismatch, "need at least two individuals");
  require_support_function(psi, options);

  RecoveredWeightSet out;
  out.dimension = n;
  out.grid_size = grid.size();
  for (const auto& u : grid) {
    if (u.size() != n) throw Error(ErrorCode::kDimensionMismatch, "grid direction length");
    out.halfspaces.push_back({u, psi(u)});
  }

  if (n == 2) {
    // mu = (t, 1 - t); constraint t (u0 - u1) >= bound - u1.
    double lo = 0.0, hi = 1.0;
    for (const auto& h : out.halfspaces) {
      const double a = h.direction[0] - h.direction[1];
      const double c = h.bound - h.direction[1];
      if (a > 0.0) lo = std::max(lo, c / a);
      if (a < 0.0) hi = std::min(hi, c / a);
      if (a == 0.0 && c > 1e-12) lo = 2.0;  // infeasible
    }
    if (lo > hi + 1e-9) {
      throw Error(ErrorCode::kNotSupportFunction, "halfspaces have empty intersection");
    }
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    out.vertices = cleaned_vertices({{lo, 1.0 - lo}, {hi, 1.0 - hi}});
    out.has_vertices = true;
    return out;
  }
  if (n > 3) return out;

  // Constraints 0..2 are the simplex facets mu2 >= 0, mu0 >= 0, mu1 >= 0.
  std::vector<PlaneConstraint> planes{{-1.0, -1.0, -1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  std::vector<Corner> poly{{1.0, 0.0, 0}, {0.0, 1.0, 1}, {0.0, 0.0, 2}};
  auto add_plane = [&](const PlaneConstraint& h) {
    planes.push_back(h);
    poly = clip(poly, h, planes.size() - 1);
    if (poly.empty()) {
      throw Error(ErrorCode::kNotSupportFunction, "halfspaces have empty intersection");
    }
  };
  for (const auto& h : out.halfspaces) add_plane(to_plane(h.direction, h.bound));

  if (options.refine) {
    std::set<std::pair<std::size_t, std::size_t>> settled;
    const std::size_t max_cuts = 4000;
    bool changed = true;
    while (changed && out.refinement_cuts < max_cuts) {
      changed = false;
      const std::size_t m = poly.size();
      for (std::size_t k = 0; k < m && !changed; ++k) {
        const std::size_t in_edge = poly[(k + m - 1) % m].edge;
        const std::size_t out_edge = poly[k].edge;
        if (in_edge == out_edge) continue;
        auto key = std::minmax(in_edge, out_edge);
        if (settled.count(key)) continue;
        const auto& p = planes[in_edge];
        const auto& q = planes[out_edge];
        const double np = std::hypot(p.a0, p.a1);
        const double nq = std::hypot(q.a0, q.a1);
        const double d0 = p.a0 / np + q.a0 / nq;
        const double d1 = p.a1 / np + q.a1 / nq;
        // Nearly parallel lines meet at an ill-conditioned point; below this
        // angle the remaining sliver is thinner than the rounding it causes.
        const double spread = std::hypot(p.a0 / np - q.a0 / nq, p.a1 / np - q.a1 / nq);
        if (spread < 1e-7 || std::hypot(d0, d1) < 1e-12) {
          settled.insert(key);
          continue;
        }
        Vec u = direction_from_plane_normal(d0, d1);
        const double bound = psi(u);
        const double here = dot(to_mu(poly[k]), u);
        if (here < bound - 1e-12) {
          out.halfspaces.push_back({u, bound});
          add_plane(to_plane(u, bound));
          ++out.refinement_cuts;
          changed = true;
        } else {
          settled.insert(key);
        }
      }
    }
  }

  std::vector<Vec> raw;
  for (const auto& c : poly) raw.push_back(to_mu(c));
  out.vertices = cleaned_vertices(raw);
  out.has_vertices = true;
  return out;
}

WeightSet to_weight_set(const RecoveredWeightSet& recovered) {
  if (!recovered.has_vertices) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vertex enumeration is only available for two or three individuals");
  }
  std::vector<WeightVector> vs;
  for (const auto& v : recovered.vertices) vs.emplace_back(v);
  return WeightSet(std::move(vs));
}

namespace {

// Affine minimum-norm combination of the points in S: minimize |sum a_k q_k|
// subject to sum a_k = 1. Returns false when the system is singular.
bool affine_min_norm(const std::vector<Vec>& q, const std::vector<std::size_t>& s,
                     std::vector<double>& alpha) {
  const std::size_t m = s.size();
  const std::size_t dim = m + 1;
  std::vector<std::vector<double>> a(dim, std::vector<double>(dim + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = dot(q[s[i]], q[s[j]]);
    a[i][m] = 1.0;
    a[m][i] = 1.0;
  }
  a[m][dim] = 1.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-18) return false;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= dim; ++c) a[r][c] -= f * a[col][c];
    }
  }
  alpha.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) alpha[i] = a[i][dim] / a[i][i];
  return true;
}

}  // namespace

double distance_to_hull(const std::vector<double>& point,
                        const std::vector<std::vector<double>>& hull) {
  if (hull.empty()) throw Error(ErrorCode::kEmptyWeightSet, "empty hull");
  // Wolfe's minimum-norm-point algorithm on the translated points.
  std::vector<Vec> q;
  double scale = 1e-300;
  for (const auto& h : hull) {
    if (h.size() != point.size()) throw Error(ErrorCode::kDimensionMismatch, "hull point");
    Vec d(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) d[i] = h[i] - point[i];
    scale = std::max(scale, dot(d, d));
    q.push_back(std::move(d));
  }
  std::size_t start = 0;
  for (std::size_t k = 1; k < q.size(); ++k) {
    if (dot(q[k], q[k]) < dot(q[start], q[start])) start = k;
  }
  std::vector<std::size_t> s{start};
  std::vector<double> lambda{1.0};
  Vec x = q[start];
  auto rebuild = [&] {
    x.assign(point.size(), 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += lambda[k] * q[s[k]][i];
    }
  };

  for (std::size_t major = 0; major < 50 + 10 * q.size(); ++major) {
    const double xx = dot(x, x);
    if (xx <= 1e-300) return 0.0;
    std::size_t j = 0;
    for (std::size_t k = 1; k < q.size(); ++k) {
      if (dot(x, q[k]) < dot(x, q[j])) j = k;
    }
    if (dot(x, q[j]) >= xx - 1e-14 * scale) break;
    if (std::find(s.begin(), s.end(), j) != s.end()) break;
    s.push_back(j);
    lambda.push_back(0.0);
    bool stuck = false;
    for (std::size_t minor = 0; minor < 10 * q.size() + 10; ++minor) {
      std::vector<double> alpha;
      if (!affine_min_norm(q, s, alpha)) {
        stuck = true;
        break;
      }
      if (std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > 1e-15; })) {
        lambda = alpha;
        break;
      }
      double theta = 1.0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (alpha[k] <= 1e-15 && lambda[k] - alpha[k] > 0.0) {
          theta = std::min(theta, lambda[k] / (lambda[k] - alpha[k]));
        }
      }
      for (std::size_t k = 0; k < s.size(); ++k) {
        lambda[k] = theta * alpha[k] + (1.0 - theta) * lambda[k];
      }
      std::vector<std::size_t> keep_s;
      std::vector<double> keep_l;
      double total = 0.0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (lambda[k] > 1e-15) {
          keep_s.push_back(s[k]);
          keep_l.push_back(lambda[k]);
          total += lambda[k];
        }
      }
      for (auto& l : keep_l) l /= total;
      s = std::move(keep_s);
      lambda = std::move(keep_l);
    }
    if (stuck) {
      s.pop_back();
      lambda.pop_back();
      rebuild();
      break;
    }
    rebuild();
  }
  return std::sqrt(dot(x, x));
}

double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b) {
  double out = 0.0;
  for (const auto& p : a) out = std::max(out, distance_to_hull(p, b));
  for (const auto& p : b) out = std::max(out, distance_to_hull(p, a));
  return out;
}

std::vector<std::vector<double>> vertex_list(const WeightSet& set) {
  std::vector<Vec> out;
  for (const auto& v : set.vertices()) out.push_back(v.values());
  return out;
}

double hausdorff_distance(const WeightSet& a, const WeightSet& b) {
  return hausdorff_distance(vertex_list(a), vertex_list(b));
}

double hausdorff_distance(const WeightSet& a, const RecoveredWeightSet& b) {
  if (!b.has_vertices) {
    throw Error(ErrorCode::kDimensionMismatch,
                "recovered set has no vertex representation for n > 3");
  }
  return hausdorff_distance(vertex_list(a), b.vertices);
}

}  // namespace fairagg
