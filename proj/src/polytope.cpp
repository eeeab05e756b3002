#include "nlgames/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

#include "nlgames/linalg.hpp"
#include "nlgames/lp.hpp"

namespace nlgames {
namespace {

// Advances a mixed-radix counter in lexicographic order (last digit fastest).
bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

// Feasibility program for "behavior == convex mixture of deterministic
// strategies". Instantiated over Rational for enumeration output (always
// rational) and over QuadExt for arbitrary behaviors.
template <typename S>
LpOutcome<S> mixture_lp(const Scenario& scenario, const std::vector<LocalStrategy>& strategies,
                        const std::vector<S>& target) {
  const int n = scenario.coords();
  const int ns = static_cast<int>(strategies.size());
  LinearProgram<S> lp;
  lp.num_vars = ns;
  lp.lower.assign(ns, std::optional<S>(S(0)));
  lp.upper.assign(ns, std::optional<S>());
  lp.eq.reserve(n + 1);
  for (int i = 0; i < n; ++i) {
    auto [x, y, a, b] = scenario.decode(i);
    LinearConstraint<S> row;
    row.coeffs.assign(ns, S(0));
    for (int s = 0; s < ns; ++s)
      if (strategies[s].alice_map[x] == a && strategies[s].bob_map[y] == b)
        row.coeffs[s] = S(1);
    row.rhs = target[i];
    lp.eq.push_back(std::move(row));
  }
  LinearConstraint<S> one;
  one.coeffs.assign(ns, S(1));
  one.rhs = S(1);
  lp.eq.push_back(std::move(one));
  return feasible_point(lp);
}

}  // namespace

NsConstraintSystem ns_constraints(const Scenario& scenario) {
  const int n = scenario.coords();
  NsConstraintSystem sys{scenario, {}, {}};
  auto blank = [&] { return std::vector<Rational>(n, Rational(0)); };

  for (int x = 0; x < scenario.num_x(); ++x)
    for (int y = 0; y < scenario.num_y(); ++y) {
      auto row = blank();
      for (int a = 0; a < scenario.actions_a(x); ++a)
        for (int b = 0; b < scenario.actions_b(y); ++b)
          row[scenario.index(x, y, a, b)] = Rational(1);
      sys.eq.push_back(std::move(row));
      sys.rhs.push_back(Rational(1));
    }

  // Alice's marginal P(a|x) agrees across consecutive Bob types.
  for (int x = 0; x < scenario.num_x(); ++x)
    for (int a = 0; a < scenario.actions_a(x); ++a)
      for (int y = 0; y + 1 < scenario.num_y(); ++y) {
        auto row = blank();
        for (int b = 0; b < scenario.actions_b(y); ++b)
          row[scenario.index(x, y, a, b)] += Rational(1);
        for (int b = 0; b < scenario.actions_b(y + 1); ++b)
          row[scenario.index(x, y + 1, a, b)] -= Rational(1);
        sys.eq.push_back(std::move(row));
        sys.rhs.push_back(Rational(0));
      }

  // Bob's marginal P(b|y) agrees across consecutive Alice types.
  for (int y = 0; y < scenario.num_y(); ++y)
    for (int b = 0; b < scenario.actions_b(y); ++b)
      for (int x = 0; x + 1 < scenario.num_x(); ++x) {
        auto row = blank();
        for (int a = 0; a < scenario.actions_a(x); ++a)
          row[scenario.index(x, y, a, b)] += Rational(1);
        for (int a = 0; a < scenario.actions_a(x + 1); ++a)
          row[scenario.index(x + 1, y, a, b)] -= Rational(1);
        sys.eq.push_back(std::move(row));
        sys.rhs.push_back(Rational(0));
      }

  return sys;
}

std::vector<LocalStrategy> enumerate_local_strategies(const Scenario& scenario) {
  std::vector<LocalStrategy> out;
  std::vector<int> amap(scenario.num_x(), 0);
  do {
    std::vector<int> bmap(scenario.num_y(), 0);
    do {
      out.push_back({amap, bmap});
    } while (advance(bmap, scenario.bob_actions()));
  } while (advance(amap, scenario.alice_actions()));
  return out;
}

LocalityCertificate is_local(const Behavior& behavior, const QuadExt& tolerance) {
  ValidationReport report = validate_behavior(behavior, tolerance);
  if (!report.valid()) {
    std::string msg = "is_local: behavior fails validation";
    if (!report.issues.empty()) msg += ": " + report.issues.front().describe();
    throw std::invalid_argument(msg);
  }
  auto strategies = enumerate_local_strategies(behavior.scenario);
  auto out = mixture_lp<QuadExt>(behavior.scenario, strategies, behavior.p);
  if (out.status != LpStatus::optimal) return {};
  return {true, std::move(out.point)};
}

bool is_vertex(const Behavior& behavior) {
  const Scenario& sc = behavior.scenario;
  const int n = sc.coords();
  if (static_cast<int>(behavior.p.size()) != n)
    throw std::invalid_argument("is_vertex: behavior table has wrong length");
  for (const auto& v : behavior.p)
    if (v.sign() < 0)
      throw std::invalid_argument("is_vertex: behavior is not in the no-signaling polytope");
  NsConstraintSystem sys = ns_constraints(sc);
  for (size_t r = 0; r < sys.eq.size(); ++r) {
    QuadExt dot(0);
    for (int i = 0; i < n; ++i)
      if (sys.eq[r][i] != Rational(0)) dot += QuadExt(sys.eq[r][i]) * behavior.p[i];
    if (dot != QuadExt(sys.rhs[r]))
      throw std::invalid_argument("is_vertex: behavior is not in the no-signaling polytope");
  }
  // extreme iff the tight constraints pin the point: equalities plus the
  // active nonnegativity rows must reach full column rank
  std::vector<std::vector<Rational>> rows;
  rows.reserve(sys.eq.size() + behavior.p.size());
  for (auto& row : sys.eq) rows.push_back(std::move(row));
  for (int i = 0; i < n; ++i) {
    if (behavior.p[i] == QuadExt(0)) {
      std::vector<Rational> unit(n, Rational(0));
      unit[i] = Rational(1);
      rows.push_back(std::move(unit));
    }
  }
  return matrix_rank(std::move(rows), n) == n;
}

int VertexList::local_count() const {
  return static_cast<int>(std::count(classification.begin(), classification.end(), VertexClass::local));
}

int VertexList::nonlocal_count() const {
  return static_cast<int>(classification.size()) - local_count();
}

namespace {

using Ray = std::vector<Rational>;

Rational dot(const std::vector<Rational>& a, const Ray& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != Rational(0)) s += a[i] * b[i];
  return s;
}

// Positive scaling only: rays are directions, their sign is meaningful.
void canonicalize_ray(Ray& ray) {
  for (const Rational& v : ray) {
    if (v != Rational(0)) {
      Rational scale = v.abs();
      for (Rational& w : ray) w /= scale;
      return;
    }
  }
}

}  // namespace

VertexList enumerate_ns_vertices(const Scenario& scenario, const EnumerationOptions& options) {
  const int n = scenario.coords();
  if (n > options.max_coords)
    throw ScenarioTooLarge("enumerate_ns_vertices: scenario has " + std::to_string(n) +
                           " behavior coordinates, over the configured ceiling of " +
                           std::to_string(options.max_coords));
  if (n + 1 > 63)
    throw ScenarioTooLarge("enumerate_ns_vertices: scenario exceeds the 63-bit tight-set limit");

  // Homogenize {E p = f, p >= 0} to the cone {E p - f t = 0, (p, t) >= 0} and
  // work inside its solution space: x = W w with W's columns a nullspace basis
  // of [E | -f]. The cone in w-space is {w : M w >= 0} with M_i = row i of W.
  NsConstraintSystem sys = ns_constraints(scenario);
  std::vector<std::vector<Rational>> homogeneous;
  homogeneous.reserve(sys.eq.size());
  for (size_t r = 0; r < sys.eq.size(); ++r) {
    auto row = sys.eq[r];
    row.push_back(-sys.rhs[r]);
    homogeneous.push_back(std::move(row));
  }
  std::vector<std::vector<Rational>> basis = nullspace(std::move(homogeneous), n + 1);
  const int d = static_cast<int>(basis.size());

  std::vector<std::vector<Rational>> geom(n + 1, std::vector<Rational>(d));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i <= n; ++i) geom[i][k] = basis[k][i];

  // Initial simplicial cone from the lexicographically first d independent
  // rows; its extreme rays are the columns of the inverse of that block.
  std::vector<std::vector<Rational>> geom_t(d, std::vector<Rational>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k < d; ++k) geom_t[k][i] = geom[i][k];
  std::vector<int> seed_rows = row_echelon(geom_t, n + 1);
  if (static_cast<int>(seed_rows.size()) != d)
    throw std::logic_error("enumerate_ns_vertices: nullspace basis is rank deficient");

  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(2 * d, Rational(0)));
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) inv[r][k] = geom[seed_rows[r]][k];
    inv[r][d + r] = Rational(1);
  }
  if (static_cast<int>(row_echelon(inv, 2 * d).size()) != d)
    throw std::logic_error("enumerate_ns_vertices: seed block is singular");

  std::vector<Ray> rays(d, Ray(d));
  std::vector<uint64_t> masks(d, 0);
  uint64_t seed_mask = 0;
  for (int r : seed_rows) seed_mask |= uint64_t(1) << r;
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d; ++r) rays[j][r] = inv[r][d + j];
    canonicalize_ray(rays[j]);
    masks[j] = seed_mask & ~(uint64_t(1) << seed_rows[j]);
  }

  const ExecMode mode = options.mode;
  for (int r = 0; r <= n; ++r) {
    if (seed_mask & (uint64_t(1) << r)) continue;
    const uint64_t bit = uint64_t(1) << r;
    const long nrays = static_cast<long>(rays.size());

    std::vector<Rational> vals(nrays);
    std::vector<int> signs(nrays);
    parallel_for(nrays, mode, [&](long i) {
      vals[i] = dot(geom[r], rays[i]);
      signs[i] = vals[i].sign();
    });

    std::vector<std::pair<long, long>> candidates;
    for (long p = 0; p < nrays; ++p) {
      if (signs[p] <= 0) continue;
      for (long q = 0; q < nrays; ++q) {
        if (signs[q] >= 0) continue;
        uint64_t tight = masks[p] & masks[q];
        if (std::popcount(tight) >= d - 2) candidates.emplace_back(p, q);
      }
    }

    // Fukuda-Prodon combinatorial adjacency: the pair spans an edge iff no
    // third ray is tight on everything the pair shares.
    std::vector<char> adjacent(candidates.size(), 0);
    parallel_for(static_cast<long>(candidates.size()), mode, [&](long c) {
      auto [p, q] = candidates[c];
      const uint64_t tight = masks[p] & masks[q];
      for (long s = 0; s < nrays; ++s) {
        if (s == p || s == q) continue;
        if ((masks[s] & tight) == tight) return;
      }
      adjacent[c] = 1;
    });

    std::vector<Ray> born;
    std::vector<uint64_t> born_masks;
    for (size_t c = 0; c < candidates.size(); ++c) {
      if (!adjacent[c]) continue;
      auto [p, q] = candidates[c];
      Ray fresh(d);
      for (int k = 0; k < d; ++k) fresh[k] = vals[p] * rays[q][k] - vals[q] * rays[p][k];
      canonicalize_ray(fresh);
      born.push_back(std::move(fresh));
      born_masks.push_back((masks[p] & masks[q]) | bit);
    }

    std::vector<Ray> next;
    std::vector<uint64_t> next_masks;
    for (long i = 0; i < nrays; ++i) {
      if (signs[i] < 0) continue;
      next.push_back(std::move(rays[i]));
      next_masks.push_back(signs[i] == 0 ? (masks[i] | bit) : masks[i]);
    }
    for (size_t c = 0; c < born.size(); ++c) {
      next.push_back(std::move(born[c]));
      next_masks.push_back(born_masks[c]);
    }
    rays = std::move(next);
    masks = std::move(next_masks);
  }

  // Back to behavior space; the polytope is bounded, so every extreme ray
  // must pierce the t = 1 slice.
  std::vector<std::vector<Rational>> points;
  points.reserve(rays.size());
  for (const Ray& ray : rays) {
    Rational t = dot(geom[n], ray);
    if (t.sign() <= 0)
      throw std::logic_error("enumerate_ns_vertices: unbounded direction in a bounded polytope");
    std::vector<Rational> pt(n);
    for (int i = 0; i < n; ++i) pt[i] = dot(geom[i], ray) / t;
    points.push_back(std::move(pt));
  }
  std::sort(points.begin(), points.end());

  VertexList out;
  out.vertices.reserve(points.size());
  for (auto& pt : points) {
    Behavior beh{scenario, {}};
    beh.p.reserve(n);
    for (auto& v : pt) beh.p.emplace_back(std::move(v));
    out.vertices.push_back(std::move(beh));
  }

  auto strategies = enumerate_local_strategies(scenario);
  out.classification.assign(out.vertices.size(), VertexClass::nonlocal);
  parallel_for(static_cast<long>(out.vertices.size()), mode, [&](long i) {
    std::vector<Rational> coords;
    coords.reserve(n);
    for (const auto& v : out.vertices[i].p) coords.push_back(v.rat);
    if (mixture_lp<Rational>(scenario, strategies, coords).status == LpStatus::optimal)
      out.classification[i] = VertexClass::local;
  });
  return out;
}

}  // namespace nlgames
