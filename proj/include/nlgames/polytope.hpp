#pragma once
// No-signaling polytope machinery: the H-representation builder, local
// strategy enumeration, local-polytope membership (V-representation LP),
// vertex certification, and full vertex enumeration via double description.

#include <stdexcept>
#include <string>
#include <vector>

#include "nlgames/model.hpp"
#include "nlgames/parallel.hpp"

namespace nlgames {

// Equality rows over behavior coordinates: one normalization per block plus
// the marginal equalities for consecutive type pairs. Nonnegativity of every
// coordinate is implied and not materialized.
struct NsConstraintSystem {
  Scenario scenario;
  std::vector<std::vector<Rational>> eq;
  std::vector<Rational> rhs;
};

NsConstraintSystem ns_constraints(const Scenario& scenario);

struct LocalStrategy {
  std::vector<int> alice_map;
  std::vector<int> bob_map;
};

// All deterministic strategy pairs, lexicographic in (alice_map, bob_map).
std::vector<LocalStrategy> enumerate_local_strategies(const Scenario& scenario);

struct LocalityCertificate {
  bool local = false;
  // convex weights over enumerate_local_strategies order; exact remix of the
  // behavior when local
  std::vector<QuadExt> weights;
};

// Membership in the local polytope, decided by an exact feasibility LP over
// the deterministic behaviors. The behavior must validate within `tolerance`.
LocalityCertificate is_local(const Behavior& behavior, const QuadExt& tolerance = QuadExt(0));

// True iff the equalities plus the tight nonnegativity rows at the behavior
// have full rank. Requires exact membership in the polytope.
bool is_vertex(const Behavior& behavior);

class ScenarioTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VertexClass { local, nonlocal };

struct VertexList {
  std::vector<Behavior> vertices;  // lexicographic by coordinate vector
  std::vector<VertexClass> classification;

  int local_count() const;
  int nonlocal_count() const;
};

struct EnumerationOptions {
  int max_coords = 32;  // refuse scenarios with more behavior coordinates
  ExecMode mode = ExecMode::parallel;
};

// Complete extreme-point list of the no-signaling polytope (double
// description over exact rationals), each vertex classified via is_local.
VertexList enumerate_ns_vertices(const Scenario& scenario, const EnumerationOptions& options = {});

}  // namespace nlgames
