#pragma once

// Decision procedures for shellability and extendable shellability.
//
// Search states are sets of facets rather than orders. Whether a facet can
// be added next depends only on the complex generated by the facets already
// placed, and that complex does not depend on the order they were placed
// in. So two partial shellings with the same facet set have the same
// futures, and memoizing on the set collapses the factorially many orders
// into at most 2^m states for m facets.
//
// Extendability reduces to a reachability question. A facet set S is
// reachable when some order of S is a shelling. Every shelling of a
// subcomplex reaches its facet set, and every reachable S with an addable
// facet f reaches S + f. Hence:
//
//   the complex is extendably shellable
//     iff no reachable proper facet set has an empty set of addable facets.
//
// (=>) a reachable stuck set is a partial shelling with no extension.
// (<=) starting from any partial shelling, keep adding an addable facet;
//      every intermediate set is reachable and proper sets are never stuck,
//      so the process ends at the full facet set.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "shellforge/complex.hpp"

namespace shellforge {

using ShellingOrder = std::vector<Face>;

/// Limits for the exhaustive searches. Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_states = std::uint64_t{1} << 28;
  double max_seconds = 0.0;
};

/// A partial shelling of a clutter: the facets placed so far and one order
/// that witnesses them.
struct ShellingState {
  Clutter clutter;
  /// Bit i set iff clutter.facets()[i] has been placed. Clutters searched by
  /// the engine have at most 64 facets.
  std::uint64_t chosen = 0;
  ShellingOrder order;

  /// Throws ArgumentError unless `order` is a valid shelling of facets of c.
  static ShellingState from_order(const Clutter& c, ShellingOrder order);
};

/// Facets outside `chosen` that are shelling steps over the placed complex.
/// Depends only on the chosen set. Requires a nonempty chosen set.
std::vector<Face> addable_facets(const ShellingState& state);

/// A full shelling order of c, or nullopt when c is not shellable.
/// Throws BudgetExhausted when the budget runs out first.
std::optional<ShellingOrder> find_shelling(const Clutter& c, const SearchBudget& budget = {});

/// A full shelling of c that starts with `partial`, or nullopt when none
/// exists. Throws ArgumentError when partial is not a shelling of facets of c.
std::optional<ShellingOrder> extend_shelling_generic(const Clutter& c, const ShellingOrder& partial,
                                                     const SearchBudget& budget = {});

/// Completes `partial` without search, for clutters on at most k+2
/// vertices. With k+2 vertices, placed facets and the target clutter map to
/// two nested chordal graphs through V \ F, and exposed-edge removals
/// between them map back to shelling steps. Throws ArgumentError on a
/// precondition failure and InvariantViolation if completion fails.
ShellingOrder extend_shelling_theorem_route(const Clutter& c, const ShellingOrder& partial);

enum class Verdict { Extendable, Stuck, Inconclusive };

std::string_view to_string(Verdict v);

struct ExtendabilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  /// Stuck: a partial shelling with no addable facet.
  /// Extendable: one full shelling of the clutter.
  ShellingOrder order;
  std::uint64_t states_explored = 0;
};

/// Explores every reachable facet set. Throws ArgumentError when c is not
/// shellable. Budget exhaustion gives Verdict::Inconclusive.
ExtendabilityCertificate is_extendably_shellable(const Clutter& c, const SearchBudget& budget = {});

/// Re-checks a Stuck certificate from scratch: the order is a valid
/// shelling of a proper subset of c's facets and no remaining facet is a
/// step over it.
bool validate_stuck_certificate(const Clutter& c, const ShellingOrder& order);

/// The dim-skeleton of the simplex on n vertices: all (dim+1)-subsets of
/// {0..n-1}. Requires 1 <= dim+1 <= n.
Clutter skeleton_clutter(int n, int dim);

}  // namespace shellforge
