#include "shellforge/shelling.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <string>
#include <unordered_map>

#include "shellforge/erasure.hpp"
#include "shellforge/errors.hpp"

namespace shellforge {

namespace {

using FacetSet = std::uint64_t;

constexpr int kMaxFacets = 64;

FacetSet all_facets(std::size_t m) { return low_bits(static_cast<int>(m)); }

void require_searchable(const Clutter& c) {
  if (c.size() > kMaxFacets) throw ArgumentError("search supports at most 64 facets");
}

// Placed-facet buffer plus the addable test for one clutter.
class Stepper {
 public:
  explicit Stepper(const Clutter& c) : facets_(c.facets()) {}

  FacetSet addable(FacetSet chosen) {
    std::size_t count = 0;
    for_each_bit(chosen, [&](int i) { placed_[count++] = facets_[static_cast<std::size_t>(i)]; });
    std::span<const Face> placed(placed_.data(), count);
    FacetSet out = 0;
    for_each_bit(all_facets(facets_.size()) & ~chosen, [&](int i) {
      if (shelling_step_over(placed, facets_[static_cast<std::size_t>(i)])) out |= bit(i);
    });
    return out;
  }

  std::size_t size() const { return facets_.size(); }
  Face facet(int i) const { return facets_[static_cast<std::size_t>(i)]; }

 private:
  std::span<const Face> facets_;
  std::array<Face, kMaxFacets> placed_{};
};

class Clock {
 public:
  explicit Clock(const SearchBudget& budget) : budget_(budget) {}

  // Counts one state and reports whether the budget still allows more.
  bool tick() {
    ++states_;
    if (budget_.max_states != 0 && states_ > budget_.max_states) return false;
    if (budget_.max_seconds > 0.0 && (states_ & 0x3FF) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) return false;
    }
    return true;
  }

  std::uint64_t states() const { return states_; }

 private:
  SearchBudget budget_;
  std::uint64_t states_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Set of facet sets with a per-state byte. A flat table while it fits in
// 16 MiB, a hash map beyond that.
class StateTable {
 public:
  static constexpr std::uint8_t kAbsent = 0xFF;

  explicit StateTable(std::size_t facet_count) {
    if (facet_count <= 24) flat_.assign(std::size_t{1} << facet_count, kAbsent);
  }

  std::uint8_t get(FacetSet s) const {
    if (!flat_.empty()) return flat_[s];
    auto it = map_.find(s);
    return it == map_.end() ? kAbsent : it->second;
  }

  void put(FacetSet s, std::uint8_t value) {
    if (!flat_.empty()) {
      flat_[s] = value;
    } else {
      map_[s] = value;
    }
  }

 private:
  std::vector<std::uint8_t> flat_;
  std::unordered_map<FacetSet, std::uint8_t> map_;
};

// Depth-first completion of `chosen`, memoizing facet sets with no
// completion. Appends the completing facets to `order` on success.
class Completer {
 public:
  Completer(const Clutter& c, const SearchBudget& budget)
      : stepper_(c), clock_(budget), dead_(c.size()), full_(all_facets(c.size())) {}

  bool complete(FacetSet chosen, ShellingOrder& order) {
    if (chosen == full_) return true;
    if (dead_.get(chosen) != StateTable::kAbsent) return false;
    if (!clock_.tick()) throw BudgetExhausted("shelling search exceeded its budget");
    FacetSet next = chosen == 0 ? full_ : stepper_.addable(chosen);
    for (; next != 0; next &= next - 1) {
      int i = std::countr_zero(next);
      order.push_back(stepper_.facet(i));
      if (complete(chosen | bit(i), order)) return true;
      order.pop_back();
    }
    dead_.put(chosen, 1);
    return false;
  }

 private:
  Stepper stepper_;
  Clock clock_;
  StateTable dead_;
  FacetSet full_;
};

}  // namespace

ShellingState ShellingState::from_order(const Clutter& c, ShellingOrder order) {
  require_searchable(c);
  ShellingState state{c, 0, std::move(order)};
  for (Face f : state.order) {
    int i = c.index_of(f);
    if (i < 0) throw ArgumentError("partial shelling uses a face that is not a facet");
    if (contains(state.chosen, i)) throw ArgumentError("partial shelling repeats a facet");
    state.chosen |= bit(i);
  }
  if (!is_shelling_order(state.order, c.vertex_count(), c.facet_size())) {
    throw ArgumentError("partial order is not a shelling");
  }
  return state;
}

std::vector<Face> addable_facets(const ShellingState& state) {
  if (state.chosen == 0) throw ArgumentError("addable_facets needs at least one placed facet");
  require_searchable(state.clutter);
  Stepper stepper(state.clutter);
  std::vector<Face> out;
  for_each_bit(stepper.addable(state.chosen), [&](int i) { out.push_back(stepper.facet(i)); });
  return out;
}

std::optional<ShellingOrder> find_shelling(const Clutter& c, const SearchBudget& budget) {
  if (c.empty()) throw ArgumentError("cannot shell an empty clutter");
  require_searchable(c);
  ShellingOrder order;
  order.reserve(c.size());
  Completer completer(c, budget);
  if (!completer.complete(0, order)) return std::nullopt;
  return order;
}

std::optional<ShellingOrder> extend_shelling_generic(const Clutter& c, const ShellingOrder& partial,
                                                     const SearchBudget& budget) {
  ShellingState state = ShellingState::from_order(c, partial);
  ShellingOrder order = state.order;
  Completer completer(c, budget);
  if (!completer.complete(state.chosen, order)) return std::nullopt;
  return order;
}

ShellingOrder extend_shelling_theorem_route(const Clutter& c, const ShellingOrder& partial) {
  const int n = c.vertex_count();
  const int k = c.facet_size();
  if (n > k + 2) throw ArgumentError("graph route needs at most k + 2 vertices");
  ShellingState state = ShellingState::from_order(c, partial);
  ShellingOrder order = state.order;

  if (n <= k + 1 || c.size() <= 1) {
    // Any two distinct k-sets on k+1 vertices share a ridge, so every
    // ordering is a shelling.
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!contains(state.chosen, static_cast<int>(i))) order.push_back(c.facets()[i]);
    }
  } else {
    // Facet F <-> edge V \ F. The target clutter and the placed facets each
    // remove their edges from K_n; both results are chordal, the target
    // inside the placed one, and exposed removals between them complete
    // the shelling.
    const Graph everything = Graph::complete(n);
    Graph target = everything;
    Graph placed = everything;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Face ends = low_bits(n) & ~c.facets()[i];
      Edge e(std::countr_zero(ends), 63 - std::countl_zero(ends));
      target = target.without_edge(e);
      if (contains(state.chosen, static_cast<int>(i))) placed = placed.without_edge(e);
    }
    if (!is_chordal(target)) throw ArgumentError("clutter is not shellable");
    if (!is_chordal(placed)) throw InvariantViolation("valid partial shelling gave a non-chordal graph");
    for (const Edge& e : erasure_sequence_between(placed, target).edges) {
      order.push_back(low_bits(n) & ~e.mask());
    }
  }
  if (order.size() != c.size() || !is_shelling_order(order, n, k)) {
    throw InvariantViolation("graph route produced an invalid shelling");
  }
  return order;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Extendable: return "extendable";
    case Verdict::Stuck: return "stuck";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

ExtendabilityCertificate is_extendably_shellable(const Clutter& c, const SearchBudget& budget) {
  ExtendabilityCertificate cert;
  std::optional<ShellingOrder> full;
  try {
    full = find_shelling(c, budget);
  } catch (const BudgetExhausted&) {
    return cert;
  }
  if (!full) throw ArgumentError("clutter is not shellable");

  Stepper stepper(c);
  Clock clock(budget);
  const FacetSet everything = all_facets(c.size());
  // Reachable facet sets, each tagged with the facet placed last on the
  // path that first reached it.
  StateTable reached(c.size());
  std::vector<FacetSet> stack;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    reached.put(bit(i), static_cast<std::uint8_t>(i));
    stack.push_back(bit(i));
  }
  while (!stack.empty()) {
    FacetSet s = stack.back();
    stack.pop_back();
    if (!clock.tick()) {
      cert.states_explored = clock.states();
      return cert;
    }
    if (s == everything) continue;
    FacetSet next = stepper.addable(s);
    if (next == 0) {
      cert.verdict = Verdict::Stuck;
      for (FacetSet t = s; t != 0;) {
        int last = reached.get(t);
        cert.order.push_back(stepper.facet(last));
        t &= ~bit(last);
      }
      std::reverse(cert.order.begin(), cert.order.end());
      cert.states_explored = clock.states();
      return cert;
    }
    // Push in reverse so the lowest facet index is explored first.
    for (int i = 63 - std::countl_zero(next); next != 0; i = 63 - std::countl_zero(next)) {
      next &= ~bit(i);
      FacetSet t = s | bit(i);
      if (reached.get(t) == StateTable::kAbsent) {
        reached.put(t, static_cast<std::uint8_t>(i));
        stack.push_back(t);
      }
    }
  }
  cert.verdict = Verdict::Extendable;
  cert.order = std::move(*full);
  cert.states_explored = clock.states();
  return cert;
}

bool validate_stuck_certificate(const Clutter& c, const ShellingOrder& order) {
  if (order.empty() || order.size() >= c.size()) return false;
  std::vector<Face> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Face f : order) {
    if (!c.has_facet(f)) return false;
  }
  if (!is_shelling_order(order, c.vertex_count(), c.facet_size())) return false;
  for (Face f : c.facets()) {
    if (std::binary_search(sorted.begin(), sorted.end(), f)) continue;
    if (shelling_step_by_enumeration(Clutter(c.vertex_count(), c.facet_size(), sorted), f)) {
      return false;
    }
  }
  return true;
}

Clutter skeleton_clutter(int n, int dim) {
  if (n < 1 || n > kMaxVertices || dim + 1 < 1 || dim + 1 > n) {
    throw ArgumentError("skeleton needs 1 <= dim + 1 <= n <= 64");
  }
  const int size = dim + 1;
  std::vector<Face> facets;
  // Gosper's hack over all size-subsets of {0..n-1}.
  Face f = low_bits(size);
  const Face limit = low_bits(n);
  while (true) {
    facets.push_back(f);
    Face lowest = f & (~f + 1);
    Face ripple = f + lowest;
    if (ripple == 0 || (ripple & ~limit) != 0) break;
    f = (((ripple ^ f) >> 2) / lowest) | ripple;
    if ((f & ~limit) != 0) break;
  }
  return Clutter(n, size, std::move(facets));
}

}  // namespace shellforge
