#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shellforge/complex.hpp"
#include "shellforge/io.hpp"
#include "shellforge/shelling.hpp"

namespace shellforge::harness {

inline constexpr std::string_view kToolVersion = "shellforge 1.0.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kParseError = 2,
  kPrecondition = 3,
  kUnshellable = 4,
  kInconclusive = 5,
};

/// Clutter whose facets are selected by bit i of `mask` from `pool`.
Clutter clutter_from_mask(int n, int k, std::span<const Face> pool, std::uint64_t mask);

/// Lexicographically least relabelling of c over all vertex permutations.
/// Intended for n <= 8.
Clutter canonical_form(const Clutter& c);

/// Shellability predicted through the graph dictionary: for k = n - 2 the
/// clutter is shellable iff K_n minus the edges V \ F is chordal.
bool shellable_by_chordal_complement(const Clutter& c);

struct TheoremRun {
  int dim = 0;
  std::uint64_t clutters = 0;        // nonempty clutters on dim+3 vertices
  std::uint64_t shellable = 0;
  std::uint64_t extendable = 0;
  std::uint64_t small_cases = 0;     // nonempty clutters on dim+1 or dim+2 vertices
  std::uint64_t criterion_mismatches = 0;
  std::uint64_t violations = 0;
  std::optional<Clutter> offending;
};

/// Exhaustive check that every shellable pure dim-clutter on at most
/// dim+3 vertices is extendably shellable, with shellability cross-checked
/// against the chordal-complement criterion. Requires 1 <= dim <= 3.
TheoremRun verify_theorem(int dim);

struct SharpnessOptions {
  double budget_seconds = 900.0;
  std::uint64_t seed = 1;
  SearchBudget per_clutter{std::uint64_t{1} << 22, 0.0};
};

struct SharpnessRun {
  bool found = false;
  bool revalidated = false;
  std::uint64_t candidates = 0;       // random clutters drawn
  std::uint64_t classes = 0;          // distinct isomorphism classes examined
  std::uint64_t shellable = 0;
  std::optional<Clutter> witness;
  ShellingOrder stuck_order;
};

/// Seeded search over pure 2-clutters on 6 vertices for one that is
/// shellable but not extendably shellable.
SharpnessRun search_sharpness(const SharpnessOptions& options);

struct SimonRun {
  int n = 0;
  int dim = 0;
  std::uint64_t facets = 0;
  ExtendabilityCertificate certificate;
};

SimonRun check_skeleton(int n, int dim, const SearchBudget& budget = {});

io::Report report_for(const TheoremRun& run);
io::Report report_for(const SharpnessRun& run, const SharpnessOptions& options);
io::Report report_for(const SimonRun& run);

}  // namespace shellforge::harness
