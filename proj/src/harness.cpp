#include "shellforge/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <unordered_set>

#include "shellforge/errors.hpp"

namespace shellforge::harness {

Clutter clutter_from_mask(int n, int k, std::span<const Face> pool, std::uint64_t mask) {
  std::vector<Face> facets;
  for_each_bit(mask, [&](int i) { facets.push_back(pool[static_cast<std::size_t>(i)]); });
  return Clutter(n, k, std::move(facets));
}

Clutter canonical_form(const Clutter& c) {
  const int n = c.vertex_count();
  if (n > 10) throw ArgumentError("canonical_form is limited to n <= 10");
  std::array<int, 10> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::vector<Face> best(c.facets().begin(), c.facets().end());
  std::vector<Face> image(c.size());
  do {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Face mapped = 0;
      for_each_bit(c.facets()[i], [&](int v) { mapped |= bit(perm[static_cast<std::size_t>(v)]); });
      image[i] = mapped;
    }
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return Clutter(n, c.facet_size(), std::move(best));
}

bool shellable_by_chordal_complement(const Clutter& c) {
  if (c.vertex_count() < 3 || c.facet_size() != c.vertex_count() - 2) {
    throw ArgumentError("chordal criterion needs facets of size n - 2");
  }
  if (c.empty()) throw ArgumentError("empty clutter");
  Graph removed = graph_from_clutter(c);
  return is_chordal(complement(removed));
}

TheoremRun verify_theorem(int dim) {
  if (dim < 1 || dim > 3) throw ArgumentError("verify-theorem supports dimensions 1, 2 and 3");
  TheoremRun run;
  run.dim = dim;
  const int k = dim + 1;

  auto record_violation = [&](const Clutter& c) {
    ++run.violations;
    if (!run.offending) run.offending = c;
  };

  const int n = dim + 3;
  const Clutter pool = skeleton_clutter(n, dim);
  const std::uint64_t limit = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Clutter c = clutter_from_mask(n, k, pool.facets(), mask);
    ++run.clutters;
    const bool shellable = find_shelling(c).has_value();
    if (shellable != shellable_by_chordal_complement(c)) {
      ++run.criterion_mismatches;
      record_violation(c);
    }
    if (!shellable) continue;
    ++run.shellable;
    if (is_extendably_shellable(c).verdict == Verdict::Extendable) {
      ++run.extendable;
    } else {
      record_violation(c);
    }
  }

  for (int small = dim + 1; small <= dim + 2; ++small) {
    const Clutter small_pool = skeleton_clutter(small, dim);
    const std::uint64_t small_limit = std::uint64_t{1} << small_pool.size();
    for (std::uint64_t mask = 1; mask < small_limit; ++mask) {
      Clutter c = clutter_from_mask(small, k, small_pool.facets(), mask);
      ++run.small_cases;
      if (!find_shelling(c)) continue;
      if (is_extendably_shellable(c).verdict != Verdict::Extendable) record_violation(c);
    }
  }
  return run;
}

SharpnessRun search_sharpness(const SharpnessOptions& options) {
  constexpr int kVertices = 6;
  constexpr int kFacetSize = 3;
  const Clutter pool = skeleton_clutter(kVertices, kFacetSize - 1);
  const std::uint64_t all = low_bits(static_cast<int>(pool.size()));

  SharpnessRun run;
  std::mt19937_64 rng(options.seed);
  std::unordered_set<std::uint64_t> seen;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() >= options.budget_seconds;
  };

  while (!out_of_time()) {
    const std::uint64_t mask = rng() & all;
    ++run.candidates;
    if (mask == 0) continue;
    Clutter c = clutter_from_mask(kVertices, kFacetSize, pool.facets(), mask);
    Clutter canon = canonical_form(c);
    std::uint64_t key = 0;
    for (Face f : canon.facets()) key |= bit(pool.index_of(f));
    if (!seen.insert(key).second) continue;
    ++run.classes;

    std::optional<ShellingOrder> shelling;
    try {
      shelling = find_shelling(c, options.per_clutter);
    } catch (const BudgetExhausted&) {
      continue;
    }
    if (!shelling) continue;
    ++run.shellable;
    ExtendabilityCertificate cert = is_extendably_shellable(c, options.per_clutter);
    if (cert.verdict != Verdict::Stuck) continue;

    run.found = true;
    run.witness = c;
    run.stuck_order = cert.order;
    // Independent re-check: a fresh exploration and a from-scratch
    // validation of the stuck order.
    run.revalidated = validate_stuck_certificate(c, cert.order) &&
                      is_extendably_shellable(c).verdict == Verdict::Stuck;
    break;
  }
  return run;
}

SimonRun check_skeleton(int n, int dim, const SearchBudget& budget) {
  SimonRun run;
  run.n = n;
  run.dim = dim;
  Clutter c = skeleton_clutter(n, dim);
  run.facets = c.size();
  run.certificate = is_extendably_shellable(c, budget);
  return run;
}

io::Report report_for(const TheoremRun& run) {
  io::Report r;
  r.set("command", "verify-theorem");
  r.set("version", std::string(kToolVersion));
  r.set("dim", static_cast<std::uint64_t>(run.dim));
  r.set("vertices", static_cast<std::uint64_t>(run.dim + 3));
  r.set("clutters", run.clutters);
  r.set("shellable", run.shellable);
  r.set("unshellable", run.clutters - run.shellable);
  r.set("extendable", run.extendable);
  r.set("small_cases", run.small_cases);
  r.set("criterion_mismatches", run.criterion_mismatches);
  r.set("violations", run.violations);
  return r;
}

io::Report report_for(const SharpnessRun& run, const SharpnessOptions& options) {
  io::Report r;
  r.set("command", "sharpness");
  r.set("version", std::string(kToolVersion));
  r.set("seed", options.seed);
  r.set("candidates", run.candidates);
  r.set("classes", run.classes);
  r.set("shellable", run.shellable);
  r.set("verdict", run.found ? "stuck" : "inconclusive");
  if (run.found) {
    r.set("witness_facets", static_cast<std::uint64_t>(run.witness->size()));
    r.set("stuck_length", static_cast<std::uint64_t>(run.stuck_order.size()));
    r.set("witness_digest", io::digest(io::format_complex(*run.witness)));
    r.set("revalidated", run.revalidated ? "yes" : "no");
  }
  return r;
}

io::Report report_for(const SimonRun& run) {
  io::Report r;
  r.set("command", "simon");
  r.set("version", std::string(kToolVersion));
  r.set("n", static_cast<std::uint64_t>(run.n));
  r.set("k", static_cast<std::uint64_t>(run.dim));
  r.set("facets", run.facets);
  r.set("states", run.certificate.states_explored);
  r.set("verdict", std::string(to_string(run.certificate.verdict)));
  return r;
}

}  // namespace shellforge::harness
