#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdm/equiv.hpp"
#include "pdm/formula.hpp"
#include "pdm/sop.hpp"
#include "pdm/table.hpp"

namespace pdm {

struct process_spec {
  std::string name;
  std::set<std::string> atoms;
};

/// Disjoint distribution of the alphabet over named processes.
struct topology {
  std::vector<process_spec> procs;

  std::set<std::string> all_atoms() const;
  /// Index of the process observing `atom`, or nullopt.
  std::optional<std::size_t> owner(const std::string& atom) const;
};

/// Parse "A:a1,a2;B:b;C:c". Throws parse_error on malformed input and
/// incomplete_topology when an atom is claimed twice.
topology parse_topology(const std::string& text);

/// Every variable of `f` must be observed by some process.
void validate_topology(const topology& t, const formula& f);

/// Fully observed run: every step assigns every alphabet atom.
struct trace {
  std::vector<std::string> atoms;  // sorted
  std::vector<std::map<std::string, bool>> steps;
};

enum class verdict { inconclusive, satisfied, violated };

const char* to_string(verdict v);

struct plan_options {
  count_mode counting = count_mode::step_only;
  std::size_t cap = default_variable_cap;
};

/// Everything computed ahead of a run: interchangeability classes, the
/// reduced formula's weights lifted back to all variables, per-result
/// configuration descriptions, per-process influence factors, and the
/// communication ring ordered by descending factor (ties by name).
struct monitor_plan {
  formula property;
  topology topo;
  count_mode counting = count_mode::step_only;
  reduction red;
  weight_set reduced_weights;
  extended_weights weights;
  std::vector<extended_sop> sops;
  std::map<std::string, rational> factors;
  std::vector<std::string> ring;
};

monitor_plan make_plan(const formula& f, const topology& t,
                       const plan_options& opts = {});

struct monitor_stats {
  std::size_t msg_count = 0;
  std::size_t msg_bits = 0;
  std::size_t mem_bits_peak = 0;
  std::size_t steps_consumed = 0;
};

struct monitor_outcome {
  verdict v = verdict::inconclusive;
  std::optional<std::size_t> at_step;  // 0-based round where decided
  formula residual;                    // obligation left when the run ended
  monitor_stats stats;
};

/// Reference semantics: progress the formula with the full step values,
/// verdict on the first constant.
monitor_outcome run_centralized(const formula& f, const trace& tr);

/// Ring-relayed decentralized run. Each process forwards step-stamped
/// observations around the ring, progresses the shared obligation once a
/// step can no longer bring new information, selects what to send through
/// the per-result descriptions when that is provably enough, and checks
/// partial views for early verdicts. After the trace, relay-only rounds
/// let in-flight values finish circulating.
monitor_outcome run_decentralized(const formula& f, const topology& t,
                                  const trace& tr,
                                  const plan_options& opts = {});

/// Naive comparison run: one property copy per process circulates on a
/// name-ordered ring. Each holder resolves its own stamped atoms,
/// progresses on its local view, then hands the whole copy to its
/// successor; verdicts come from whichever copy reaches a constant first.
monitor_outcome run_baseline(const formula& f, const topology& t,
                             const trace& tr);

}  // namespace pdm
