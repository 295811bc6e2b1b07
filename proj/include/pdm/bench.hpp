#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdm/monitor.hpp"
#include "pdm/table.hpp"

namespace pdm {

// One experiment: `count` runs of a single pattern class, each run pairing
// the ring monitor and the formula-passing baseline on identical inputs.
struct bench_config {
  std::string pattern_class;
  std::size_t count = 200;
  std::size_t procs = 3;
  std::size_t trace_len = 50;
  std::uint64_t seed = 1;
  count_mode counting = count_mode::step_only;
};

struct bench_row {
  std::string pattern_class;
  std::size_t count = 0;
  double pdm_trace = 0, pdm_msgs = 0, pdm_msg_bits = 0, pdm_mem_bits = 0;
  double bf_trace = 0, bf_msgs = 0, bf_msg_bits = 0, bf_mem_bits = 0;
};

struct bench_report {
  std::vector<bench_row> rows;
  std::string to_text() const;
  std::string to_csv() const;
};

// P processes named A, B, ... each observing two private atoms x1..x2P.
topology bench_topology(std::size_t procs);

// Instantiates one template of the class over distinct atoms drawn from
// the topology's union alphabet; deterministic per seed.
formula gen_pattern(const std::string& pattern_class, const topology& topo,
                    std::uint64_t seed);

bench_row run_bench_class(const bench_config& cfg);
bench_report run_bench(const std::vector<bench_config>& cfgs);

}  // namespace pdm
