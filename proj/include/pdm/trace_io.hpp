#pragma once

#include <iosfwd>
#include <string>

#include "pdm/monitor.hpp"

namespace pdm {

/// Read a trace from JSON-lines text: one JSON object per non-empty line,
/// atom name to boolean. Every line must assign exactly the same atom set.
/// Throws parse_error (with the offending line) on malformed input.
trace read_trace_jsonl(std::istream& in);
trace read_trace_jsonl_file(const std::string& path);

std::string trace_to_jsonl(const trace& tr);

/// Plan rendering used by the command-line tool: classes, weights,
/// factors, ring and per-result descriptions, as a JSON object.
std::string plan_to_json(const monitor_plan& p);

/// Human-oriented multi-line rendering of the same plan.
std::string plan_to_text(const monitor_plan& p);

}  // namespace pdm
