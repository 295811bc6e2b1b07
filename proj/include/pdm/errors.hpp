#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Input text could not be parsed. Positions are 1-based.
class parse_error : public std::runtime_error {
public:
  parse_error(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg) + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

/// The formula has more variables than the table builder is willing to
/// enumerate (3^n rows grow fast).
class variable_cap_exceeded : public std::runtime_error {
public:
  variable_cap_exceeded(std::size_t vars, std::size_t cap)
      : std::runtime_error("formula has " + std::to_string(vars) +
                           " variables, cap is " + std::to_string(cap)),
        vars_(vars),
        cap_(cap) {}

  std::size_t vars() const { return vars_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t vars_;
  std::size_t cap_;
};

/// A named variable does not occur in the formula or table at hand.
class unknown_variable : public std::runtime_error {
public:
  explicit unknown_variable(const std::string& name)
      : std::runtime_error("unknown variable: " + name) {}
};

/// A requested result formula is not produced by any table row.
class target_not_in_table : public std::runtime_error {
public:
  explicit target_not_in_table(const std::string& text)
      : std::runtime_error("no table row yields: " + text) {}
};

/// An operation mixed artifacts built under different counting modes.
class mode_mismatch : public std::runtime_error {
public:
  mode_mismatch() : std::runtime_error("counting modes differ") {}
};

/// Extension was asked to undo a reduction that never happened.
class not_a_reduced_target : public std::runtime_error {
public:
  explicit not_a_reduced_target(const std::string& what)
      : std::runtime_error("not produced by reduction: " + what) {}
};

/// The process topology does not cover every variable of the formula.
class incomplete_topology : public std::runtime_error {
public:
  explicit incomplete_topology(const std::string& detail)
      : std::runtime_error("incomplete topology: " + detail) {}
};

/// A trace refers to variables outside the declared alphabet.
class alphabet_mismatch : public std::runtime_error {
public:
  explicit alphabet_mismatch(const std::string& detail)
      : std::runtime_error("alphabet mismatch: " + detail) {}
};

}  // namespace pdm
