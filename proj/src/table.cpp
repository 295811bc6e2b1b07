#include "pdm/table.hpp"

#include <numeric>
#include <stdexcept>

#include "pdm/errors.hpp"
#include "pdm/rewrite.hpp"

namespace pdm {

rational::rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

rational operator+(const rational& a, const rational& b) {
  return rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

rational operator*(const rational& a, const rational& b) {
  return rational(a.num * b.num, a.den * b.den);
}

bool operator<(const rational& a, const rational& b) {
  return a.num * b.den < b.num * a.den;
}

rational pow(const rational& base, unsigned exp) {
  rational out = rational::integer(1);
  for (unsigned i = 0; i < exp; ++i) out = out * base;
  return out;
}

assignment analysis_table::row_assignment(std::size_t i) const {
  assignment a;
  const table_row& r = rows.at(i);
  for (std::size_t j = 0; j < vars.size(); ++j) a[vars[j]] = r.values[j];
  return a;
}

namespace {

constexpr truth3 value_order[3] = {truth3::unknown, truth3::bot, truth3::top};

std::size_t pow3(std::size_t k) {
  std::size_t out = 1;
  while (k--) out *= 3;
  return out;
}

}  // namespace

analysis_table build_table(const formula& f, table_mode mode, std::size_t cap,
                           const std::optional<std::set<std::string>>& subset) {
  std::set<std::string> all = f.props();
  std::vector<std::string> vars;
  if (subset) {
    for (const std::string& v : *subset) {
      if (!all.count(v)) throw unknown_variable(v);
      vars.push_back(v);
    }
  } else {
    vars.assign(all.begin(), all.end());
  }
  if (vars.size() > cap) throw variable_cap_exceeded(vars.size(), cap);

  analysis_table t;
  t.mode = mode;
  t.source = f;
  t.vars = vars;

  const formula base = mode == table_mode::progression ? expand_step(f) : f;
  const std::size_t n = vars.size();
  const std::size_t total = pow3(n);
  t.rows.reserve(total);

  std::vector<std::size_t> digits(n, 0);
  for (std::size_t i = 0; i < total; ++i) {
    table_row row;
    row.values.resize(n);
    assignment a;
    for (std::size_t j = 0; j < n; ++j) {
      row.values[j] = value_order[digits[j]];
      if (row.values[j] != truth3::unknown) a[vars[j]] = row.values[j];
    }
    row.result = mode == table_mode::progression
                     ? substitute_outside_next(base, a)
                     : substitute(base, a);
    t.rows.push_back(std::move(row));

    // advance the mixed-radix counter, rightmost digit fastest
    for (std::size_t j = n; j-- > 0;) {
      if (++digits[j] < 3) break;
      digits[j] = 0;
    }
  }
  return t;
}

rational influence_weight(const analysis_table& t, const std::string& var,
                          count_mode counting) {
  std::size_t vi = t.vars.size();
  for (std::size_t j = 0; j < t.vars.size(); ++j)
    if (t.vars[j] == var) vi = j;
  if (vi == t.vars.size()) throw unknown_variable(var);

  const bool include_residues = counting == count_mode::full;
  std::int64_t hits = 0;
  for (const table_row& r : t.rows) {
    if (r.values[vi] != truth3::unknown) continue;
    if (r.result.contains(var, include_residues)) ++hits;
  }
  return rational(hits, static_cast<std::int64_t>(pow3(t.vars.size() - 1)));
}

weight_set all_weights(const analysis_table& t, count_mode counting) {
  weight_set ws;
  ws.counting = counting;
  for (const std::string& v : t.vars)
    ws.by_var.emplace(v, influence_weight(t, v, counting));
  return ws;
}

std::vector<std::size_t> rows_with_result(const analysis_table& t,
                                          const formula& target) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].result == target) out.push_back(i);
  if (out.empty()) throw target_not_in_table(target.text());
  return out;
}

std::string to_csv(const analysis_table& t) {
  std::string out;
  for (const std::string& v : t.vars) {
    out += v;
    out += ',';
  }
  out += "result\n";
  for (const table_row& r : t.rows) {
    for (truth3 v : r.values) {
      out += to_symbol(v);
      out += ',';
    }
    out += r.result.text();
    out += '\n';
  }
  return out;
}

}  // namespace pdm
