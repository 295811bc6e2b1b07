#include "pdm/sop.hpp"

#include <algorithm>
#include <map>

#include "pdm/errors.hpp"

namespace pdm {

bool term::has_atom(const std::string& atom) const { return find(atom) != nullptr; }

const literal* term::find(const std::string& atom) const {
  for (const literal& l : lits)
    if (l.atom == atom) return &l;
  return nullptr;
}

bool term::satisfied_by(const assignment& a) const {
  for (const literal& l : lits) {
    truth3 v = lookup(a, l.atom);
    if (v != (l.positive ? truth3::top : truth3::bot)) return false;
  }
  return true;
}

bool term::subsumes(const term& other) const {
  for (const literal& l : lits) {
    const literal* o = other.find(l.atom);
    if (!o || o->positive != l.positive) return false;
  }
  return true;
}

assignment term::characteristic() const {
  assignment a;
  for (const literal& l : lits)
    a[l.atom] = l.positive ? truth3::top : truth3::bot;
  return a;
}

std::string term::str() const {
  if (lits.empty()) return "true";
  std::string out;
  for (const literal& l : lits) {
    if (!out.empty()) out += " & ";
    out += l.str();
  }
  return out;
}

formula term::to_formula() const {
  if (lits.empty()) return formula::tt();
  formula acc =
      lits.back().positive ? formula::atom(lits.back().atom)
                           : formula::lnot(formula::atom(lits.back().atom));
  for (auto it = lits.rbegin() + 1; it != lits.rend(); ++it) {
    formula lit =
        it->positive ? formula::atom(it->atom) : formula::lnot(formula::atom(it->atom));
    acc = formula::land(std::move(lit), std::move(acc));
  }
  return acc;
}

bool operator<(const term& a, const term& b) {
  if (a.lits.size() != b.lits.size()) return a.lits.size() < b.lits.size();
  return a.str() < b.str();
}

bool sop::satisfied_by(const assignment& a) const {
  for (const term& t : terms)
    if (t.satisfied_by(a)) return true;
  return false;
}

std::string sop::str() const {
  if (terms.empty()) return "false";
  std::string out;
  for (const term& t : terms) {
    if (!out.empty()) out += " | ";
    bool wrap = t.lits.size() > 1 && terms.size() > 1;
    out += wrap ? "(" + t.str() + ")" : t.str();
  }
  return out;
}

formula sop::to_formula() const {
  if (terms.empty()) return formula::ff();
  formula acc = terms.back().to_formula();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
    acc = formula::lor(it->to_formula(), std::move(acc));
  return acc;
}

namespace {

void sort_dedup(std::vector<term>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// Drop every term that a distinct (prior-or-equal-ranked) term subsumes.
void absorb(std::vector<term>& ts) {
  std::vector<term> kept;
  for (const term& cand : ts) {
    bool covered = false;
    for (const term& k : kept) {
      if (k.subsumes(cand)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(cand);
  }
  ts = std::move(kept);
}

// Merge the first pair of terms that agree on every literal except one
// atom carried with opposite signs. Returns false when no pair merges.
bool merge_one(std::vector<term>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (ts[i].lits.size() != ts[j].lits.size()) continue;
      std::size_t diffs = 0;
      std::size_t at = 0;
      bool comparable = true;
      for (std::size_t k = 0; k < ts[i].lits.size(); ++k) {
        const literal& a = ts[i].lits[k];
        const literal& b = ts[j].lits[k];
        if (a.atom != b.atom) {
          comparable = false;
          break;
        }
        if (a.positive != b.positive) {
          ++diffs;
          at = k;
        }
      }
      if (!comparable || diffs != 1) continue;
      term merged = ts[i];
      merged.lits.erase(merged.lits.begin() + static_cast<std::ptrdiff_t>(at));
      ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(j));
      ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(i));
      ts.push_back(std::move(merged));
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<term> minimize(std::vector<term> terms) {
  for (;;) {
    sort_dedup(terms);
    absorb(terms);
    if (!merge_one(terms)) break;
  }
  sort_dedup(terms);
  return terms;
}

sop synthesize(const analysis_table& t, const formula& target) {
  std::vector<std::size_t> rows = rows_with_result(t, target);
  std::vector<term> raw;
  raw.reserve(rows.size());
  for (std::size_t i : rows) {
    term tm;
    for (std::size_t j = 0; j < t.vars.size(); ++j) {
      truth3 v = t.rows[i].values[j];
      if (v == truth3::unknown) continue;
      tm.lits.push_back({t.vars[j], v == truth3::top});
    }
    raw.push_back(std::move(tm));
  }
  return sop{target, minimize(std::move(raw))};
}

std::vector<sop> synthesize_all(const analysis_table& t) {
  std::map<std::string, formula> targets;
  for (const table_row& r : t.rows) targets.emplace(r.result.text(), r.result);
  std::vector<sop> out;
  out.reserve(targets.size());
  for (const auto& [text, f] : targets) out.push_back(synthesize(t, f));
  return out;
}

std::optional<term> minimal_set(const std::vector<sop>& sops,
                                const assignment& observed) {
  const term* best = nullptr;
  for (const sop& s : sops) {
    for (const term& t : s.terms) {
      if (!t.satisfied_by(observed)) continue;
      if (!best || t < *best) best = &t;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

}  // namespace pdm
