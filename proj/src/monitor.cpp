#include "pdm/monitor.hpp"

#include <algorithm>

#include "pdm/errors.hpp"
#include "pdm/parser.hpp"
#include "pdm/rewrite.hpp"
#include "pdm/stamp.hpp"

namespace pdm {

std::set<std::string> topology::all_atoms() const {
  std::set<std::string> out;
  for (const process_spec& p : procs) out.insert(p.atoms.begin(), p.atoms.end());
  return out;
}

std::optional<std::size_t> topology::owner(const std::string& atom) const {
  for (std::size_t i = 0; i < procs.size(); ++i)
    if (procs[i].atoms.count(atom)) return i;
  return std::nullopt;
}

topology parse_topology(const std::string& text) {
  topology t;
  std::set<std::string> claimed;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string part = text.substr(
        pos, semi == std::string::npos ? std::string::npos : semi - pos);

    std::size_t colon = part.find(':');
    if (colon == std::string::npos)
      throw parse_error("expected 'name:atoms' in topology", 1,
                        static_cast<int>(pos) + 1);
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t");
      std::size_t e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    process_spec spec;
    spec.name = trim(part.substr(0, colon));
    if (!is_valid_atom_name(spec.name))
      throw parse_error("bad process name '" + spec.name + "'", 1,
                        static_cast<int>(pos) + 1);
    for (const process_spec& prev : t.procs)
      if (prev.name == spec.name)
        throw parse_error("process '" + spec.name + "' declared twice", 1,
                          static_cast<int>(pos) + 1);

    std::string atoms = part.substr(colon + 1);
    std::size_t apos = 0;
    while (apos <= atoms.size() && !atoms.empty()) {
      std::size_t comma = atoms.find(',', apos);
      std::string atom = trim(atoms.substr(
          apos, comma == std::string::npos ? std::string::npos : comma - apos));
      if (!atom.empty()) {
        if (!is_valid_atom_name(atom))
          throw parse_error("bad atom name '" + atom + "'", 1,
                            static_cast<int>(pos) + 1);
        if (claimed.count(atom))
          throw incomplete_topology("atom '" + atom +
                                    "' is observed by two processes");
        claimed.insert(atom);
        spec.atoms.insert(atom);
      } else if (comma != std::string::npos) {
        throw parse_error("empty atom name in topology", 1,
                          static_cast<int>(pos) + 1);
      }
      if (comma == std::string::npos) break;
      apos = comma + 1;
    }
    t.procs.push_back(std::move(spec));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (t.procs.empty())
    throw parse_error("topology declares no processes", 1, 1);
  return t;
}

void validate_topology(const topology& t, const formula& f) {
  std::set<std::string> atoms = t.all_atoms();
  for (const std::string& p : f.props())
    if (!atoms.count(p))
      throw incomplete_topology("variable '" + p +
                                "' is not observed by any process");
}

const char* to_string(verdict v) {
  switch (v) {
    case verdict::inconclusive: return "inconclusive";
    case verdict::satisfied: return "satisfied";
    case verdict::violated: return "violated";
  }
  return "inconclusive";
}

namespace {

void require_trace_alphabet(const trace& tr, const std::set<std::string>& expect) {
  std::set<std::string> have(tr.atoms.begin(), tr.atoms.end());
  for (const std::string& a : have)
    if (!expect.count(a))
      throw alphabet_mismatch("trace mentions '" + a +
                              "' which no process observes");
  for (const std::string& a : expect)
    if (!have.count(a))
      throw alphabet_mismatch("no trace values for '" + a + "'");
  for (std::size_t i = 0; i < tr.steps.size(); ++i)
    for (const std::string& a : expect)
      if (!tr.steps[i].count(a))
        throw alphabet_mismatch("step " + std::to_string(i) +
                                " has no value for '" + a + "'");
}

verdict constant_verdict(const formula& f) {
  if (f.kind() == op::tt) return verdict::satisfied;
  if (f.kind() == op::ff) return verdict::violated;
  return verdict::inconclusive;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  std::size_t cap = 1;
  while (cap < n) {
    cap *= 2;
    ++bits;
  }
  return bits;
}

}  // namespace

monitor_plan make_plan(const formula& f, const topology& t,
                       const plan_options& opts) {
  validate_topology(t, f);

  monitor_plan p;
  p.property = f;
  p.topo = t;
  p.counting = opts.counting;
  p.red = reduce(f);

  analysis_table rt = build_table(p.red.reduced, table_mode::progression, opts.cap);
  p.reduced_weights = all_weights(rt, opts.counting);
  p.weights = extend_weights(p.red, p.reduced_weights, opts.counting,
                             table_mode::progression, opts.cap);

  for (const sop& s : synthesize_all(rt))
    p.sops.push_back(extend_boolean(p.red, rt, s.target));

  std::set<std::string> props = f.props();
  for (const process_spec& proc : t.procs) {
    rational factor = rational::integer(0);
    for (const std::string& a : proc.atoms)
      if (props.count(a)) factor = factor + p.weights.by_var.at(a).value;
    p.factors.emplace(proc.name, factor);
  }

  std::vector<const process_spec*> order;
  for (const process_spec& proc : t.procs) order.push_back(&proc);
  std::sort(order.begin(), order.end(),
            [&](const process_spec* a, const process_spec* b) {
              const rational& fa = p.factors.at(a->name);
              const rational& fb = p.factors.at(b->name);
              if (fa != fb) return fb < fa;
              return a->name < b->name;
            });
  for (const process_spec* proc : order) p.ring.push_back(proc->name);
  return p;
}

monitor_outcome run_centralized(const formula& f, const trace& tr) {
  std::set<std::string> have(tr.atoms.begin(), tr.atoms.end());
  for (const std::string& p : f.props())
    if (!have.count(p))
      throw alphabet_mismatch("no trace values for '" + p + "'");

  monitor_outcome out;
  formula cur = simplify(f);
  out.residual = cur;
  out.v = constant_verdict(cur);
  if (out.v != verdict::inconclusive) {
    out.at_step = 0;
    return out;
  }

  for (std::size_t t = 0; t < tr.steps.size(); ++t) {
    assignment a;
    for (const auto& [atom, val] : tr.steps[t])
      a[atom] = val ? truth3::top : truth3::bot;
    cur = progress(cur, a);
    std::size_t bits = cur.size() * 8;
    out.stats.mem_bits_peak = std::max(out.stats.mem_bits_peak, bits);
    out.residual = cur;
    verdict v = constant_verdict(simplify(cur));
    if (v != verdict::inconclusive) {
      out.v = v;
      out.at_step = t;
      out.stats.steps_consumed = t + 1;
      return out;
    }
  }
  out.stats.steps_consumed = tr.steps.size();
  return out;
}

namespace {

struct stamped_value {
  std::string atom;
  bool value = false;
  std::size_t step = 0;
  std::size_t hops_left = 0;
};

struct obligation_info {
  bool usable = false;
  std::vector<formula> closure;  // reachable obligations, root first
  std::vector<sop> sops;         // of the root's progression table
};

/// Lazily built per-obligation machinery: the set of obligations reachable
/// from a root by progression (successors are the stripped results of the
/// root's table), the root's per-result configuration descriptions, and a
/// check that a chosen sub-assignment progresses every reachable
/// obligation exactly like the full local observation would.
class selection_engine {
public:
  selection_engine(std::size_t cap) : cap_(cap) {}

  static constexpr std::size_t closure_limit = 64;

  const obligation_info& info_for(const formula& root) {
    auto it = cache_.find(root.text());
    if (it != cache_.end()) return it->second;
    obligation_info inf;
    build(root, inf);
    return cache_.emplace(root.text(), std::move(inf)).first->second;
  }

  bool sufficient(const formula& root, const std::vector<formula>& closure,
                  const assignment& chosen, const assignment& full) {
    if (chosen.size() == full.size()) return true;
    std::string key = root.text();
    key += '#';
    key += sig(chosen);
    key += '#';
    key += sig(full);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = true;
    for (const formula& g : closure) {
      formula e = expand_step(g);
      if (substitute_outside_next(e, chosen) != substitute_outside_next(e, full)) {
        ok = false;
        break;
      }
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

private:
  static std::string sig(const assignment& a) {
    std::string s;
    for (const auto& [atom, v] : a) {
      s += atom;
      s += v == truth3::top ? '+' : v == truth3::bot ? '-' : '?';
    }
    return s;
  }

  void build(const formula& root, obligation_info& inf) {
    try {
      std::vector<formula> queue{root};
      std::set<std::string> seen{root.text()};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        if (queue[i].props().size() > cap_) return;  // stays unusable
        analysis_table tb =
            build_table(queue[i], table_mode::progression, cap_);
        if (i == 0) inf.sops = synthesize_all(tb);
        for (const table_row& row : tb.rows) {
          formula succ = strip_residues(row.result);
          if (succ.is_constant()) continue;
          if (seen.insert(succ.text()).second) {
            if (queue.size() >= closure_limit) return;
            queue.push_back(std::move(succ));
          }
        }
      }
      inf.closure = std::move(queue);
      inf.usable = true;
    } catch (const variable_cap_exceeded&) {
      // fall back to sending everything observed
    }
  }

  std::size_t cap_;
  std::map<std::string, obligation_info> cache_;
  std::map<std::string, bool> memo_;
};

struct proc_state {
  const process_spec* spec = nullptr;
  std::map<std::pair<std::size_t, std::string>, bool> know;
  std::vector<stamped_value> inbox;
  std::vector<stamped_value> outbox;
  formula obligation;
  std::size_t consumed = 0;  // trace steps folded into the obligation
};

assignment known_step(const proc_state& ps, std::size_t step) {
  assignment a;
  auto it = ps.know.lower_bound({step, std::string()});
  for (; it != ps.know.end() && it->first.first == step; ++it)
    a[it->first.second] = it->second ? truth3::top : truth3::bot;
  return a;
}

}  // namespace

monitor_outcome run_decentralized(const formula& f, const topology& topo,
                                  const trace& tr, const plan_options& opts) {
  validate_topology(topo, f);
  require_trace_alphabet(tr, topo.all_atoms());

  monitor_outcome out;
  out.residual = simplify(f);
  out.v = constant_verdict(out.residual);
  if (out.v != verdict::inconclusive) {
    out.at_step = 0;
    return out;
  }

  monitor_plan plan = make_plan(f, topo, opts);
  const std::size_t n = topo.procs.size();
  const std::size_t T = tr.steps.size();
  const std::size_t rounds = T == 0 ? 0 : T + n - 1;
  const std::size_t atom_bits = ceil_log2(topo.all_atoms().size()) + 1;

  std::vector<proc_state> ring(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const process_spec& p : topo.procs)
      if (p.name == plan.ring[i]) ring[i].spec = &p;
    ring[i].obligation = f;
  }

  selection_engine engine(opts.cap);

  for (std::size_t t = 0; t < rounds && out.v == verdict::inconclusive; ++t) {
    const bool observing = t < T;

    for (std::size_t i = 0; i < n && out.v == verdict::inconclusive; ++i) {
      proc_state& ps = ring[i];

      for (const stamped_value& sv : ps.inbox) {
        ps.know[{sv.step, sv.atom}] = sv.value;
        if (sv.hops_left > 1)
          ps.outbox.push_back({sv.atom, sv.value, sv.step, sv.hops_left - 1});
      }
      ps.inbox.clear();

      if (observing)
        for (const std::string& a : ps.spec->atoms)
          ps.know[{t, a}] = tr.steps[t].at(a);

      // Exact progression: a step's values can no longer change once the
      // ring has had time to circulate them, so fold them in.
      while (ps.consumed + n - 1 <= t && ps.consumed < T &&
             out.v == verdict::inconclusive) {
        ps.obligation = progress(ps.obligation, known_step(ps, ps.consumed));
        ++ps.consumed;
        verdict v = constant_verdict(simplify(ps.obligation));
        if (v != verdict::inconclusive) {
          out.v = v;
          out.at_step = t;
        }
      }

      // Partial view of the not-yet-circulated steps; leftovers are
      // stamped per step, so a constant here is a real verdict.
      if (out.v == verdict::inconclusive) {
        formula probe = ps.obligation;
        for (std::size_t s = ps.consumed; s < std::min(t + 1, T); ++s) {
          probe = progress_stamped(probe, known_step(ps, s), s);
          verdict v = constant_verdict(simplify(probe));
          if (v != verdict::inconclusive) {
            out.v = v;
            out.at_step = t;
            break;
          }
        }
      }

      if (observing && out.v == verdict::inconclusive) {
        assignment own;
        for (const std::string& a : ps.spec->atoms)
          own[a] = tr.steps[t].at(a) ? truth3::top : truth3::bot;

        assignment chosen = own;
        if (!own.empty()) {
          const obligation_info& inf = engine.info_for(ps.obligation);
          if (inf.usable) {
            std::vector<term> cands;
            cands.push_back(term{});  // sending nothing, when provably enough
            for (const sop& s : inf.sops)
              for (const term& tm : s.terms)
                if (tm.satisfied_by(own)) cands.push_back(tm);
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const term& cand : cands) {
              assignment sub;
              for (const literal& l : cand.lits) sub[l.atom] = own.at(l.atom);
              if (engine.sufficient(ps.obligation, inf.closure, sub, own)) {
                chosen = sub;
                break;
              }
            }
          }
        }
        if (n > 1)
          for (const auto& [a, v] : chosen)
            ps.outbox.push_back({a, v == truth3::top, t, n - 1});
      }

      while (!ps.know.empty() &&
             ps.know.begin()->first.first < ps.consumed)
        ps.know.erase(ps.know.begin());
    }

    std::size_t round_mem = 0;
    for (std::size_t i = 0; i < n; ++i) {
      proc_state& ps = ring[i];
      if (n > 1 && !ps.outbox.empty()) {
        out.stats.msg_count += 1;
        out.stats.msg_bits += 8 + atom_bits * ps.outbox.size();
        ring[(i + 1) % n].inbox.insert(ring[(i + 1) % n].inbox.end(),
                                       ps.outbox.begin(), ps.outbox.end());
      }
      ps.outbox.clear();
    }
    for (const proc_state& ps : ring)
      round_mem += ps.obligation.size() * 8 +
                   (ps.know.size() + ps.inbox.size()) * 2;
    out.stats.mem_bits_peak = std::max(out.stats.mem_bits_peak, round_mem);

    if (out.at_step) out.stats.steps_consumed = std::min(*out.at_step + 1, T);
  }

  if (!out.at_step) out.stats.steps_consumed = T;
  out.residual = ring.empty() ? simplify(f) : ring[0].obligation;
  return out;
}

}  // namespace pdm
