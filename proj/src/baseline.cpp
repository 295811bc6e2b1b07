#include <algorithm>

#include "pdm/errors.hpp"
#include "pdm/monitor.hpp"
#include "pdm/rewrite.hpp"
#include "pdm/stamp.hpp"

namespace pdm {

namespace {

verdict constant_state(const formula& f) {
  if (f.kind() == op::tt) return verdict::satisfied;
  if (f.kind() == op::ff) return verdict::violated;
  return verdict::inconclusive;
}

struct bf_state {
  const process_spec* spec = nullptr;
  std::map<std::pair<std::size_t, std::string>, bool> history;
  formula token;   // exact rewriting of the property on the trace so far
  formula inbox;   // predecessor's token, delivered at the round start
};

}  // namespace

monitor_outcome run_baseline(const formula& f, const topology& topo,
                             const trace& tr) {
  validate_topology(topo, f);
  {
    std::set<std::string> expect = topo.all_atoms();
    std::set<std::string> have(tr.atoms.begin(), tr.atoms.end());
    for (const std::string& a : have)
      if (!expect.count(a))
        throw alphabet_mismatch("trace mentions '" + a +
                                "' which no process observes");
    for (const std::string& a : expect)
      if (!have.count(a))
        throw alphabet_mismatch("no trace values for '" + a + "'");
  }

  monitor_outcome out;
  out.residual = simplify(f);
  out.v = constant_state(out.residual);
  if (out.v != verdict::inconclusive) {
    out.at_step = 0;
    return out;
  }

  const std::size_t n = topo.procs.size();
  const std::size_t T = tr.steps.size();
  const std::size_t rounds = T == 0 ? 0 : T + n - 1;

  // Static ring in name order; every process starts with its own copy of
  // the property. A copy is handed to the successor each round, so each
  // one gradually visits every observer and sheds its stamped unknowns.
  std::vector<bf_state> ring(n);
  {
    std::vector<const process_spec*> order;
    for (const process_spec& p : topo.procs) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const process_spec* a, const process_spec* b) {
                return a->name < b->name;
              });
    for (std::size_t i = 0; i < n; ++i) {
      ring[i].spec = order[i];
      ring[i].token = f;
      ring[i].inbox = formula::tt();
    }
  }

  for (std::size_t t = 0; t < rounds && out.v == verdict::inconclusive; ++t) {
    const bool observing = t < T;

    for (std::size_t i = 0; i < n && out.v == verdict::inconclusive; ++i) {
      bf_state& ps = ring[i];

      if (observing)
        for (const std::string& a : ps.spec->atoms)
          ps.history[{t, a}] = tr.steps[t].at(a);

      // Merge the received copy with whatever is still held, then answer
      // its stamped questions about our own past.
      formula merged = ps.token.kind() == op::tt
                           ? ps.inbox
                           : ps.inbox.kind() == op::tt
                                 ? ps.token
                                 : formula::land(ps.token, ps.inbox);
      ps.inbox = formula::tt();
      ps.token =
          simplify(substitute_stamped(merged, ps.history, ps.spec->atoms));

      if (observing && !ps.token.is_constant()) {
        assignment own;
        for (const std::string& a : ps.spec->atoms)
          own[a] = tr.steps[t].at(a) ? truth3::top : truth3::bot;
        ps.token = progress_stamped(ps.token, own, t);
      }

      verdict v = constant_state(ps.token);
      if (v != verdict::inconclusive) {
        out.v = v;
        out.at_step = t;
        break;
      }

      // Stamps older than a full circulation have visited their owner.
      while (!ps.history.empty() &&
             ps.history.begin()->first.first + n + 1 < t + 1)
        ps.history.erase(ps.history.begin());
    }

    for (std::size_t i = 0; i < n; ++i) {
      bf_state& ps = ring[i];
      if (n > 1 && out.v == verdict::inconclusive &&
          ps.token.kind() != op::tt) {
        out.stats.msg_count += 1;
        out.stats.msg_bits += static_cast<std::size_t>(ps.token.size()) * 8;
        ring[(i + 1) % n].inbox = ps.token;
        ps.token = formula::tt();  // handed off, nothing kept
      }
    }
    // Count storage after delivery: a copy in flight lives in its
    // receiver's inbox until the next round and costs real memory there.
    std::size_t round_mem = 0;
    for (const bf_state& ps : ring) {
      if (ps.token.kind() != op::tt)
        round_mem += static_cast<std::size_t>(ps.token.size()) * 8;
      if (ps.inbox.kind() != op::tt)
        round_mem += static_cast<std::size_t>(ps.inbox.size()) * 8;
      round_mem += ps.history.size() * 2;
    }
    out.stats.mem_bits_peak = std::max(out.stats.mem_bits_peak, round_mem);
  }

  out.stats.steps_consumed = out.at_step ? std::min(*out.at_step + 1, T) : T;
  if (!ring.empty() && out.v == verdict::inconclusive) {
    // All copies say the same thing; report the first one still in flight.
    for (const bf_state& ps : ring)
      if (ps.token.kind() != op::tt) {
        out.residual = ps.token;
        break;
      }
  }
  return out;
}

}  // namespace pdm
