#include "pdm/formula.hpp"

#include <stdexcept>

namespace pdm {

int precedence(op k) {
  switch (k) {
    case op::until: return 1;
    case op::lor: return 2;
    case op::land: return 3;
    case op::lnot:
    case op::next:
    case op::eventually:
    case op::globally: return 4;
    default: return 5;  // constants and atoms never need parentheses
  }
}

namespace {

const char* binary_symbol(op k) {
  switch (k) {
    case op::land: return " & ";
    case op::lor: return " | ";
    case op::until: return " U ";
    default: return "";
  }
}

// Render a child of a binary node, parenthesising when its top-level
// operator binds looser, or equally loose on the left of a right-
// associative operator ("(a | b) | c" keeps the forced left nesting).
std::string render_child(const formula& child, op parent, bool left_side) {
  int pc = precedence(child.kind());
  int pp = precedence(parent);
  bool wrap = pc < pp || (pc == pp && left_side);
  if (wrap) return "(" + child.text() + ")";
  return child.text();
}

std::string render(op k, const std::string& name, const formula& lhs,
                   const formula& rhs) {
  switch (k) {
    case op::tt: return "true";
    case op::ff: return "false";
    case op::atom: return name;
    case op::lnot:
      if (precedence(lhs.kind()) < precedence(op::lnot))
        return "!(" + lhs.text() + ")";
      return "!" + lhs.text();
    case op::next:
    case op::eventually:
    case op::globally: {
      const char* sym = k == op::next ? "X" : k == op::eventually ? "F" : "G";
      if (precedence(lhs.kind()) < precedence(k))
        return std::string(sym) + " (" + lhs.text() + ")";
      return std::string(sym) + " " + lhs.text();
    }
    case op::land:
    case op::lor:
    case op::until:
      return render_child(lhs, k, true) + binary_symbol(k) +
             render_child(rhs, k, false);
  }
  return "";
}

}  // namespace

formula formula::make(op k, std::string name, formula lhs, formula rhs) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->name = std::move(name);
  n->lhs = lhs;
  n->rhs = rhs;
  n->count = 1 + (lhs.valid() ? lhs.size() : 0) + (rhs.valid() ? rhs.size() : 0);
  bool temporal =
      k == op::next || k == op::eventually || k == op::globally || k == op::until;
  n->temporal_free = !temporal && (!lhs.valid() || lhs.is_temporal_free()) &&
                     (!rhs.valid() || rhs.is_temporal_free());
  n->text = render(k, n->name, lhs, rhs);
  return formula(std::move(n));
}

formula formula::tt() { return make(op::tt, "", {}, {}); }
formula formula::ff() { return make(op::ff, "", {}, {}); }

formula formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
  return make(op::atom, std::move(name), {}, {});
}

formula formula::lnot(formula f) { return make(op::lnot, "", std::move(f), {}); }

formula formula::land(formula a, formula b) {
  return make(op::land, "", std::move(a), std::move(b));
}

formula formula::lor(formula a, formula b) {
  return make(op::lor, "", std::move(a), std::move(b));
}

formula formula::next(formula f) { return make(op::next, "", std::move(f), {}); }

formula formula::eventually(formula f) {
  return make(op::eventually, "", std::move(f), {});
}

formula formula::globally(formula f) {
  return make(op::globally, "", std::move(f), {});
}

formula formula::until(formula a, formula b) {
  return make(op::until, "", std::move(a), std::move(b));
}

namespace {

void collect_props(const formula& f, std::set<std::string>& out) {
  if (!f.valid()) return;
  if (f.kind() == op::atom) {
    out.insert(f.name());
    return;
  }
  if (f.is_unary()) {
    collect_props(f.left(), out);
  } else if (f.is_binary()) {
    collect_props(f.left(), out);
    collect_props(f.right(), out);
  }
}

bool contains_rec(const formula& f, const std::string& name,
                  bool include_residues) {
  if (!f.valid()) return false;
  switch (f.kind()) {
    case op::atom: return f.name() == name;
    case op::tt:
    case op::ff: return false;
    case op::next:
      if (!include_residues) return false;
      return contains_rec(f.left(), name, include_residues);
    case op::lnot:
    case op::eventually:
    case op::globally:
      return contains_rec(f.left(), name, include_residues);
    default:
      return contains_rec(f.left(), name, include_residues) ||
             contains_rec(f.right(), name, include_residues);
  }
}

}  // namespace

std::set<std::string> formula::props() const {
  std::set<std::string> out;
  collect_props(*this, out);
  return out;
}

bool formula::contains(const std::string& name, bool include_residues) const {
  return contains_rec(*this, name, include_residues);
}

}  // namespace pdm
