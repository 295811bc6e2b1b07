#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>

namespace pdm {

enum class op : std::uint8_t {
  tt,          // constant true
  ff,          // constant false
  atom,        // propositional variable
  lnot,        // !f
  land,        // f & g
  lor,         // f | g
  next,        // X f
  eventually,  // F f
  globally,    // G f
  until        // f U g
};

/// Immutable LTL syntax tree with value semantics.
///
/// Every node caches its canonical rendering (minimal parentheses) at
/// construction time. The rendering is injective, so structural equality,
/// ordering and hashing all reduce to string operations on `text()`.
class formula {
public:
  formula() = default;

  static formula tt();
  static formula ff();
  static formula atom(std::string name);
  static formula lnot(formula f);
  static formula land(formula a, formula b);
  static formula lor(formula a, formula b);
  static formula next(formula f);
  static formula eventually(formula f);
  static formula globally(formula f);
  static formula until(formula a, formula b);

  bool valid() const { return n_ != nullptr; }
  op kind() const;

  /// Atom name; only meaningful for kind() == op::atom.
  const std::string& name() const;

  /// Left child (or the only child of a unary node).
  const formula& left() const;
  const formula& right() const;

  /// Canonical rendering with minimal parentheses.
  const std::string& text() const;

  /// Number of syntax-tree nodes.
  int size() const;

  bool is_constant() const { return kind() == op::tt || kind() == op::ff; }
  bool is_binary() const {
    return kind() == op::land || kind() == op::lor || kind() == op::until;
  }
  bool is_unary() const {
    return kind() == op::lnot || kind() == op::next ||
           kind() == op::eventually || kind() == op::globally;
  }
  bool is_temporal_free() const;

  /// Sorted set of atom names occurring anywhere in the formula.
  std::set<std::string> props() const;

  /// True if `name` occurs in the formula. With `include_residues` false,
  /// occurrences inside X-subtrees are ignored.
  bool contains(const std::string& name, bool include_residues = true) const;

  friend bool operator==(const formula& a, const formula& b);
  friend bool operator!=(const formula& a, const formula& b) {
    return !(a == b);
  }
  friend bool operator<(const formula& a, const formula& b) {
    return a.text() < b.text();
  }

private:
  struct node;

  explicit formula(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  static formula make(op k, std::string name, formula lhs, formula rhs);

  std::shared_ptr<const node> n_;
};

struct formula::node {
  op k;
  std::string name;  // atoms only
  formula lhs, rhs;
  std::string text;
  int count = 1;
  bool temporal_free = true;
};

inline op formula::kind() const { return n_->k; }
inline const std::string& formula::name() const { return n_->name; }
inline const formula& formula::left() const { return n_->lhs; }
inline const formula& formula::right() const { return n_->rhs; }
inline const std::string& formula::text() const { return n_->text; }
inline int formula::size() const { return n_->count; }
inline bool formula::is_temporal_free() const { return n_->temporal_free; }

inline bool operator==(const formula& a, const formula& b) {
  if (a.n_ == b.n_) return true;
  if (!a.n_ || !b.n_) return false;
  return a.n_->text == b.n_->text;
}

/// Operator precedence, loosest to tightest: U < | < & < unary < primary.
int precedence(op k);

}  // namespace pdm

template <>
struct std::hash<pdm::formula> {
  std::size_t operator()(const pdm::formula& f) const {
    return std::hash<std::string>{}(f.text());
  }
};
