#include "pdm/stamp.hpp"

#include <cstdlib>

#include "pdm/rewrite.hpp"

namespace pdm {

std::string stamped_name(const std::string& atom, std::size_t step) {
  return atom + "@" + std::to_string(step);
}

bool is_stamped(const std::string& name) {
  return name.find('@') != std::string::npos;
}

std::optional<std::pair<std::string, std::size_t>> split_stamp(
    const std::string& name) {
  std::size_t at = name.find('@');
  if (at == std::string::npos || at == 0 || at + 1 >= name.size())
    return std::nullopt;
  std::size_t step = 0;
  for (std::size_t i = at + 1; i < name.size(); ++i) {
    char c = name[i];
    if (c < '0' || c > '9') return std::nullopt;
    step = step * 10 + static_cast<std::size_t>(c - '0');
  }
  return std::make_pair(name.substr(0, at), step);
}

formula stamp_outside_next(const formula& f, std::size_t step) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
      return f;
    case op::atom:
      if (is_stamped(f.name())) return f;
      return formula::atom(stamped_name(f.name(), step));
    case op::next:
      return f;
    case op::lnot:
      return formula::lnot(stamp_outside_next(f.left(), step));
    case op::land:
      return formula::land(stamp_outside_next(f.left(), step),
                           stamp_outside_next(f.right(), step));
    case op::lor:
      return formula::lor(stamp_outside_next(f.left(), step),
                          stamp_outside_next(f.right(), step));
    case op::eventually:
      return formula::eventually(stamp_outside_next(f.left(), step));
    case op::globally:
      return formula::globally(stamp_outside_next(f.left(), step));
    case op::until:
      return formula::until(stamp_outside_next(f.left(), step),
                            stamp_outside_next(f.right(), step));
  }
  return f;
}

formula substitute_stamped(
    const formula& f,
    const std::map<std::pair<std::size_t, std::string>, bool>& history,
    const std::set<std::string>& own) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
      return f;
    case op::atom: {
      auto parts = split_stamp(f.name());
      if (!parts || !own.count(parts->first)) return f;
      auto it = history.find({parts->second, parts->first});
      if (it == history.end()) return f;
      return it->second ? formula::tt() : formula::ff();
    }
    case op::lnot:
      return formula::lnot(substitute_stamped(f.left(), history, own));
    case op::next:
      return formula::next(substitute_stamped(f.left(), history, own));
    case op::land:
      return formula::land(substitute_stamped(f.left(), history, own),
                           substitute_stamped(f.right(), history, own));
    case op::lor:
      return formula::lor(substitute_stamped(f.left(), history, own),
                          substitute_stamped(f.right(), history, own));
    case op::eventually:
      return formula::eventually(substitute_stamped(f.left(), history, own));
    case op::globally:
      return formula::globally(substitute_stamped(f.left(), history, own));
    case op::until:
      return formula::until(substitute_stamped(f.left(), history, own),
                            substitute_stamped(f.right(), history, own));
  }
  return f;
}

formula progress_stamped(const formula& f, const assignment& known,
                         std::size_t step) {
  formula g = substitute_outside_next(expand_step(f), known);
  return strip_residues(simplify(stamp_outside_next(g, step)));
}

}  // namespace pdm
