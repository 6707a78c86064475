#include "marm/core/trace.hpp"

#include <stdexcept>

namespace marm {

std::vector<PropId> stripped(const Trace& t) {
  std::vector<PropId> out;
  out.reserve(t.labels.size());
  for (const Label& l : t.labels) {
    if (l.props.size() > 1)
      throw std::invalid_argument("stripped: label carries more than one proposition");
    if (!l.props.empty()) out.push_back(l.props[0]);
  }
  return out;
}

std::vector<Trace> proper_prefixes(const Trace& goal) {
  std::vector<Trace> out;
  const int n = goal.length();
  for (int k = 1; k < n; ++k) {
    Trace p;
    p.kind = TraceKind::Incomplete;
    p.labels.assign(goal.labels.begin(), goal.labels.begin() + k);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace marm
