#include "marm/induction/example_sets.hpp"

#include <sstream>

#include "marm/core/error.hpp"

namespace marm {

namespace {
std::string render(const ExampleSets::Key& k) {
  std::string s = "<";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ">";
}
}  // namespace

bool ExampleSets::add_goal(Key k) {
  if (incompletes_.count(k))
    throw ContradictoryExamples("trace already recorded as incomplete: " + render(k));
  return goals_.insert(std::move(k)).second;
}

bool ExampleSets::add_incomplete(Key k) {
  if (goals_.count(k))
    throw ContradictoryExamples("trace already recorded as goal: " + render(k));
  return incompletes_.insert(std::move(k)).second;
}

ExampleSets parse_trace_file(const std::string& text, PropSpace& space) {
  ExampleSets out;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string kind, colon;
    if (!(ls >> kind)) continue;
    bool goal;
    if (kind == "GOAL")
      goal = true;
    else if (kind == "INC")
      goal = false;
    else
      throw ParseError(lineno, "expected GOAL or INC, got '" + kind + "'");
    if (!(ls >> colon) || colon != ":")
      throw ParseError(lineno, "expected ':' after trace kind");
    ExampleSets::Key key;
    std::string tok;
    while (ls >> tok) {
      if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
        throw ParseError(lineno, "expected label token '{...}', got '" + tok + "'");
      std::string inner = tok.substr(1, tok.size() - 2);
      if (inner.empty()) continue;  // empty label, self-loop
      if (inner.find(',') != std::string::npos)
        throw ParseError(lineno, "per-agent labels carry at most one proposition");
      key.push_back(space.intern(inner));
    }
    if (goal)
      out.add_goal(std::move(key));
    else
      out.add_incomplete(std::move(key));
  }
  return out;
}

std::string format_trace_line(const ExampleSets::Key& k, bool goal,
                              const PropSpace& space) {
  std::string s = goal ? "GOAL :" : "INC :";
  for (PropId p : k) s += " {" + space.name(p) + "}";
  if (k.empty()) s += " {}";
  return s;
}

}  // namespace marm
