#include "marm/core/text_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "marm/core/error.hpp"

namespace marm {

std::string serialize(const RewardMachine& rm) {
  std::ostringstream os;
  os << "states " << rm.num_states() << "\n";
  os << "initial " << rm.state_name(rm.initial()) << "\n";
  os << "final " << rm.state_name(rm.final_state()) << "\n";
  for (StateId s = 0; s < rm.num_states(); ++s) {
    if (s == rm.final_state()) continue;
    for (PropId p = 0; p < rm.props().size(); ++p) {
      StateId t = rm.target(s, p);
      if (t == kNoTransition) continue;
      os << "trans " << rm.state_name(s) << " " << rm.props().name(p) << " "
         << rm.state_name(t) << "\n";
    }
  }
  return os.str();
}

namespace {

struct Builder {
  std::vector<std::string> names;
  std::unordered_map<std::string, StateId> index;

  StateId get(const std::string& name, int line, int declared) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (static_cast<int>(names.size()) >= declared)
      throw ParseError(line, "state '" + name + "' exceeds declared state count");
    StateId id = static_cast<StateId>(names.size());
    index.emplace(name, id);
    names.push_back(name);
    return id;
  }
};

}  // namespace

RewardMachine deserialize(const std::string& text, PropSpace& space) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  int declared = -1;
  std::string initial_name, final_name;
  struct Edge {
    std::string from, prop, to;
    int line;
  };
  std::vector<Edge> edges;
  Builder b;

  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "states") {
      if (!(ls >> declared) || declared < 2)
        throw ParseError(lineno, "expected 'states <n>' with n >= 2");
    } else if (key == "initial") {
      if (!(ls >> initial_name)) throw ParseError(lineno, "expected 'initial <name>'");
    } else if (key == "final") {
      if (!(ls >> final_name)) throw ParseError(lineno, "expected 'final <name>'");
    } else if (key == "trans") {
      Edge e;
      e.line = lineno;
      if (!(ls >> e.from >> e.prop >> e.to))
        throw ParseError(lineno, "expected 'trans <from> <prop> <to>'");
      edges.push_back(std::move(e));
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens after directive");
  }
  if (declared < 0) throw ParseError(lineno, "missing 'states' line");
  if (initial_name.empty()) throw ParseError(lineno, "missing 'initial' line");
  if (final_name.empty()) throw ParseError(lineno, "missing 'final' line");
  if (initial_name == final_name)
    throw ParseError(lineno, "initial and final state must differ");

  StateId init = b.get(initial_name, lineno, declared);
  StateId fin = b.get(final_name, lineno, declared);
  for (const Edge& e : edges) {
    b.get(e.from, e.line, declared);
    b.get(e.to, e.line, declared);
    space.intern(e.prop);
  }
  // Unreferenced states get synthesized names.
  int synth = 0;
  while (static_cast<int>(b.names.size()) < declared) {
    std::string name;
    do {
      name = "s" + std::to_string(synth++);
    } while (b.index.count(name));
    b.get(name, lineno, declared);
  }

  RewardMachine rm = RewardMachine::make_named(space, b.names, init, fin);
  for (const Edge& e : edges) {
    if (e.from == final_name)
      throw ParseError(e.line, "transition out of the final state");
    StateId from = b.index.at(e.from);
    StateId to = b.index.at(e.to);
    PropId p = *space.find(e.prop);
    if (rm.target(from, p) != kNoTransition)
      throw ParseError(e.line, "duplicate transition for (" + e.from + ", " + e.prop + ")");
    rm.add_transition(from, p, to);
  }
  return rm;
}

RewardMachine deserialize_file(const std::string& path, PropSpace& space) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open RM file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str(), space);
}

std::string to_dot(const RewardMachine& rm, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  __start [shape=point];\n";
  for (StateId s = 0; s < rm.num_states(); ++s) {
    os << "  " << rm.state_name(s) << " [shape="
       << (s == rm.final_state() ? "doublecircle" : "circle") << "];\n";
  }
  os << "  __start -> " << rm.state_name(rm.initial()) << ";\n";
  for (StateId s = 0; s < rm.num_states(); ++s) {
    if (s == rm.final_state()) continue;
    for (PropId p = 0; p < rm.props().size(); ++p) {
      StateId t = rm.target(s, p);
      if (t == kNoTransition) continue;
      os << "  " << rm.state_name(s) << " -> " << rm.state_name(t)
         << " [label=\"" << rm.props().name(p) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace marm
