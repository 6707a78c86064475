#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace marm {

using PropId = int16_t;

// Interns proposition names to dense ids. All components of a run share one
// space so that labels, reward machines and example sets agree on ids.
class PropSpace {
 public:
  PropSpace() = default;
  explicit PropSpace(const std::vector<std::string>& names) {
    for (const auto& n : names) intern(n);
  }

  PropId intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    PropId id = static_cast<PropId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(name);
    return id;
  }

  std::optional<PropId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(PropId id) const { return names_.at(id); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool same_names(const PropSpace& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, PropId> index_;
};

}  // namespace marm
