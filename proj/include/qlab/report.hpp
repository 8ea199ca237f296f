#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qlab {

struct Violation {
  std::string law;      // dotted law name, e.g. "compose.assoc"
  std::string witness;  // rendered witness tuple
  bool structural = false;
};

// Accumulated result of a validator.  Empty means the laws hold.
class Report {
public:
  bool ok() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  void add(std::string law, std::string witness, bool structural = false) {
    items_.push_back(Violation{std::move(law), std::move(witness), structural});
  }
  void merge(const Report& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  bool has_structural() const {
    for (const auto& v : items_)
      if (v.structural) return true;
    return false;
  }

  const std::vector<Violation>& items() const { return items_; }

  std::string to_string() const {
    std::string out;
    for (const auto& v : items_) {
      out += v.structural ? "[structural] " : "[law] ";
      out += v.law;
      if (!v.witness.empty()) {
        out += " @ ";
        out += v.witness;
      }
      out += '\n';
    }
    return out;
  }

private:
  std::vector<Violation> items_;
};

}  // namespace qlab
