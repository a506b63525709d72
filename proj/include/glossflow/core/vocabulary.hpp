#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace glossflow {

using ClassId = std::size_t;

/// Ordered gloss labels; class id i is labels()[i].
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ClassId id) const { return labels_.at(id); }
  std::optional<ClassId> find(std::string_view label) const;

  /// Serialized form: a JSON array of strings.
  std::string to_json() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ClassId> index_;
};

Vocabulary load_vocabulary(std::istream& source);
Vocabulary load_vocabulary(std::string_view json_text);
Vocabulary load_vocabulary_file(const std::string& path);

}  // namespace glossflow
