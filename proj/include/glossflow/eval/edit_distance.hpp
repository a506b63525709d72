#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace glossflow {

struct EditCounts {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_len = 0;

  std::size_t distance() const noexcept { return substitutions + deletions + insertions; }
  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

/// Unit-cost Levenshtein alignment of hyp against ref. Among minimal
/// alignments the one with the fewest substitutions is reported (the
/// insertion count then follows). Throws Error{EmptyReference}.
EditCounts edit_distance(std::span<const std::string> ref, std::span<const std::string> hyp);

/// (S + D + I) / N; exceeds 1 when insertions dominate.
double wer(const EditCounts& counts);

}  // namespace glossflow
