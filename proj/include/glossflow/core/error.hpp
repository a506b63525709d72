#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glossflow {

enum class Errc {
  DuplicateLabel,
  EmptyVocabulary,
  ParseError,
  ConfigRange,
  ConfigMissing,
  DecodeError,
  FrameTooSmall,
  WindowSizeMismatch,
  OutOfOrderFrame,
  ModelNotFound,
  ClassCountMismatch,
  ModelShapeError,
  InferShapeError,
  BackendError,
  ScriptError,
  InvalidScores,
  DimensionMismatch,
  EmptyReference,
  SourceError,
  UnknownLabel,
  SessionClosed,
  SessionLimit,
};

std::string_view to_string(Errc code) noexcept;

// Every failure the library reports carries a machine-readable code. For
// ConfigRange / ConfigMissing the offending field name is kept in field().
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::string field = {});

  Errc code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string field_;
  std::string detail_;
};

}  // namespace glossflow
