#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace analogy {

enum class ErrorKind {
  Parse,
  Validation,
  DisjointDescription,
  UndefinedRatio,
  Type,
  Coding,
  InapplicableModel,
  Alphabet,
  DepthExhausted,
  Domain,
  RuleInapplicable,
  ModalityViolation,
  Unverifiable,
  CannotForm,
  Specification,
  SchemeMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception. `path` locates the
// offending element (a JSON pointer for documents, an id or aspect otherwise).
class AnalogyError : public std::runtime_error {
 public:
  AnalogyError(ErrorKind kind, std::string path, const std::string& message)
      : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorKind kind_;
  std::string path_;
};

}  // namespace analogy
