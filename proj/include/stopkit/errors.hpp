#pragma once

#include <stdexcept>
#include <string>

namespace stopkit {

// Malformed input data: bad CoNLL-U line, broken UTF-8, unknown report
// schema, missing corpus field. Messages name the file and, where known,
// the line or record.
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that cannot be processed: language mismatch,
// empty corpus, empty stopword list.
class SemanticError : public std::runtime_error {
public:
  explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace stopkit
