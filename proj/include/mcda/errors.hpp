#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mcda {

// Base type for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unknown linguistic code, or a code used outside its vocabulary.
class LexiconError : public Error {
 public:
  using Error::Error;
};

// Argument outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input data: missing cell, duplicate id, bad schema.
class DataError : public Error {
 public:
  using Error::Error;
};

// A computation cannot proceed: degenerate frame, zero divisor,
// empty support, degenerate ranking.
class ComputeError : public Error {
 public:
  using Error::Error;
};

// Wraps an inner error with the pipeline stage it escaped from.
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : Error("[" + stage + "] " + what), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace mcda
