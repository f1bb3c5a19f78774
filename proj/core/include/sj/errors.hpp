#pragma once

#include <stdexcept>
#include <string>

namespace sj {

struct DivisionNotExact : std::runtime_error {
  explicit DivisionNotExact(const std::string& what) : std::runtime_error(what) {}
};

struct NotSingular : std::runtime_error {
  explicit NotSingular(const std::string& what) : std::runtime_error(what) {}
};

struct NotAdjacent : std::runtime_error {
  explicit NotAdjacent(const std::string& what) : std::runtime_error(what) {}
};

struct NotInS : std::runtime_error {
  explicit NotInS(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateParameters : std::runtime_error {
  explicit DegenerateParameters(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtLimit : std::runtime_error {
  explicit PoleAtLimit(const std::string& what) : std::runtime_error(what) {}
};

struct MultipleAtypicalRoots : std::runtime_error {
  explicit MultipleAtypicalRoots(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sj
