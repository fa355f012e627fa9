#pragma once

#include <stdexcept>
#include <string>

namespace crosslab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// from_edge_list rejects loops (u,u)
struct SelfLoopError : Error {
  explicit SelfLoopError(int v)
      : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  int vertex;
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidVertexError : Error {
  using Error::Error;
};

struct InvalidParameterError : Error {
  using Error::Error;
};

// instance exceeds an exhaustive-search cap
struct TooLargeError : Error {
  using Error::Error;
};

struct DegenerateDrawingError : Error {
  using Error::Error;
};

struct KMaxTooLargeError : Error {
  using Error::Error;
};

// exact crossing search exceeded its planarity-test budget
struct SearchBudgetError : Error {
  SearchBudgetError(const std::string& what, long long tests)
      : Error(what), planarity_tests(tests) {}
  long long planarity_tests;
};

struct HeuristicBisectionRejectedError : Error {
  using Error::Error;
};

struct EmptyGraphError : Error {
  using Error::Error;
};

struct BisectorCapExceededError : Error {
  using Error::Error;
};

struct InvalidConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace crosslab
