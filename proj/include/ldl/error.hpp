#pragma once

#include <stdexcept>
#include <string>

namespace ldl {

/// Base class for every error raised by the lab.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A label that is not a vertex of the graph it was used with.
class NoSuchVertex : public Error {
 public:
  explicit NoSuchVertex(const std::string& what) : Error("no such vertex: " + what) {}
};

/// Malformed input: invalid graph, bad parameter, bad file.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Weak diameter of a set spanning several connected components.
class InfiniteDiameter : public Error {
 public:
  InfiniteDiameter() : Error("infinite weak diameter") {}
};

/// No feasible subset exists inside the allowed candidates.
class Infeasible : public Error {
 public:
  Infeasible() : Error("infeasible under candidate restriction") {}
};

/// An error-set component wider than the configured cap.
class NicenessViolated : public Error {
 public:
  explicit NicenessViolated(const std::string& what) : Error("niceness violated: " + what) {}
};

/// Brute-force completion requested for a non-additive problem.
class AdditivityRequired : public Error {
 public:
  AdditivityRequired() : Error("additivity required") {}
};

}  // namespace ldl
