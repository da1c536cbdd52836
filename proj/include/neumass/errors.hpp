#pragma once

#include <stdexcept>
#include <string>

namespace neumass {

struct DegenerateTriangle : std::runtime_error {
  explicit DegenerateTriangle(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonFiniteInput : std::runtime_error {
  explicit NonFiniteInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidMode : std::runtime_error {
  explicit InvalidMode(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& msg) : std::runtime_error(msg) {}
};

struct GeometryMismatch : std::runtime_error {
  explicit GeometryMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct RefinementTooDeep : std::runtime_error {
  explicit RefinementTooDeep(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroVector : std::runtime_error {
  explicit ZeroVector(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularBoundaryMass : std::runtime_error {
  explicit SingularBoundaryMass(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingSide : std::runtime_error {
  explicit MissingSide(const std::string& msg) : std::runtime_error(msg) {}
};

struct FrameMismatch : std::runtime_error {
  explicit FrameMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace neumass
