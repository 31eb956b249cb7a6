#pragma once

#include <stdexcept>
#include <string>

namespace berger {

// Domain errors raised by the geometric primitives.  All of them derive from
// std::runtime_error so callers can handle them uniformly; the distinct types
// map to distinct CLI exit codes.

struct SignatureError : std::runtime_error {
  explicit SignatureError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FinslerViolation : std::runtime_error {
  explicit FinslerViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegeneratePlane : std::runtime_error {
  explicit DegeneratePlane(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotTimeLike : std::runtime_error {
  explicit NotTimeLike(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAdmissible : std::runtime_error {
  explicit NotAdmissible(const std::string& msg) : std::runtime_error(msg) {}
};

struct RegimeError : std::runtime_error {
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutsideDomain : std::runtime_error {
  explicit OutsideDomain(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct PlannerFailure : std::runtime_error {
  explicit PlannerFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace berger
