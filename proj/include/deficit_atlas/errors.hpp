#pragma once

#include <stdexcept>
#include <string>

namespace deficit_atlas {

// Input lies outside the domain of definition. Carries which constraint failed.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form expression was evaluated on its singular set.
class SingularInput : public std::runtime_error {
public:
  explicit SingularInput(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing failed: no sign change over the given interval.
class BracketError : public std::runtime_error {
public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// The strict-interior window holds no genuine interior extremum.
class NoInteriorMinimum : public std::runtime_error {
public:
  explicit NoInteriorMinimum(const std::string& what) : std::runtime_error(what) {}
};

class NotFound : public std::runtime_error {
public:
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

class EmptyCurve : public std::runtime_error {
public:
  explicit EmptyCurve(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace deficit_atlas
