#pragma once

#include <stdexcept>
#include <string>

namespace pivotal {

class EnumerationGuard : public std::runtime_error {
  public:
    explicit EnumerationGuard(const std::string& what) : std::runtime_error(what) {}
};

class DimensionGuard : public std::runtime_error {
  public:
    explicit DimensionGuard(const std::string& what) : std::runtime_error(what) {}
};

class NotAVertex : public std::runtime_error {
  public:
    explicit NotAVertex(const std::string& what) : std::runtime_error(what) {}
};

class NonGenericObjective : public std::runtime_error {
  public:
    explicit NonGenericObjective(const std::string& what) : std::runtime_error(what) {}
};

class NotSimple : public std::runtime_error {
  public:
    explicit NotSimple(const std::string& what) : std::runtime_error(what) {}
};

class ZeroGenerator : public std::runtime_error {
  public:
    explicit ZeroGenerator(const std::string& what) : std::runtime_error(what) {}
};

/// Default ceiling for the enumeration routines; raised via PIVOTAL_GUARD.
std::size_t enumeration_guard(std::size_t defaultValue);

}  // namespace pivotal
