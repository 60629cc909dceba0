#pragma once

#include <stdexcept>
#include <string>

namespace gpp {

/// Malformed or inconsistent input data.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem hypothesis required by the requested construction does not hold.
/// The message names the violated hypothesis and where it failed.
struct HypothesisRefused : std::runtime_error {
  explicit HypothesisRefused(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or search exceeded its configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure: a property that is a theorem for valid
/// inputs did not hold, which indicates an engine bug.
struct InternalCheckFailed : std::logic_error {
  explicit InternalCheckFailed(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gpp
