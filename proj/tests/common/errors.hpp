#pragma once

#include <optional>

#include "probid/error.hpp"

/// Kind of the probid::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<probid::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const probid::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
