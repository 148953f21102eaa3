#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Raised when an exhaustive computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", cap " + std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// A computed object contradicts a structural theorem the library relies on.
/// Seeing one of these means there is a bug somewhere upstream.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Group-size cap used when none is given explicitly. GARSIDE_CAP overrides.
std::size_t default_group_cap();

}  // namespace garside
