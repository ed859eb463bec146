#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace selfcent {

/// Malformed arguments: indices out of range, bad parameters, invalid files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation would exceed a configured size cap.
class CapabilityError : public std::runtime_error {
 public:
  CapabilityError(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A product or extension could not be formed from the given parts.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table violates the group axioms. When the failure is an
/// associativity failure, `triple()` holds (x, y, z) with (xy)z != x(yz).
class AxiomError : public InputError {
 public:
  explicit AxiomError(const std::string& what) : InputError(what) {}
  AxiomError(const std::string& what, std::array<std::uint32_t, 3> triple)
      : InputError(what), triple_(triple), has_triple_(true) {}

  bool has_triple() const noexcept { return has_triple_; }
  std::array<std::uint32_t, 3> triple() const noexcept { return triple_; }

 private:
  std::array<std::uint32_t, 3> triple_{};
  bool has_triple_ = false;
};

/// A power-commutator presentation whose collected table is not a group.
class InconsistentPresentation : public ConstructionError {
 public:
  InconsistentPresentation(const std::string& what, std::array<std::uint32_t, 3> triple,
                           bool has_triple)
      : ConstructionError(what), triple_(triple), has_triple_(has_triple) {}

  bool has_triple() const noexcept { return has_triple_; }
  std::array<std::uint32_t, 3> triple() const noexcept { return triple_; }

 private:
  std::array<std::uint32_t, 3> triple_;
  bool has_triple_;
};

}  // namespace selfcent
