#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahyp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnsupportedSystem : public Error {
  using Error::Error;
};
class DimensionMismatch : public Error {
  using Error::Error;
};
class NotInSpan : public Error {
  using Error::Error;
};
class ZeroRoot : public Error {
  using Error::Error;
};
/// An exact integer result did not fit in 64 bits.
class ArithmeticOverflow : public Error {
  using Error::Error;
};
class ParseError : public Error {
  using Error::Error;
};
/// Descriptor names an algebra that is abelian or a nontrivial direct sum.
class NotSemisimple : public Error {
  using Error::Error;
};
/// G/H itself violates the rank inequalities, so no positive-rank L can act properly.
class SpaceObstruction : public Error {
  using Error::Error;
};

/// Weyl group enumeration stopped because the group is larger than the cap.
class CapExceeded : public Error {
public:
  CapExceeded(std::uint64_t cap, std::uint64_t order, bool exact)
      : Error(message(cap, order, exact)), cap_(cap), order_(order), exact_(exact) {}

  std::uint64_t cap() const { return cap_; }
  /// Exact group order when order_is_exact(), otherwise a strict lower bound.
  std::uint64_t order() const { return order_; }
  bool order_is_exact() const { return exact_; }

private:
  static std::string message(std::uint64_t cap, std::uint64_t order, bool exact) {
    return "Weyl group order " + std::string(exact ? "" : "> ") + std::to_string(order) +
           " exceeds enumeration cap " + std::to_string(cap);
  }
  std::uint64_t cap_;
  std::uint64_t order_;
  bool exact_;
};

}  // namespace ahyp
