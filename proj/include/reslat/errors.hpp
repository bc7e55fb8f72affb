#ifndef RESLAT_ERRORS_HPP
#define RESLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reslat {

/// Malformed input (bad dimensions, unknown tokens). Distinct from axiom
/// failures, which are reported through CheckReport with witnesses.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Line-numbered error from the algebra file parser.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

/// The candidate set {x : x*y <= z} has no greatest element, so the
/// monoid operation is not residuable on this lattice.
struct NoResiduumError : std::runtime_error {
  int y, z;
  NoResiduumError(int y_, int z_)
      : std::runtime_error("no residuum for pair (" + std::to_string(y_) +
                           ", " + std::to_string(z_) + ")"),
        y(y_), z(z_) {}
};

/// Coupling requires the double negation law to hold.
struct DnlRequiredError : std::runtime_error {
  DnlRequiredError()
      : std::runtime_error("double negation law does not hold") {}
};

struct InvalidCoupledError : std::runtime_error {
  explicit InvalidCoupledError(const std::string& msg)
      : std::runtime_error("not a valid general coupled semiring: " + msg) {}
};

struct InvalidTiedError : std::runtime_error {
  explicit InvalidTiedError(const std::string& msg)
      : std::runtime_error("not a valid tied semiring: " + msg) {}
};

struct NotSubuniverseError : std::runtime_error {
  explicit NotSubuniverseError(const std::string& msg)
      : std::runtime_error("not a subuniverse: " + msg) {}
};

struct NegNotSubuniverseError : std::runtime_error {
  explicit NegNotSubuniverseError(const std::string& msg)
      : std::runtime_error("negated carrier is not a subuniverse: " + msg) {}
};

/// The De Morgan condition neg(x*y) = neg(x) (+) neg(y) fails on the
/// chosen subuniverse.
struct DeMorganFailsError : std::runtime_error {
  int x, y;
  DeMorganFailsError(int x_, int y_)
      : std::runtime_error("De Morgan condition fails at (" +
                           std::to_string(x_) + ", " + std::to_string(y_) +
                           ")"),
        x(x_), y(y_) {}
};

/// The second carrier is not closed under join or product; signals an
/// inconsistent tied structure.
struct ClosureFailsError : std::runtime_error {
  explicit ClosureFailsError(const std::string& msg)
      : std::runtime_error("carrier not closed: " + msg) {}
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& msg)
      : std::runtime_error("size cap exceeded: " + msg) {}
};

}  // namespace reslat

#endif
