#ifndef QND_ERRORS_HPP_
#define QND_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnd {

using Element = std::uint32_t;

//! Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axiom { A1, A2, A3 };

std::string to_string(Axiom axiom);

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::vector<Element> witness);
  //! Same violation, with the message prefixed by "source: ".
  AxiomViolation(std::string const& source, AxiomViolation const& inner);

  Axiom axiom() const noexcept { return axiom_; }
  std::vector<Element> const& witness() const noexcept { return witness_; }

 private:
  Axiom axiom_;
  std::vector<Element> witness_;
};

class NotHomomorphism : public Error {
 public:
  NotHomomorphism(Element x, Element y);

  Element x() const noexcept { return x_; }
  Element y() const noexcept { return y_; }

 private:
  Element x_;
  Element y_;
};

class NotSubquandle : public Error {
 public:
  using Error::Error;
};

class NotCongruence : public Error {
 public:
  NotCongruence(std::string const& reason, std::vector<Element> witness);

  std::vector<Element> const& witness() const noexcept { return witness_; }

 private:
  std::vector<Element> witness_;
};

class OverflowOrder : public Error {
 public:
  OverflowOrder(std::size_t requested, std::size_t bound);
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(std::string const& what, std::size_t requested, std::size_t bound);
};

class ParentMismatch : public Error {
 public:
  ParentMismatch(std::size_t left, std::size_t right);
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

//! Raised when the product comparison map for orbits fails to be a bijective
//! homomorphism. Never expected on valid input.
class WitnessNotBijective : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string reason);

  std::size_t line() const noexcept { return line_; }
  std::string const& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace qnd

#endif  // QND_ERRORS_HPP_
