#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qorder {

/// Carrier elements are always 0-indexed.
using Element = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed table shape or out-of-range entry.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  NotAGroup(std::string reason, std::vector<Element> witness);
  const std::string& reason() const noexcept { return reason_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string reason_;
  std::vector<Element> witness_;
};

enum class QuandleAxiom { Idempotency, RightInvertibility, RightDistributivity };

const char* to_string(QuandleAxiom axiom) noexcept;

class NotAQuandle : public Error {
 public:
  NotAQuandle(QuandleAxiom axiom, std::vector<Element> witness);
  QuandleAxiom axiom() const noexcept { return axiom_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  QuandleAxiom axiom_;
  std::vector<Element> witness_;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  NotAnAutomorphism(std::string reason, std::vector<Element> witness);
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::vector<Element> witness_;
};

class NotACircularOrdering : public Error {
 public:
  using Error::Error;
};

/// Raised by function_to_cyclic when the carrier has at most two elements.
class SmallCarrier : public Error {
 public:
  using Error::Error;
};

class DegenerateTriple : public Error {
 public:
  using Error::Error;
};

class DiagonalPair : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or closure cap would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The structural decision and the exhaustive oracle disagree.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace qorder
