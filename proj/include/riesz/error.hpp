#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riesz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A matrix row (1-based) with two or more nonzero entries.
class NotLatticeHom : public Error {
 public:
  explicit NotLatticeHom(std::size_t row)
      : Error("not a lattice homomorphism: row " + std::to_string(row) +
              " has more than one nonzero entry"),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ExtensionExhausted : public Error {
 public:
  explicit ExtensionExhausted(std::size_t level)
      : Error("system is not defined at level " + std::to_string(level) +
              " (extension rule 'none')"),
        level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class InjectivityRequired : public Error {
 public:
  explicit InjectivityRequired(std::size_t level)
      : Error("connecting map at level " + std::to_string(level) + " is not injective"),
        level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class SurjectivityRequired : public Error {
 public:
  explicit SurjectivityRequired(std::size_t level)
      : Error("connecting map at level " + std::to_string(level) + " is not surjective"),
        level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

/// The first level k at which step(k) applied to component k+1 differs from component k.
class CompatibilityError : public Error {
 public:
  explicit CompatibilityError(std::size_t level)
      : Error("thread is not compatible at level " + std::to_string(level)), level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class DepthInsufficient : public Error {
 public:
  DepthInsufficient(std::size_t required, std::size_t available)
      : Error("verified depth " + std::to_string(available) + " is below required depth " +
              std::to_string(required)),
        required_(required),
        available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

class SystemMismatch : public Error {
 public:
  SystemMismatch() : Error("operands belong to different systems") {}
};

class SquareFails : public Error {
 public:
  explicit SquareFails(std::size_t level)
      : Error("morphism square does not commute at level " + std::to_string(level)),
        level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class AllZeroUpToDepth : public Error {
 public:
  explicit AllZeroUpToDepth(std::size_t depth)
      : Error("family vanishes on every level up to " + std::to_string(depth)), depth_(depth) {}

  std::size_t depth() const noexcept { return depth_; }

 private:
  std::size_t depth_;
};

class CertificateRefused : public Error {
 public:
  explicit CertificateRefused(std::string flag)
      : Error("perfect certificate refused: " + flag + " does not hold"), flag_(std::move(flag)) {}

  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

class UnknownDemo : public Error {
 public:
  explicit UnknownDemo(const std::string& name) : Error("unknown demo: " + name) {}
};

}  // namespace riesz
