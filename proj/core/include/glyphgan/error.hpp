// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace glyphgan {

/// Base class for all library errors. Messages are single-line and carry
/// enough context (paths, shapes, term names) to be actionable from a CLI.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class EmptyGlyphError : public Error {
 public:
  EmptyGlyphError() : Error("EmptyGlyph: image has no foreground pixel") {}
};

class EmptyObservationSetError : public Error {
 public:
  EmptyObservationSetError()
      : Error("EmptyObservationSet: observed letter set must be nonempty") {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error("ShapeError: " + msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error("IoError: " + msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error("NumericError: " + msg) {}
};

}  // namespace glyphgan
