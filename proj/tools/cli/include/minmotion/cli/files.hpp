// Copyright 2026 The minmotion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minmotion/minmotion.hpp"

namespace minmotion::cli {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kCurveSchema = "minmotion.curve";
inline constexpr std::string_view kMotionSchema = "minmotion.motion";

/// Malformed file contents. `where` names the offending field ("x1[2]") or
/// the input position ("line 3, column 7").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct CurveFile {
  /// Components as written, not reduced.
  CurveComponents components;
  std::optional<std::string> name;
  std::optional<std::string> source;
  friend bool operator==(const CurveFile&, const CurveFile&) = default;
};

struct MotionFile {
  DualQuatPoly motion;
  CurveTransform transform;
  DegreeReport report;
  friend bool operator==(const MotionFile&, const MotionFile&) = default;
};

/// Canonical text: compact JSON with sorted keys, rationals as strings, and a
/// trailing newline.
std::string serialize(const CurveFile& f);
std::string serialize(const MotionFile& f);

CurveFile parse_curve_file(std::string_view text);
MotionFile parse_motion_file(std::string_view text);

/// Reads a whole file; an unreadable path is a ParseError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace minmotion::cli
