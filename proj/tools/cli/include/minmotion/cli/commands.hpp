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

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "minmotion/cli/files.hpp"

namespace minmotion::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitDegenerate = 3,
  kExitVerificationFailed = 4,
  kExitInternalError = 5,
};

struct SampleOptions {
  std::array<Rational, 3> point{};
  Rational from{0};
  Rational to{1};
  int count = 2;
  int digits = 12;
};

/// Accepts "p", "p/q" or a finite decimal such as "-0.25", converted exactly.
std::optional<Rational> parse_number(std::string_view text);
/// Three comma-separated numbers.
std::optional<std::array<Rational, 3>> parse_point(std::string_view text);

/// Analysis of a curve file as "key: value" lines, or one JSON object.
std::string analyze(const CurveFile& file, bool as_json);

/// Minimal motion for the curve in `file`, with its verification report.
struct SynthesisOutput {
  MotionFile motion;
  VerificationReport verification;
  std::string summary;
};
SynthesisOutput synthesize_file(const CurveFile& file);

struct VerifyOutput {
  bool passed = false;
  std::string text;
  std::string first_failure;  // "name: reason", empty when passed
};
VerifyOutput verify_files(const CurveFile& curve, const MotionFile& motion);

/// CSV with a header row; see README for the columns.
std::string sample_csv(const MotionFile& motion, const SampleOptions& options);

// Subcommand entry points: diagnostics go to `err`, the return value is an
// ExitCode.
int cmd_analyze(const std::string& curve_path, bool as_json, std::ostream& out, std::ostream& err);
int cmd_synthesize(const std::string& curve_path, const std::string& motion_path, std::ostream& out,
                   std::ostream& err);
int cmd_verify(const std::string& curve_path, const std::string& motion_path, std::ostream& out, std::ostream& err);
int cmd_sample(const std::string& motion_path, const SampleOptions& options, std::ostream& out, std::ostream& err);

}  // namespace minmotion::cli
