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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "minmotion/cli/commands.hpp"

namespace {

using minmotion::Rational;
namespace cli = minmotion::cli;

Rational number_or_throw(const std::string& text, const std::string& flag) {
  const auto r = cli::parse_number(text);
  if (!r) throw CLI::ValidationError(flag, "expected a number such as 3, -1/2 or 0.25, got \"" + text + "\"");
  return *r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-degree rational motions with a prescribed rational trajectory"};
  app.require_subcommand(1);

  std::string curve_path;
  std::string motion_path;
  bool as_json = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Report degree, circularity and normal form of a curve");
  analyze->add_option("curve", curve_path, "Curve file")->required();
  analyze->add_flag("--json", as_json, "Print one JSON object instead of key: value lines");

  CLI::App* synth = app.add_subcommand("synthesize", "Compute the minimal motion whose origin traces the curve");
  synth->add_option("curve", curve_path, "Curve file")->required();
  synth->add_option("-o,--output", motion_path, "Motion file to write")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check that a motion file is the minimal motion of a curve");
  verify->add_option("curve", curve_path, "Curve file")->required();
  verify->add_option("motion", motion_path, "Motion file")->required();

  std::string point_text = "0,0,0";
  std::string from_text = "-1";
  std::string to_text = "1";
  cli::SampleOptions sample_opts;
  CLI::App* sample = app.add_subcommand("sample", "Print trajectory and frame samples as CSV");
  sample->add_option("motion", motion_path, "Motion file")->required();
  sample->add_option("--point", point_text, "Moving point x,y,z")->capture_default_str();
  sample->add_option("--from", from_text, "First parameter value")->capture_default_str();
  sample->add_option("--to", to_text, "Last parameter value")->capture_default_str();
  sample->add_option("--count", sample_opts.count, "Number of samples, endpoints included")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  sample->add_option("--digits", sample_opts.digits, "Significant digits in the output")
      ->capture_default_str()
      ->check(CLI::Range(1, 100));

  try {
    app.parse(argc, argv);
    if (sample->parsed()) {
      const auto point = cli::parse_point(point_text);
      if (!point) throw CLI::ValidationError("--point", "expected x,y,z, got \"" + point_text + "\"");
      sample_opts.point = *point;
      sample_opts.from = number_or_throw(from_text, "--from");
      sample_opts.to = number_or_throw(to_text, "--to");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitParseError;
  }

  if (analyze->parsed()) return cli::cmd_analyze(curve_path, as_json, std::cout, std::cerr);
  if (synth->parsed()) return cli::cmd_synthesize(curve_path, motion_path, std::cout, std::cerr);
  if (verify->parsed()) return cli::cmd_verify(curve_path, motion_path, std::cout, std::cerr);
  return cli::cmd_sample(motion_path, sample_opts, std::cout, std::cerr);
}
