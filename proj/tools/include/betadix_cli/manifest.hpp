#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <betadix/padic.hpp>
#include <betadix/serialize.hpp>

namespace betadix::cli {

enum class Command { expand, cns_check, count, bound_report, interpolate, gap_check, persistence, practical };
enum class OutputFormat { json, csv, text };

std::string command_name(Command c);
Command parse_command(const std::string& name);
std::string format_name(OutputFormat f);
OutputFormat parse_format(const std::string& name);
CountMode parse_count_mode(const std::string& name);
HypothesisMode parse_hypothesis_mode(const std::string& name);

/// Everything needed to reproduce one experiment. Element fields hold the
/// polynomial text exactly as given (e.g. "-1+x").
struct ExperimentManifest {
  Command command = Command::expand;
  std::string ring = "x";
  bool check_irreducible = true;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::optional<std::string> digits;  // comma list; absent means {0, ..., |N(beta)|-1}
  std::optional<std::string> digit;   // the digit b, as an element
  std::optional<std::string> value;   // expand/interpolate/persistence/practical input
  std::optional<std::uint64_t> N;
  std::optional<unsigned> K;
  std::optional<std::string> u;
  std::optional<std::uint64_t> l;
  std::optional<std::uint64_t> k;
  std::optional<unsigned long> base;
  std::optional<std::uint64_t> max_n;
  std::optional<std::uint64_t> samples;
  bool central_binomial = false;
  HypothesisMode hypotheses = HypothesisMode::theorem;
  CountMode count_mode = CountMode::radix;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::optional<std::string> checkpoint;

  friend bool operator==(const ExperimentManifest&, const ExperimentManifest&) = default;
};

Json render(const ExperimentManifest& m);
ExperimentManifest parse_manifest(const Json& j);

}  // namespace betadix::cli
