#include "betadix_cli/manifest.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>

#include <betadix/error.hpp>

namespace betadix::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::expand, "expand"},
    {Command::cns_check, "cns-check"},
    {Command::count, "count"},
    {Command::bound_report, "bound-report"},
    {Command::interpolate, "interpolate"},
    {Command::gap_check, "gap-check"},
    {Command::persistence, "persistence"},
    {Command::practical, "practical"},
}};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const Json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) v = j.at(key).get<T>();
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  bad("unknown command '" + name + "'");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  bad("unknown output format '" + name + "'");
}

CountMode parse_count_mode(const std::string& name) {
  if (name == "radix") return CountMode::radix;
  if (name == "beta-adic") return CountMode::beta_adic;
  bad("unknown digit mode '" + name + "' (radix | beta-adic)");
}

HypothesisMode parse_hypothesis_mode(const std::string& name) {
  if (name == "theorem") return HypothesisMode::theorem;
  if (name == "exploration") return HypothesisMode::exploration;
  bad("unknown hypothesis mode '" + name + "' (theorem | exploration)");
}

Json render(const ExperimentManifest& m) {
  Json j;
  j["command"] = command_name(m.command);
  j["ring"] = m.ring;
  j["check_irreducible"] = m.check_irreducible;
  put(j, "alpha", m.alpha);
  put(j, "beta", m.beta);
  put(j, "digits", m.digits);
  put(j, "digit", m.digit);
  put(j, "value", m.value);
  put(j, "N", m.N);
  put(j, "K", m.K);
  put(j, "u", m.u);
  put(j, "l", m.l);
  put(j, "k", m.k);
  put(j, "base", m.base);
  put(j, "max_n", m.max_n);
  put(j, "samples", m.samples);
  j["central_binomial"] = m.central_binomial;
  j["hypotheses"] = mode_name(m.hypotheses);
  j["mode"] = mode_name(m.count_mode);
  j["format"] = format_name(m.format);
  j["seed"] = m.seed;
  j["jobs"] = m.jobs;
  put(j, "checkpoint", m.checkpoint);
  return j;
}

ExperimentManifest parse_manifest(const Json& j) {
  if (!j.is_object() || !j.contains("command")) bad("manifest must be an object with a command");
  static const std::set<std::string> known{
      "command", "ring", "check_irreducible", "alpha", "beta", "digits", "digit", "value", "N",
      "K", "u", "l", "k", "base", "max_n", "samples", "central_binomial", "hypotheses", "mode",
      "format", "seed", "jobs", "checkpoint"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) bad("unknown manifest field \"" + key + "\"");
  }
  ExperimentManifest m;
  try {
    m.command = parse_command(j.at("command").get<std::string>());
    m.ring = j.value("ring", std::string("x"));
    m.check_irreducible = j.value("check_irreducible", true);
    get(j, "alpha", m.alpha);
    get(j, "beta", m.beta);
    get(j, "digits", m.digits);
    get(j, "digit", m.digit);
    get(j, "value", m.value);
    get(j, "N", m.N);
    get(j, "K", m.K);
    get(j, "u", m.u);
    get(j, "l", m.l);
    get(j, "k", m.k);
    get(j, "base", m.base);
    get(j, "max_n", m.max_n);
    get(j, "samples", m.samples);
    m.central_binomial = j.value("central_binomial", false);
    m.hypotheses = parse_hypothesis_mode(j.value("hypotheses", std::string("theorem")));
    m.count_mode = parse_count_mode(j.value("mode", std::string("radix")));
    m.format = parse_format(j.value("format", std::string("json")));
    m.seed = j.value("seed", std::uint64_t{0});
    m.jobs = j.value("jobs", 1u);
    get(j, "checkpoint", m.checkpoint);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

}  // namespace betadix::cli
