// Structured text reports printed by the CLI.
//
// Text form, one entry per line in insertion order:
//   schema: c24-report/1
//   command: <subcommand>
//   input: <path> digest=<fnv1a-64 of the file bytes>      (zero or more)
//   verdict <name>: true|false                              (zero or more)
//   <key>: <value>                                          (invariants)
//   <key>[<n>]:                                             (arrays, then n lines "  - item")
//   elapsed_ms: <integer>
// The JSON form carries the same fields as an object.
#ifndef C24_REPORT_HPP
#define C24_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace c24 {

inline constexpr const char* kReportSchema = "c24-report/1";

struct Report {
  using Value = std::variant<std::string, std::vector<std::string>>;

  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, Value>> invariants;
  std::int64_t elapsed_ms = 0;

  void add_input(const std::string& path, const std::string& digest) { inputs.emplace_back(path, digest); }
  void verdict(const std::string& name, bool v) { verdicts.emplace_back(name, v); }
  void set(const std::string& key, std::string v) { invariants.emplace_back(key, std::move(v)); }
  void set(const std::string& key, const char* v) { invariants.emplace_back(key, std::string(v)); }
  void set(const std::string& key, long long v) { invariants.emplace_back(key, std::to_string(v)); }
  void set(const std::string& key, std::vector<std::string> v) { invariants.emplace_back(key, std::move(v)); }

  /// True when there are no verdicts or all of them hold.
  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Reads the text form back; throws std::runtime_error on malformed input.
Report parse_report_text(const std::string& text);

}  // namespace c24

#endif  // C24_REPORT_HPP
