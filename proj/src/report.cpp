#include "c24/report.hpp"

#include <json.hpp>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace c24 {

bool Report::passed() const {
  for (const auto& [name, v] : verdicts)
    if (!v) return false;
  return true;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "schema: " << kReportSchema << '\n';
  out << "command: " << command << '\n';
  for (const auto& [path, digest] : inputs) out << "input: " << path << " digest=" << digest << '\n';
  for (const auto& [name, v] : verdicts) out << "verdict " << name << ": " << (v ? "true" : "false") << '\n';
  for (const auto& [key, value] : invariants) {
    if (const auto* s = std::get_if<std::string>(&value)) {
      out << key << ": " << *s << '\n';
    } else {
      const auto& items = std::get<std::vector<std::string>>(value);
      out << key << '[' << items.size() << "]:\n";
      for (const auto& item : items) out << "  - " << item << '\n';
    }
  }
  out << "elapsed_ms: " << elapsed_ms << '\n';
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : inputs) j["inputs"].push_back({{"path", path}, {"digest", digest}});
  j["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [name, v] : verdicts) j["verdicts"][name] = v;
  j["invariants"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : invariants) {
    if (const auto* s = std::get_if<std::string>(&value))
      j["invariants"][key] = *s;
    else
      j["invariants"][key] = std::get<std::vector<std::string>>(value);
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

Report parse_report_text(const std::string& text) {
  static const std::regex input_re(R"(^input: (.*) digest=([0-9a-f]+)$)");
  static const std::regex verdict_re(R"(^verdict ([^:]+): (true|false)$)");
  static const std::regex array_re(R"(^([^:\[]+)\[(\d+)\]:$)");
  static const std::regex scalar_re(R"(^([^:]+): (.*)$)");
  std::istringstream in(text);
  std::string line;
  Report r;
  if (!std::getline(in, line) || line != std::string("schema: ") + kReportSchema)
    throw std::runtime_error("report: missing or unknown schema line");
  bool ended = false;
  while (std::getline(in, line)) {
    if (ended) throw std::runtime_error("report: content after elapsed_ms");
    std::smatch m;
    if (std::regex_match(line, m, input_re)) {
      r.add_input(m[1], m[2]);
    } else if (std::regex_match(line, m, verdict_re)) {
      r.verdict(m[1], m[2] == "true");
    } else if (std::regex_match(line, m, array_re)) {
      const std::string key = m[1];  // m points into line, which is reused below
      std::vector<std::string> items;
      const auto n = std::stoul(m[2]);
      for (unsigned long k = 0; k < n; ++k) {
        if (!std::getline(in, line) || line.rfind("  - ", 0) != 0) throw std::runtime_error("report: short array " + key);
        items.push_back(line.substr(4));
      }
      r.set(key, std::move(items));
    } else if (std::regex_match(line, m, scalar_re)) {
      if (m[1] == "command") {
        r.command = m[2];
      } else if (m[1] == "elapsed_ms") {
        r.elapsed_ms = std::stoll(m[2]);
        ended = true;
      } else {
        r.set(m[1], m[2].str());
      }
    } else {
      throw std::runtime_error("report: unreadable line: " + line);
    }
  }
  if (!ended) throw std::runtime_error("report: missing elapsed_ms");
  return r;
}

}  // namespace c24
