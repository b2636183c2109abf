#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace htoda {

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool all_ok() const {
    for (const auto& line : lines)
      if (!line.ok) return false;
    return true;
  }

  // one line per check
  std::string str() const {
    std::ostringstream os;
    for (const auto& line : lines)
      os << (line.ok ? "[PASS] " : "[FAIL] ") << line.name << ": "
         << line.detail << "\n";
    return os.str();
  }

  void add(const std::string& name, bool ok, const std::string& detail) {
    lines.push_back({name, ok, detail});
  }

  // Appends another report with a "section/" prefix on each name.
  void absorb(const std::string& section, const CheckReport& other) {
    for (const auto& line : other.lines)
      lines.push_back({section + "/" + line.name, line.ok, line.detail});
  }
};

}  // namespace htoda
