#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace analogy {

using Cell = std::variant<std::string, std::int64_t, double, bool>;

// One titled table. `passed` is set for reports that carry a verdict.
struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<bool> passed;
  std::vector<std::string> notes;

  bool operator==(const Report&) const = default;
};

enum class OutputFormat { Table, Structured };

// Tab-separated columns, one blank line between reports.
std::string render_table(const std::vector<Report>& reports);

// {"reports": [...]} as UTF-8 JSON.
std::string render_structured(const std::vector<Report>& reports);
std::vector<Report> parse_structured(std::string_view text);

}  // namespace analogy
