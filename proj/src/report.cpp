#include "analogy/report.hpp"

#include <cstdio>
#include <sstream>

#include "analogy/error.hpp"
#include "json.hpp"

namespace analogy {

using nlohmann::json;

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", std::get<double>(c));
  return buf;
}

json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

Cell json_cell(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  throw AnalogyError(ErrorKind::Parse, "", "unsupported report cell " + j.dump());
}

}  // namespace

std::string render_table(const std::vector<Report>& reports) {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : reports) {
    if (!first) os << '\n';
    first = false;
    os << "## " << r.title;
    if (r.passed) os << "  [" << (*r.passed ? "PASS" : "FAIL") << "]";
    os << '\n';
    if (!r.columns.empty()) {
      for (std::size_t k = 0; k < r.columns.size(); ++k) os << (k ? "\t" : "") << r.columns[k];
      os << '\n';
    }
    for (const auto& row : r.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "\t" : "") << cell_text(row[k]);
      os << '\n';
    }
    for (const auto& n : r.notes) os << "# " << n << '\n';
  }
  return os.str();
}

std::string render_structured(const std::vector<Report>& reports) {
  json doc = {{"reports", json::array()}};
  for (const auto& r : reports) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      json cells = json::array();
      for (const auto& c : row) cells.push_back(cell_json(c));
      rows.push_back(std::move(cells));
    }
    doc["reports"].push_back({{"title", r.title},
                              {"columns", r.columns},
                              {"rows", std::move(rows)},
                              {"passed", r.passed ? json(*r.passed) : json(nullptr)},
                              {"notes", r.notes}});
  }
  return doc.dump(2) + "\n";
}

std::vector<Report> parse_structured(std::string_view text) {
  std::vector<Report> out;
  try {
    json doc = json::parse(text);
    for (const auto& j : doc.at("reports")) {
      Report r;
      r.title = j.at("title").get<std::string>();
      r.columns = j.at("columns").get<std::vector<std::string>>();
      for (const auto& row : j.at("rows")) {
        std::vector<Cell> cells;
        for (const auto& c : row) cells.push_back(json_cell(c));
        r.rows.push_back(std::move(cells));
      }
      if (!j.at("passed").is_null()) r.passed = j.at("passed").get<bool>();
      r.notes = j.at("notes").get<std::vector<std::string>>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw AnalogyError(ErrorKind::Parse, "", std::string("malformed report document: ") + e.what());
  }
  return out;
}

}  // namespace analogy
