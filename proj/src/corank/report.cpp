#include "corank/report.hpp"

#include <cstdio>

namespace corank {

std::string format_real(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
  return buffer;
}

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string markdown_cell(const std::string& cell) {
  std::string escaped;
  for (char c : cell) {
    if (c == '|') escaped += '\\';
    escaped += c;
  }
  return escaped;
}

void render_delimited(std::string& out, const Section& section, char sep, bool quote) {
  out += "# section: ";
  out += section.name;
  out += '\n';
  auto write_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += sep;
      out += quote ? csv_cell(cells[i]) : cells[i];
    }
    out += '\n';
  };
  write_row(section.table.headers);
  for (const auto& row : section.table.rows) write_row(row);
  for (const std::string& note : section.notes) {
    out += "# note: ";
    out += note;
    out += '\n';
  }
}

void render_markdown(std::string& out, const Section& section) {
  out += "## ";
  out += section.name;
  out += "\n\n";
  auto write_row = [&](const std::vector<std::string>& cells) {
    out += '|';
    for (const std::string& cell : cells) {
      out += ' ';
      out += markdown_cell(cell);
      out += " |";
    }
    out += '\n';
  };
  write_row(section.table.headers);
  out += '|';
  for (std::size_t i = 0; i < section.table.headers.size(); ++i) out += " --- |";
  out += '\n';
  for (const auto& row : section.table.rows) write_row(row);
  for (const std::string& note : section.notes) {
    out += "\n_";
    out += note;
    out += "_\n";
  }
}

}  // namespace

std::string render(const ReportBundle& bundle, OutputFormat format) {
  std::string out;
  for (std::size_t i = 0; i < bundle.sections.size(); ++i) {
    if (i) out += '\n';
    switch (format) {
      case OutputFormat::csv:
        render_delimited(out, bundle.sections[i], ',', true);
        break;
      case OutputFormat::tsv:
        render_delimited(out, bundle.sections[i], '\t', false);
        break;
      case OutputFormat::markdown:
        render_markdown(out, bundle.sections[i]);
        break;
    }
  }
  return out;
}

}  // namespace corank
