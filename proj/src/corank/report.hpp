#pragma once

#include <string>
#include <vector>

#include "corank/ingest.hpp"

namespace corank {

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Section {
  std::string name;
  Table table;
  std::vector<std::string> notes;
};

// Everything a pipeline command produces. Serialization is deterministic:
// identical inputs and configuration yield byte-identical text. Warnings are
// carried separately and never enter the data stream.
struct ReportBundle {
  std::vector<Section> sections;
  std::vector<std::string> warnings;
};

std::string render(const ReportBundle& bundle, OutputFormat format);

// Shortest decimal form with the given number of significant digits.
std::string format_real(double value, int significant_digits = 6);

}  // namespace corank
