#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace charrank::cli {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

/// One invocation's output. Counts travel as decimal strings in every
/// format so no value is ever squeezed through a double.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string status = "ok";

  // csv body: header plus rows
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::vector<std::string> text_lines;
};

std::string render(const OutputRecord& record, Format format);

/// Inverse of render(..., Format::Json) for the command/params/results/status
/// fields. Throws nlohmann::json::exception on malformed input.
OutputRecord parse_json_record(std::string_view text);

std::string csv_escape(std::string_view field);

}  // namespace charrank::cli
