#include "output.hpp"

namespace charrank::cli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

namespace {

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line + "\n";
}

}  // namespace

std::string render(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["command"] = record.command;
      auto& params = doc["params"] = nlohmann::ordered_json::object();
      for (const auto& [key, value] : record.params) params[key] = value;
      doc["results"] = record.results;
      doc["status"] = record.status;
      return doc.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = csv_line(record.columns);
      for (const auto& row : record.rows) out += csv_line(row);
      return out;
    }
    case Format::Text:
      break;
  }
  std::string out;
  for (const auto& line : record.text_lines) out += line + "\n";
  return out;
}

OutputRecord parse_json_record(std::string_view text) {
  const auto doc = nlohmann::ordered_json::parse(text);
  OutputRecord record;
  record.command = doc.at("command").get<std::string>();
  for (const auto& [key, value] : doc.at("params").items()) {
    record.params.emplace_back(key, value.get<std::string>());
  }
  record.results = doc.at("results");
  record.status = doc.at("status").get<std::string>();
  return record;
}

}  // namespace charrank::cli
