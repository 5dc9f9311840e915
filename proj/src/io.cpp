#include "zeromodes/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace zeromodes::io {
namespace {

// Parse the canonical 12-digit decimal back; both writers then agree on the
// value they emit.
double snap(double v) {
  const std::string s = format_real(v);
  return std::strtod(s.c_str(), nullptr);
}

void write_csv(std::ostream& os, const OutputRecord& rec) {
  os << "# schema_version: " << rec.schema_version << "\n";
  os << "# command: " << rec.command << "\n";
  os << "# args: " << rec.args << "\n";
  for (const auto& [key, value] : rec.params)
    os << "# " << key << ": " << value << "\n";
  for (std::size_t c = 0; c < rec.columns.size(); ++c)
    os << (c ? "," : "") << rec.columns[c];
  os << "\n";
  for (const auto& row : rec.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      if (const auto* i = std::get_if<long long>(&row[c]))
        os << *i;
      else if (const auto* d = std::get_if<double>(&row[c]))
        os << format_real(*d);
      else
        os << std::get<std::string>(row[c]);
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const OutputRecord& rec) {
  nlohmann::ordered_json j;
  j["schema_version"] = rec.schema_version;
  j["command"] = rec.command;
  j["args"] = rec.args;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rec.params) params[key] = value;
  j["params"] = params;
  j["columns"] = rec.columns;
  nlohmann::ordered_json payload = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (const auto* i = std::get_if<long long>(&cell))
        jrow.push_back(*i);
      else if (const auto* d = std::get_if<double>(&cell))
        jrow.push_back(snap(*d));
      else
        jrow.push_back(std::get<std::string>(cell));
    }
    payload.push_back(jrow);
  }
  j["payload"] = payload;
  os << j.dump(2) << "\n";
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("format must be csv or json");
}

void write(std::ostream& os, const OutputRecord& rec, Format fmt) {
  if (fmt == Format::Csv)
    write_csv(os, rec);
  else
    write_json(os, rec);
}

}  // namespace zeromodes::io
