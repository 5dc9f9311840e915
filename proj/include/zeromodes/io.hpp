#ifndef ZEROMODES_IO_HPP
#define ZEROMODES_IO_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace zeromodes::io {

/// 12 significant digits, "%.12g", C locale.  All emitted reals go through
/// this, so re-running a command reproduces files byte for byte.
std::string format_real(double v);

enum class Format { Csv, Json };

/// Accepts "csv" or "json"; throws otherwise.
Format parse_format(const std::string& s);

using Cell = std::variant<long long, double, std::string>;

/// One command's output: a metadata header echoing every input (enough to
/// reproduce the run) followed by a rectangular payload.
struct OutputRecord {
  int schema_version = 1;
  std::string command;
  std::string args;  // canonical re-run arguments, e.g. "spectrum --lambda 4 ..."
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV: '#'-prefixed metadata lines, then the header row, then the payload.
/// JSON mirrors the same fields; real cells are snapped to the same
/// 12-digit decimals first.
void write(std::ostream& os, const OutputRecord& rec, Format fmt);

}  // namespace zeromodes::io

#endif
