#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leodop {

// Minimal CSV writer: fixed column order, header always emitted,
// locale-independent number formatting (dot decimal via to_chars).
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  void write_row(const std::vector<std::string>& cells);

  static std::string num(double v);
  static std::string num(long long v);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace leodop
