#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "cardqubo/instances.hpp"

namespace cardqubo {
namespace {

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<double> parse_row(const std::string& line, std::size_t line_no) {
  std::vector<double> row;
  const char* p = line.data();
  const char* end = p + line.size();
  while (true) {
    while (p < end && is_space(*p)) ++p;
    if (p == end) break;
    const char* tok = p;
    while (p < end && !is_space(*p)) ++p;
    // from_chars rejects a leading '+', which some writers emit.
    const char* start = (*tok == '+' && p - tok > 1) ? tok + 1 : tok;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(start, p, v);
    if (ec != std::errc() || ptr != p || !std::isfinite(v))
      throw ValidationError("line " + std::to_string(line_no) + ": cannot parse '" +
                            std::string(tok, p) + "' as a finite number");
    row.push_back(v);
  }
  return row;
}

}  // namespace

void save_matrix(const SymmetricMatrix& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out << ' ';
      out << format_double(r[j]);
    }
    out << '\n';
  }
  if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

SymmetricMatrix load_matrix(const std::filesystem::path& path, bool symmetrize_input) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");

  RawMatrix rows;
  std::vector<std::size_t> line_of_row;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto row = parse_row(line, line_no);
    if (row.empty()) continue;
    rows.push_back(std::move(row));
    line_of_row.push_back(line_no);
  }
  if (rows.empty()) throw DimensionError("'" + path.string() + "' contains no matrix rows");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rows.size())
      throw DimensionError("line " + std::to_string(line_of_row[i]) + ": expected " +
                           std::to_string(rows.size()) + " values, found " +
                           std::to_string(rows[i].size()));

  if (symmetrize_input) return symmetrize(rows);

  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      worst = std::max(worst, std::abs(rows[i][j] - rows[j][i]));
  if (worst > 0.0) {
    std::ostringstream msg;
    msg << "'" << path.string() << "' is not symmetric: max |a_ij - a_ji| = " << worst
        << " (load with symmetrization to repair)";
    throw ValidationError(msg.str());
  }
  return SymmetricMatrix::from_rows(rows);
}

}  // namespace cardqubo
