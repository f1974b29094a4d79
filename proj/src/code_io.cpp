#include "ldpcball/code_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ldpcball/errors.hpp"

namespace ldpcball {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) lines.pop_back();
  return lines;
}

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected integers");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearCode build_checked(std::size_t n, std::size_t w, std::vector<BitVector> rows) {
  std::vector<bool> covered(n + 1, false);
  for (const auto& r : rows) {
    for (auto i : r.support()) covered[i] = true;
  }
  std::string missing;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!covered[i]) missing += (missing.empty() ? "" : " ") + std::to_string(i);
  }
  if (!missing.empty()) throw ParseError("uncovered coordinates: " + missing);
  return LinearCode(n, w, std::move(rows));
}

}  // namespace

LinearCode parse_code(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty code file");
  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 3) throw ParseError("line 1: expected 'n m w'");
  if (header[0] <= 0 || header[1] < 0 || header[2] <= 0) throw ParseError("line 1: n, w must be positive, m >= 0");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  const auto w = static_cast<std::size_t>(header[2]);
  if (lines.size() != m + 1) {
    throw ParseError("expected " + std::to_string(m) + " support lines, found " + std::to_string(lines.size() - 1));
  }

  std::vector<BitVector> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto line_no = r + 2;
    const auto idx = parse_ints(lines[r + 1], line_no);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (idx.empty()) throw ParseError(where + "empty support");
    BitVector v(n);
    for (auto i : idx) {
      if (i < 1 || static_cast<std::size_t>(i) > n) {
        throw ParseError(where + "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
      }
      if (v.get(static_cast<std::size_t>(i))) throw ParseError(where + "duplicate index " + std::to_string(i));
      v.set(static_cast<std::size_t>(i));
    }
    if (idx.size() > w) {
      throw ParseError(where + "weight " + std::to_string(idx.size()) + " exceeds w=" + std::to_string(w));
    }
    rows.push_back(std::move(v));
  }
  return build_checked(n, w, std::move(rows));
}

LinearCode read_code_file(const std::filesystem::path& path) { return parse_code(read_all(path)); }

std::string format_code(const LinearCode& code) {
  std::string out = std::to_string(code.n()) + " " + std::to_string(code.m()) + " " + std::to_string(code.w()) + "\n";
  for (const auto& v : code.dual_spanning()) {
    bool first = true;
    for (auto i : v.support()) {
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_code_file(const std::filesystem::path& path, const LinearCode& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_code(code);
}

LinearCode parse_alist(std::string_view text) {
  std::vector<long long> tok;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    auto ints = parse_ints(line, line_no);
    tok.insert(tok.end(), ints.begin(), ints.end());
  }
  std::size_t pos = 0;
  auto next = [&](const char* what) -> long long {
    if (pos >= tok.size()) throw ParseError(std::string("alist: truncated while reading ") + what);
    return tok[pos++];
  };

  const auto n_ll = next("N");
  const auto m_ll = next("M");
  if (n_ll <= 0 || m_ll <= 0) throw ParseError("alist: N and M must be positive");
  const auto n = static_cast<std::size_t>(n_ll);
  const auto m = static_cast<std::size_t>(m_ll);
  const auto max_col = next("max column weight");
  const auto max_row = next("max row weight");
  if (max_col < 0 || max_row <= 0) throw ParseError("alist: bad max weights");

  std::vector<long long> col_w(n), row_w(m);
  for (auto& c : col_w) c = next("column weights");
  for (auto& r : row_w) r = next("row weights");

  // Column lists are padded with zeros to max_col entries.
  std::vector<std::set<std::size_t>> col_rows(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (long long k = 0; k < max_col; ++k) {
      const auto r = next("column lists");
      if (r == 0) continue;
      if (r < 0 || static_cast<std::size_t>(r) > m) throw ParseError("alist: row index out of range");
      col_rows[c].insert(static_cast<std::size_t>(r));
    }
    if (static_cast<long long>(col_rows[c].size()) != col_w[c]) {
      throw ParseError("alist: column " + std::to_string(c + 1) + " weight disagrees with its list");
    }
  }

  std::vector<BitVector> rows;
  rows.reserve(m);
  std::size_t w = 0;
  for (std::size_t r = 0; r < m; ++r) {
    BitVector v(n);
    for (long long k = 0; k < max_row; ++k) {
      const auto c = next("row lists");
      if (c == 0) continue;
      if (c < 0 || static_cast<std::size_t>(c) > n) throw ParseError("alist: column index out of range");
      if (v.get(static_cast<std::size_t>(c))) throw ParseError("alist: duplicate column in row " + std::to_string(r + 1));
      v.set(static_cast<std::size_t>(c));
      if (col_rows[static_cast<std::size_t>(c) - 1].count(r + 1) == 0) {
        throw ParseError("alist: row/column lists disagree at row " + std::to_string(r + 1));
      }
    }
    if (static_cast<long long>(v.weight()) != row_w[r]) {
      throw ParseError("alist: row " + std::to_string(r + 1) + " weight disagrees with its list");
    }
    if (v.is_zero()) throw ParseError("alist: row " + std::to_string(r + 1) + " is empty");
    w = std::max(w, v.weight());
    rows.push_back(std::move(v));
  }
  return build_checked(n, w, std::move(rows));
}

LinearCode read_alist_file(const std::filesystem::path& path) { return parse_alist(read_all(path)); }

}  // namespace ldpcball
