#include "fractal/family_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fractal/errors.hpp"

namespace fractal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_header(std::string_view line) { return line.find('=') != std::string_view::npos; }

void parse_header(std::string_view line, std::size_t line_no, FamilyBlock& block) {
  std::size_t col = 0;
  while (col < line.size()) {
    while (col < line.size() && line[col] == ' ') ++col;
    if (col >= line.size()) break;
    const std::size_t token_start = col;
    while (col < line.size() && line[col] != ' ') ++col;
    const std::string_view token = line.substr(token_start, col - token_start);
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in header", line_no, token_start + 1);
    const std::string_view key = token.substr(0, eq);
    const std::string_view value = token.substr(eq + 1);
    if (value.empty() || value.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("header value must be a non-negative integer", line_no, token_start + eq + 2);
    }
    const std::size_t number = std::stoul(std::string(value));
    if (key == "n") {
      block.declared_length = number;
    } else if (key == "s") {
      block.declared_size = number;
    } else {
      throw ParseError("unknown header key '" + std::string(key) + "'", line_no, token_start + 1);
    }
  }
}

}  // namespace

std::vector<FamilyBlock> parse_family_blocks(std::string_view text) {
  std::vector<FamilyBlock> blocks(1);
  std::vector<BitVector> rows;
  std::size_t rows_line = 0;
  bool block_has_content = false;

  auto close_code = [&]() {
    if (rows.empty()) return;
    blocks.back().codes.push_back(BitMatrix::from_rows(std::move(rows)));
    rows.clear();
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    const std::size_t indent = static_cast<std::size_t>(std::string_view(raw).find_first_not_of(" \t"));

    if (line.empty()) {
      close_code();
      continue;
    }
    if (line.front() == '#') continue;
    if (line == "---") {
      close_code();
      if (blocks.size() == 2) throw ParseError("at most two families per file", line_no, 1);
      blocks.emplace_back();
      blocks.back().line = line_no + 1;
      block_has_content = false;
      continue;
    }
    if (is_header(line)) {
      if (block_has_content) throw ParseError("header must precede the family's rows", line_no, indent + 1);
      parse_header(line, line_no, blocks.back());
      block_has_content = true;
      continue;
    }

    BitVector row;
    try {
      row = BitVector::from_string(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, indent + e.column());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged rows: length " + std::to_string(row.size()) + " after rows of length " +
                           std::to_string(rows.front().size()) + " (code starting on line " +
                           std::to_string(rows_line) + ")",
                       line_no, indent + 1);
    }
    if (rows.empty()) rows_line = line_no;
    if (!block_has_content) blocks.back().line = line_no;
    rows.push_back(std::move(row));
    block_has_content = true;
  }
  close_code();
  return blocks;
}

std::vector<CodeFamily> parse_families(std::string_view text) {
  std::vector<CodeFamily> out;
  for (const auto& block : parse_family_blocks(text)) {
    if (block.codes.empty()) throw ParseError("family has no codes", block.line, 1);
    std::vector<LinearCode> codes;
    for (const auto& m : block.codes) {
      if (block.declared_length && m.col_count() != *block.declared_length) {
        throw ParseError("header says n=" + std::to_string(*block.declared_length) + " but rows have length " +
                             std::to_string(m.col_count()),
                         block.line, 1);
      }
      codes.push_back(LinearCode::from_rows(m));
    }
    if (block.declared_size && codes.size() != *block.declared_size) {
      throw ParseError("header says s=" + std::to_string(*block.declared_size) + " but the family has " +
                           std::to_string(codes.size()) + " codes",
                       block.line, 1);
    }
    try {
      out.emplace_back(std::move(codes));
    } catch (const Error& e) {
      throw ParseError(e.what(), block.line, 1);
    }
  }
  return out;
}

LinearCode parse_single_code(std::string_view text) {
  auto blocks = parse_family_blocks(text);
  if (blocks.size() != 1) throw ParseError("expected a single generator block, found a family separator");
  const auto& block = blocks.front();
  if (block.codes.size() > 1) throw ParseError("expected a single generator block", block.line, 1);
  if (block.codes.empty()) {
    if (!block.declared_length) throw ParseError("no rows and no n=<length> header", block.line, 1);
    return LinearCode::zero(*block.declared_length);
  }
  const auto& m = block.codes.front();
  if (block.declared_length && m.col_count() != *block.declared_length) {
    throw ParseError("header says n=" + std::to_string(*block.declared_length) + " but rows have length " +
                         std::to_string(m.col_count()),
                     block.line, 1);
  }
  return LinearCode::from_rows(m);
}

std::string format_family(const CodeFamily& f) {
  std::string s = "n=" + std::to_string(f.length()) + " s=" + std::to_string(f.size()) + "\n";
  for (std::size_t i = 1; i <= f.size(); ++i) {
    if (i != 1) s += '\n';
    s += f.code(i).generator().to_string();
  }
  return s;
}

std::string format_families(const CodeFamily& c, const CodeFamily& d) {
  return format_family(c) + "---\n" + format_family(d);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fractal
