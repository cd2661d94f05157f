#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plcp/sequence.hpp"

namespace plcp {

// Sequence file format, version 1:
//
//   # field=<p> origin=<0|1> length=<N>
//   <N residues separated by whitespace>      or, for p = 2 only,
//   bits=<N characters from {0,1}>
//
// The writer emits the bits= form for p = 2 and 32 residues per line otherwise.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize_line(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), line_no, start + 1});
  }
  return out;
}

inline std::uint64_t parse_uint(const Token& t, std::size_t offset, const std::string& what) {
  const std::string digits = t.text.substr(offset);
  if (digits.empty() || digits.size() > 18) throw ParseError(t.line, t.column + offset, "expected " + what);
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    char ch = digits[k];
    if (ch < '0' || ch > '9') {
      throw ParseError(t.line, t.column + offset + k, "expected " + what + ", found '" + std::string(1, ch) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

}  // namespace detail

inline CoeffSeq read_sequence(std::istream& in) {
  using detail::Token;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, 1, "empty input; expected header line");
  auto header = detail::tokenize_line(line, 1);
  if (header.empty() || header[0].text != "#") throw ParseError(1, 1, "header must start with '# '");
  if (header.size() != 4) {
    throw ParseError(1, 1, "header must be '# field=<p> origin=<o> length=<N>'");
  }
  const char* keys[] = {"field=", "origin=", "length="};
  std::uint64_t vals[3];
  for (int k = 0; k < 3; ++k) {
    const Token& t = header[static_cast<std::size_t>(k) + 1];
    const std::string key = keys[k];
    if (t.text.rfind(key, 0) != 0) throw ParseError(t.line, t.column, "expected '" + key + "'");
    vals[k] = detail::parse_uint(t, key.size(), "an unsigned integer");
  }
  std::optional<PrimeField> field;
  try {
    field.emplace(static_cast<std::uint32_t>(vals[0]));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, header[1].column, e.what());
  }
  if (vals[1] > 1) throw ParseError(1, header[2].column, "origin must be 0 or 1");
  if (vals[2] == 0) throw ParseError(1, header[3].column, "length must be at least 1");
  const std::size_t n = vals[2];

  std::vector<Residue> terms;
  terms.reserve(n);
  bool bits_form = false;
  std::size_t line_no = 1;
  std::size_t tokens_seen = 0;
  std::size_t last_line = 1, last_col = 1;
  while (std::getline(in, line)) {
    ++line_no;
    for (const Token& t : detail::tokenize_line(line, line_no)) {
      last_line = t.line;
      last_col = t.column + t.text.size();
      ++tokens_seen;
      if (t.text.rfind("bits=", 0) == 0) {
        if (tokens_seen != 1) throw ParseError(t.line, t.column, "bits= must be the only body token");
        if (!field->is_binary()) throw ParseError(t.line, t.column, "bits= form is only valid for field=2");
        bits_form = true;
        for (std::size_t k = 5; k < t.text.size(); ++k) {
          char ch = t.text[k];
          if (ch != '0' && ch != '1') {
            throw ParseError(t.line, t.column + k, "expected 0 or 1, found '" + std::string(1, ch) + "'");
          }
          terms.push_back(static_cast<Residue>(ch - '0'));
        }
        continue;
      }
      if (bits_form) throw ParseError(t.line, t.column, "unexpected token after bits= body");
      std::uint64_t v = detail::parse_uint(t, 0, "a residue");
      if (v >= field->p()) {
        throw ParseError(t.line, t.column, "residue " + t.text + " is not below p = " + std::to_string(field->p()));
      }
      if (terms.size() == n) throw ParseError(t.line, t.column, "more terms than length=" + std::to_string(n));
      terms.push_back(static_cast<Residue>(v));
    }
  }
  if (terms.size() != n) {
    throw ParseError(last_line, last_col,
                     "expected " + std::to_string(n) + " terms, found " + std::to_string(terms.size()));
  }
  return CoeffSeq(*field, std::move(terms), static_cast<unsigned>(vals[1]));
}

inline CoeffSeq read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sequence(in);
}

inline void write_sequence(std::ostream& out, const CoeffSeq& s) {
  out << "# field=" << s.field().p() << " origin=" << s.origin() << " length=" << s.size() << '\n';
  if (s.field().is_binary()) {
    out << "bits=" << s.bitstring() << '\n';
    return;
  }
  std::size_t k = 0;
  for (Residue t : s.terms()) {
    out << t << (++k % 32 == 0 || k == s.size() ? '\n' : ' ');
  }
}

inline std::string format_sequence(const CoeffSeq& s) {
  std::ostringstream os;
  write_sequence(os, s);
  return os.str();
}

inline void write_sequence_file(const std::string& path, const CoeffSeq& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_sequence(out, s);
}

}  // namespace plcp
