#include "smx/textio.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "smx/error.hpp"

namespace smx {

namespace {

constexpr std::string_view kUnionGlyph = "\xE2\x88\xAA";  // ∪

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct EntryRow {
  std::vector<Rational> entries;
  std::vector<std::ptrdiff_t> cuts;
  Position where;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SuperNMatrix run() {
    skip_blank();
    if (at_end()) {
      throw ParseError(ErrorKind::EmptyInput, 1, 1, "no matrix in input");
    }
    std::vector<SuperMatrix> components;
    while (true) {
      skip_blank();
      if (peek() != '[') fail("expected '['");
      advance();
      components.push_back(component());
      rest_of_line_blank("after ']'");
      skip_blank();
      if (at_end()) break;
      separator();
    }
    return SuperNMatrix(std::move(components));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) {
      if (text_[pos_] == '\n') {
        ++here_.line;
        here_.column = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++here_.column;  // count code points, not continuation bytes
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const { fail(here_, message); }
  [[noreturn]] void fail(Position at, const std::string& message,
                         ErrorKind kind = ErrorKind::ParseError) const {
    throw ParseError(kind, at.line, at.column, message);
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  void skip_spaces() {
    while (!at_end() && is_space(peek())) advance();
  }

  void skip_blank() {
    while (!at_end() && (is_space(peek()) || peek() == '\n')) advance();
  }

  void rest_of_line_blank(const char* context) {
    skip_spaces();
    if (!at_end() && peek() != '\n') fail(std::string("unexpected text ") + context);
  }

  void separator() {
    const Position at = here_;
    if (text_.substr(pos_, 1) == "U") {
      advance();
    } else if (text_.substr(pos_, kUnionGlyph.size()) == kUnionGlyph) {
      advance(kUnionGlyph.size());
    } else {
      fail(at, "expected a 'U' line between components");
    }
    rest_of_line_blank("after the union separator");
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = peek();
      if (is_space(c) || c == '\n' || c == ';' || c == '|' || c == ']' || c == '[') break;
      advance();
    }
    return text_.substr(start, pos_ - start);
  }

  static bool is_rule(std::string_view w) {
    const auto dashes = std::count(w.begin(), w.end(), '-');
    return dashes >= 2 && std::all_of(w.begin(), w.end(), [](char c) { return c == '-' || c == '+'; });
  }

  SuperMatrix component() {
    const Position open = here_;
    std::vector<EntryRow> rows;
    std::vector<std::ptrdiff_t> row_cuts;

    enum class Kind { Entry, Bar, Rule };
    struct Token {
      Kind kind;
      Position where;
      std::optional<Rational> value;
    };
    std::vector<Token> line;

    const auto finish_row = [&]() {
      if (line.empty()) return;
      const bool has_rule = std::any_of(line.begin(), line.end(),
                                        [](const Token& t) { return t.kind == Kind::Rule; });
      if (has_rule) {
        for (const auto& t : line) {
          if (t.kind != Kind::Rule) fail(t.where, "row cut line mixed with entries");
        }
        const auto at = static_cast<std::ptrdiff_t>(rows.size());
        if (rows.empty()) fail(line.front().where, "row cut before the first row");
        if (!row_cuts.empty() && row_cuts.back() == at) {
          fail(line.front().where, "repeated row cut");
        }
        row_cuts.push_back(at);
        line.clear();
        return;
      }
      EntryRow row;
      row.where = line.front().where;
      bool bar_pending = false;
      for (const auto& t : line) {
        if (t.kind == Kind::Bar) {
          if (row.entries.empty()) fail(t.where, "column cut before the first entry");
          if (bar_pending) fail(t.where, "repeated column cut");
          row.cuts.push_back(static_cast<std::ptrdiff_t>(row.entries.size()));
          bar_pending = true;
        } else {
          row.entries.push_back(*t.value);
          bar_pending = false;
        }
      }
      if (bar_pending) fail(line.back().where, "column cut after the last entry");
      rows.push_back(std::move(row));
      line.clear();
    };

    while (true) {
      skip_spaces();
      if (at_end()) fail(open, "unterminated component: missing ']'");
      const char c = peek();
      const Position at = here_;
      if (c == '\n' || c == ';') {
        finish_row();
        advance();
      } else if (c == ']') {
        finish_row();
        advance();
        break;
      } else if (c == '[') {
        fail("unexpected '[' inside a component");
      } else if (c == '|') {
        line.push_back({Kind::Bar, at, std::nullopt});
        advance();
      } else {
        const auto w = word();
        if (is_rule(w)) {
          line.push_back({Kind::Rule, at, std::nullopt});
        } else if (auto value = Rational::parse(w)) {
          line.push_back({Kind::Entry, at, std::move(value)});
        } else {
          fail(at, "malformed scalar '" + std::string(w) + "'");
        }
      }
    }

    if (rows.empty()) fail(open, "empty component");
    if (!row_cuts.empty() && row_cuts.back() == static_cast<std::ptrdiff_t>(rows.size())) {
      fail(here_, "row cut after the last row");
    }
    const auto& first = rows.front();
    for (const auto& r : rows) {
      if (r.entries.size() != first.entries.size()) {
        fail(r.where,
             "row has " + std::to_string(r.entries.size()) + " entries, expected " +
                 std::to_string(first.entries.size()),
             ErrorKind::RaggedRows);
      }
      if (r.cuts != first.cuts) {
        fail(r.where, "'|' positions differ from the first row", ErrorKind::InconsistentCuts);
      }
    }

    std::vector<Rational> entries;
    entries.reserve(rows.size() * first.entries.size());
    for (auto& r : rows) {
      entries.insert(entries.end(), r.entries.begin(), r.entries.end());
    }
    DenseMatrix data(rows.size(), first.entries.size(), std::move(entries));
    try {
      return make_super(std::move(data), row_cuts, first.cuts);
    } catch (const Error& e) {
      fail(open, e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Position here_;
};

void append_component(std::string& out, const SuperMatrix& s) {
  const auto& m = s.data();
  std::vector<std::string> cells;
  cells.reserve(m.entries().size());
  for (const auto& x : m.entries()) cells.push_back(x.to_string());

  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      width[j] = std::max(width[j], cells[i * m.cols() + j].size());
    }
  }
  const auto& col_cuts = s.col_partition().cuts();
  const auto& row_cuts = s.row_partition().cuts();

  const auto body = [&](std::size_t i) {
    std::string line;
    std::size_t next_cut = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        if (next_cut < col_cuts.size() && col_cuts[next_cut] == j) {
          line += " | ";
          ++next_cut;
        } else {
          line += ' ';
        }
      }
      const auto& cell = cells[i * m.cols() + j];
      line.append(width[j] - cell.size(), ' ');
      line += cell;
    }
    return line;
  };

  std::string rule = body(0);
  for (auto& ch : rule) ch = ch == '|' ? '+' : '-';
  if (rule.size() < 2) rule.append(2 - rule.size(), '-');

  std::size_t next_row_cut = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (next_row_cut < row_cuts.size() && row_cuts[next_row_cut] == i) {
      out += "  " + rule + "\n";
      ++next_row_cut;
    }
    out += i == 0 ? "[ " : "  ";
    out += body(i);
    if (i + 1 == m.rows()) out += " ]";
    out += '\n';
  }
}

}  // namespace

SuperNMatrix parse(std::string_view text) { return Parser(text).run(); }

std::string format(const SuperNMatrix& u) {
  std::string out;
  for (std::size_t k = 0; k < u.arity(); ++k) {
    if (k > 0) out += "U\n";
    append_component(out, u.components()[k]);
  }
  return out;
}

std::string format(const SuperMatrix& s) { return format(SuperNMatrix({s})); }

}  // namespace smx
