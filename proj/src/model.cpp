#include "multirel/model.hpp"

#include <optional>

namespace multirel {

namespace {

std::string positioned(std::size_t line, std::size_t column, const std::string& message) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '\'' || u >= 0x80;
}

bool is_label_char(char c) {
  return !is_space(c) && c != '{' && c != '}' && c != ',' && c != '#' && c != '(' && c != ')' &&
         c != '=' && c != ':';
}

// Cursor over one line (comment and CR already stripped).
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    throw ParseError(code, line_, column(), message);
  }

  bool accept(std::string_view literal) {
    skip_space();
    if (text_.substr(pos_).starts_with(literal)) {
      pos_ += literal.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view literal) {
    if (!accept(literal)) fail(ErrorCode::syntax_error, "expected '" + std::string(literal) + "'");
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(ErrorCode::syntax_error, "expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_]) &&
           !text_.substr(pos_).starts_with("->")) {
      ++pos_;
    }
    if (start == pos_) fail(ErrorCode::syntax_error, "expected an element label");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool starts_keyword(std::string_view line, std::string_view keyword) {
  std::size_t p = 0;
  while (p < line.size() && is_space(line[p])) ++p;
  line.remove_prefix(p);
  return line.starts_with(keyword) &&
         (line.size() == keyword.size() || is_space(line[keyword.size()]));
}

}  // namespace

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, positioned(line, column, message)), line_(line), column_(column) {}

const Carrier* Model::find_carrier(std::string_view name) const {
  for (const auto& c : carriers) {
    if (c.name() == name) return &c;
  }
  return nullptr;
}

const Multirelation* Model::find_mrel(std::string_view name) const {
  for (const auto& m : mrels) {
    if (m.name == name) return &m.rel;
  }
  return nullptr;
}

Model parse_model(std::string_view text) {
  Model model;
  std::size_t line_no = 0;
  std::optional<std::size_t> current;  // index into model.mrels

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    LineScanner scan(line, line_no);
    if (scan.at_end()) continue;

    if (starts_keyword(line, "carrier")) {
      scan.expect("carrier");
      const std::size_t name_col = scan.column() + 1;
      std::string name = scan.name();
      if (model.find_carrier(name)) {
        throw ParseError(ErrorCode::duplicate_name, line_no, name_col,
                         "carrier '" + name + "' declared twice");
      }
      scan.expect("=");
      std::vector<std::string> elems;
      while (!scan.at_end()) elems.push_back(scan.label());
      try {
        model.carriers.push_back(mk_carrier(std::move(name), std::move(elems)));
      } catch (const Error& e) {
        scan.fail(e.code(), e.what());
      }
      continue;
    }

    if (starts_keyword(line, "mrel")) {
      scan.expect("mrel");
      std::string name = scan.name();
      for (const auto& m : model.mrels) {
        if (m.name == name) scan.fail(ErrorCode::duplicate_name, "mrel '" + name + "' declared twice");
      }
      scan.expect(":");
      const std::string src_name = scan.name();
      const Carrier* src = model.find_carrier(src_name);
      if (!src) scan.fail(ErrorCode::unknown_carrier, "unknown carrier '" + src_name + "'");
      scan.expect("->");
      scan.expect("P");
      scan.expect("(");
      const std::string base_name = scan.name();
      const Carrier* base = model.find_carrier(base_name);
      if (!base) scan.fail(ErrorCode::unknown_carrier, "unknown carrier '" + base_name + "'");
      scan.expect(")");
      if (!scan.at_end()) scan.fail(ErrorCode::syntax_error, "unexpected text after mrel header");
      try {
        model.mrels.push_back({std::move(name), Multirelation(*src, *base)});
      } catch (const Error& e) {
        scan.fail(e.code(), e.what());
      }
      current = model.mrels.size() - 1;
      continue;
    }

    if (!current) scan.fail(ErrorCode::syntax_error, "pair line outside of an mrel block");
    Multirelation& rel = model.mrels[*current].rel;
    const Carrier& base = rel.target_base();

    const std::string x = scan.label();
    const auto xi = rel.source().index_of(x);
    if (!xi) {
      scan.fail(ErrorCode::unknown_element, "'" + x + "' is not in " + rel.source().name());
    }
    scan.expect("->");
    scan.expect("{");
    std::size_t mask = 0;
    if (!scan.accept("}")) {
      do {
        const std::string y = scan.label();
        const auto yi = base.index_of(y);
        if (!yi) scan.fail(ErrorCode::unknown_element, "'" + y + "' is not in " + base.name());
        mask |= std::size_t{1} << *yi;
      } while (scan.accept(","));
      scan.expect("}");
    }
    if (!scan.at_end()) scan.fail(ErrorCode::syntax_error, "unexpected text after pair");
    rel.set(*xi, mask);
  }
  return model;
}

std::string render_mrel(std::string_view name, const Multirelation& rel) {
  std::string out = "mrel " + std::string(name) + " : " + rel.source().name() + " -> P(" +
                    rel.target_base().name() + ")\n";
  for (const auto& [i, j] : rel.pairs()) {
    out += rel.source().label(i) + " -> " + rel.target().label(j) + "\n";
  }
  return out;
}

std::string render_model(const Model& model) {
  std::string out;
  for (const auto& c : model.carriers) {
    out += "carrier " + c.name() + " =";
    for (const auto& e : c.elements()) out += " " + e;
    out += "\n";
  }
  for (const auto& m : model.mrels) {
    out += "\n";
    out += render_mrel(m.name, m.rel);
  }
  return out;
}

}  // namespace multirel
