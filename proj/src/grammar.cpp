#include "tpa/grammar.hpp"

#include <cctype>
#include <sstream>

namespace tpa {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

struct Token {
  enum Kind { Ident, Punct, End } kind = End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw InputError("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + msg);
  }

  void expect(const std::string& punct) {
    if (current_.kind != Token::Punct || current_.text != punct)
      fail(current_, "expected '" + punct + "', found " + describe(current_));
    advance();
  }

  std::string ident(const std::string& what) {
    if (current_.kind != Token::Ident) fail(current_, "expected " + what + ", found " + describe(current_));
    return take().text;
  }

  bool at(const std::string& punct) const { return current_.kind == Token::Punct && current_.text == punct; }

  static std::string describe(const Token& t) {
    if (t.kind == Token::End) return "end of input";
    return "'" + t.text + "'";
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (ident_char(c)) {
      current_.kind = Token::Ident;
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        current_.text += text_[pos_];
        step();
      }
      return;
    }
    current_.kind = Token::Punct;
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      current_.text = "->";
      step();
      step();
      return;
    }
    if (std::string("{}:;*+-/").find(c) == std::string::npos) {
      current_.text = std::string(1, c);
      fail(current_, "unexpected character '" + current_.text + "'");
    }
    current_.text = std::string(1, c);
    step();
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

PathElement parse_relation(Lexer& lex, const Quiver& q, std::uint64_t field) {
  PathElement rel;
  bool first = true;
  while (true) {
    Scalar sign(1);
    if (lex.at("+") || lex.at("-")) {
      if (lex.take().text == "-") sign = Scalar(-1);
    } else if (!first) {
      break;
    }
    first = false;
    Token start = lex.peek();
    Scalar coeff(1);
    if (start.kind == Token::Ident && all_digits(start.text) && !q.find_arrow(start.text)) {
      std::string c = lex.take().text;
      if (lex.at("/")) {
        lex.take();
        Token den = lex.peek();
        std::string d = lex.ident("denominator");
        if (!all_digits(d)) lex.fail(den, "bad denominator '" + d + "'");
        c += "/" + d;
      }
      try {
        coeff = Scalar::parse(c, field);
      } catch (const Error& e) {
        lex.fail(start, e.what());
      }
      lex.expect("*");
    }
    // Product written right-to-left: "c*b*a" traverses a, b, c.
    std::vector<std::size_t> arrows;
    while (true) {
      Token t = lex.peek();
      std::string name = lex.ident("arrow name");
      auto a = q.find_arrow(name);
      if (!a) lex.fail(t, "unknown arrow '" + name + "'");
      arrows.push_back(*a);
      if (!lex.at("*")) break;
      lex.take();
    }
    Path p{q.arrow(arrows.back()).source, {arrows.rbegin(), arrows.rend()}};
    if (!is_valid_path(q, p)) lex.fail(start, "arrows do not compose");
    rel.add_term(p, sign * coeff);
  }
  return rel;
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) out += ident_char(c) ? c : '_';
  return out.empty() ? "Q" : out;
}

}  // namespace

AlgebraPresentation parse_presentation(const std::string& text, std::uint64_t field) {
  Lexer lex(text);
  Token kw = lex.peek();
  if (lex.ident("'quiver'") != "quiver") lex.fail(kw, "expected 'quiver'");
  std::string name = lex.ident("quiver name");
  lex.expect("{");
  Token vk = lex.peek();
  if (lex.ident("'vertices'") != "vertices") lex.fail(vk, "expected 'vertices'");
  lex.expect(":");
  std::vector<std::string> vertices;
  while (lex.peek().kind == Token::Ident) vertices.push_back(lex.take().text);
  lex.expect(";");
  std::vector<ArrowSpec> arrows;
  if (lex.peek().kind == Token::Ident) {
    Token ak = lex.peek();
    if (lex.ident("'arrows'") != "arrows") lex.fail(ak, "expected 'arrows'");
    lex.expect(":");
    while (lex.peek().kind == Token::Ident) {
      ArrowSpec a;
      a.name = lex.take().text;
      lex.expect(":");
      a.source = lex.ident("source vertex");
      lex.expect("->");
      a.target = lex.ident("target vertex");
      if (!lex.at("}")) lex.expect(";");
      arrows.push_back(a);
    }
  }
  lex.expect("}");
  AlgebraPresentation p;
  try {
    p.quiver = Quiver(name, vertices, arrows);
  } catch (const InputError& e) {
    lex.fail(kw, e.what());
  }
  if (lex.peek().kind == Token::Ident) {
    Token rk = lex.peek();
    if (lex.ident("'relations'") != "relations") lex.fail(rk, "expected 'relations'");
    lex.expect("{");
    while (!lex.at("}")) {
      Token start = lex.peek();
      PathElement r = parse_relation(lex, p.quiver, field);
      if (r.is_zero()) lex.fail(start, "relation is zero");
      if (!r.is_uniform(p.quiver)) lex.fail(start, "relation is not uniform");
      if (r.min_length() < 2) lex.fail(start, "relation has a term of length < 2");
      p.relations.push_back(r);
      if (!lex.at("}")) lex.expect(";");
    }
    lex.expect("}");
  }
  if (lex.peek().kind != Token::End) lex.fail(lex.peek(), "trailing input " + Lexer::describe(lex.peek()));
  return p;
}

std::string render_presentation(const AlgebraPresentation& p) {
  std::ostringstream os;
  const Quiver& q = p.quiver;
  os << "quiver " << sanitize(q.name()) << " {\n  vertices:";
  for (const auto& v : q.vertices()) os << ' ' << v;
  os << ";\n  arrows:";
  for (const auto& a : q.arrows()) os << "\n    " << a.name << ": " << q.vertex(a.source) << " -> " << q.vertex(a.target) << ';';
  os << "\n}\nrelations {\n";
  for (const auto& r : p.relations) os << "  " << render_element(q, r) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tpa
