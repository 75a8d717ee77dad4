#include "uasc/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace uasc {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      t.text += text[i];
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (done()) throw ParseError("unexpected end of file", last_line(), 1);
    return tokens_[pos_];
  }

  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }

  int next_int(const std::string& what) {
    Token t = next();
    try {
      std::size_t used = 0;
      int v = std::stoi(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected " + what + ", got '" + t.text + "'", t.line,
                       t.column);
    }
  }

  int last_line() const {
    return tokens_.empty() ? 1 : tokens_.back().line;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<NamedAlgebra> parse_algebra_file(const std::string& text) {
  Reader r(tokenize(text));
  std::vector<NamedAlgebra> out;
  std::set<std::string> names;

  while (!r.done()) {
    Token kw = r.next();
    if (kw.text != "algebra")
      throw ParseError("expected 'algebra', got '" + kw.text + "'", kw.line,
                       kw.column);
    Token name = r.next();
    if (!names.insert(name.text).second)
      throw ParseError("duplicate algebra name '" + name.text + "'", name.line,
                       name.column);

    Token szkw = r.next();
    if (szkw.text != "size")
      throw ParseError("expected 'size', got '" + szkw.text + "'", szkw.line,
                       szkw.column);
    int size = r.next_int("carrier size");
    if (size < 1)
      throw ParseError("size must be at least 1", szkw.line, szkw.column);

    FiniteAlgebra alg;
    alg.size = size;
    while (!r.done() && r.peek().text == "op") {
      Token opkw = r.next();
      Token opname = r.next();
      int arity = r.next_int("arity");
      if (arity < 0)
        throw ParseError("arity must be non-negative", opkw.line, opkw.column);
      alg.sig.symbols.push_back({opname.text, arity});
      std::size_t cells = 1;
      for (int j = 0; j < arity; ++j) cells *= static_cast<std::size_t>(size);
      std::vector<int> tbl(cells);
      for (std::size_t cidx = 0; cidx < cells; ++cidx)
        tbl[cidx] = r.next_int("table value");
      alg.tables.push_back(std::move(tbl));
    }

    if (!out.empty() && !(alg.sig == out.front().algebra.sig))
      throw ParseError("signature mismatch: block '" + name.text +
                           "' must list the same operations as '" +
                           out.front().name + "'",
                       kw.line, kw.column);

    auto defects = validate(alg);
    if (!defects.empty()) {
      std::string msg = "algebra '" + name.text + "' is invalid:";
      for (const auto& d : defects) {
        msg += " [" + d.symbol + "] " + d.message;
        if (d.position >= 0) msg += " at entry " + std::to_string(d.position);
        msg += ";";
      }
      throw ParseError(msg, kw.line, kw.column);
    }
    out.push_back({name.text, std::move(alg)});
  }
  if (out.empty()) throw ParseError("no algebra blocks", 1, 1);
  return out;
}

std::vector<NamedAlgebra> load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

}  // namespace uasc
