#include "uasc/term.hpp"

#include <algorithm>
#include <cctype>

namespace uasc {

Term Term::var(int index) {
  Term t;
  t.var_ = index;
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  Term t;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

int Term::node_count() const {
  if (is_var()) return 1;
  int n = 1;
  for (const auto& a : args_) n += a.node_count();
  return n;
}

int Term::depth() const {
  if (is_var() || args_.empty()) return 0;
  int d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

int Term::max_var() const {
  if (is_var()) return var_;
  int m = -1;
  for (const auto& a : args_) m = std::max(m, a.max_var());
  return m;
}

void Term::collect_vars(std::vector<int>& out) const {
  if (is_var()) {
    out.push_back(var_);
    return;
  }
  for (const auto& a : args_) a.collect_vars(out);
}

int Term::compare(const Term& a, const Term& b) {
  int na = a.node_count(), nb = b.node_count();
  if (na != nb) return na < nb ? -1 : 1;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (a.is_var()) {
    if (a.var_ != b.var_) return a.var_ < b.var_ ? -1 : 1;
    return 0;
  }
  if (int c = a.symbol_.compare(b.symbol_); c != 0) return c < 0 ? -1 : 1;
  for (std::size_t i = 0; i < a.args_.size() && i < b.args_.size(); ++i)
    if (int c = compare(a.args_[i], b.args_[i]); c != 0) return c;
  if (a.args_.size() != b.args_.size())
    return a.args_.size() < b.args_.size() ? -1 : 1;
  return 0;
}

std::string Term::to_string() const {
  if (is_var()) return "x" + std::to_string(var_);
  if (args_.empty()) return symbol_;
  std::string s = symbol_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) s += ",";
    s += args_[i].to_string();
  }
  s += ")";
  return s;
}

std::string Equation::to_string() const {
  return lhs.to_string() + " = " + rhs.to_string();
}

std::vector<int> QuasiIdentity::variables() const {
  std::vector<int> vars;
  for (const auto& p : premises) {
    p.lhs.collect_vars(vars);
    p.rhs.collect_vars(vars);
  }
  conclusion.lhs.collect_vars(vars);
  conclusion.rhs.collect_vars(vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string QuasiIdentity::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i) s += " & ";
    s += premises[i].to_string();
  }
  if (!premises.empty()) s += " => ";
  s += conclusion.to_string();
  return s;
}

namespace {

/// Single-line recursive descent parser for terms and quasi-identities.
class Parser {
 public:
  Parser(const std::string& text, const Signature& sig)
      : text_(text), sig_(sig) {}

  Term term() {
    skip_ws();
    int start = pos_;
    std::string name = identifier();
    // x<digits> is a variable, everything else a signature symbol
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      try {
        return Term::var(std::stoi(name.substr(1)));
      } catch (const std::exception&) {
        fail("variable index out of range", start);
      }
    }
    int op = sig_.find(name);
    if (op < 0) fail("unknown symbol '" + name + "'", start);
    int arity = sig_.arity(op);
    std::vector<Term> args;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      args.push_back(term());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        args.push_back(term());
        skip_ws();
      }
      expect(')');
    }
    if (static_cast<int>(args.size()) != arity)
      fail("symbol '" + name + "' expects " + std::to_string(arity) +
               " arguments, got " + std::to_string(args.size()),
           start);
    return Term::app(std::move(name), std::move(args));
  }

  Equation equation() {
    Term lhs = term();
    skip_ws();
    if (peek() == '=' && peek(1) != '>') {
      ++pos_;
    } else {
      fail("expected '='", pos_);
    }
    Term rhs = term();
    return Equation{std::move(lhs), std::move(rhs)};
  }

  QuasiIdentity quasi_identity() {
    std::vector<Equation> eqs;
    eqs.push_back(equation());
    skip_ws();
    while (peek() == '&') {
      ++pos_;
      eqs.push_back(equation());
      skip_ws();
    }
    QuasiIdentity q;
    if (peek() == '=' && peek(1) == '>') {
      pos_ += 2;
      q.premises = std::move(eqs);
      q.conclusion = equation();
    } else {
      if (eqs.size() != 1) fail("expected '=>'", pos_);
      q.conclusion = std::move(eqs.front());
    }
    return q;
  }

  void finish() {
    skip_ws();
    if (pos_ != static_cast<int>(text_.size()))
      fail("trailing input", pos_);
  }

 private:
  char peek(int ahead = 0) const {
    std::size_t i = static_cast<std::size_t>(pos_ + ahead);
    return i < text_.size() ? text_[i] : '\0';
  }

  void skip_ws() {
    while (pos_ < static_cast<int>(text_.size()) &&
           std::isspace(static_cast<unsigned char>(text_[static_cast<std::size_t>(pos_)])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    int start = pos_;
    auto alpha = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
    auto alnum = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    if (pos_ >= static_cast<int>(text_.size()) ||
        !alpha(static_cast<unsigned char>(text_[static_cast<std::size_t>(pos_)])))
      fail("expected identifier", pos_);
    while (pos_ < static_cast<int>(text_.size()) &&
           alnum(static_cast<unsigned char>(text_[static_cast<std::size_t>(pos_)])))
      ++pos_;
    return text_.substr(static_cast<std::size_t>(start),
                        static_cast<std::size_t>(pos_ - start));
  }

  [[noreturn]] void fail(const std::string& msg, int at) const {
    throw ParseError(msg, 1, at + 1);
  }

  const std::string& text_;
  const Signature& sig_;
  int pos_ = 0;
};

}  // namespace

QuasiIdentity parse_quasi_identity(const std::string& text,
                                   const Signature& sig) {
  Parser p(text, sig);
  QuasiIdentity q = p.quasi_identity();
  p.finish();
  return q;
}

Term parse_term(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  Term t = p.term();
  p.finish();
  return t;
}

std::vector<QuasiIdentity> parse_quasi_identity_lines(const std::string& text,
                                                      const Signature& sig) {
  std::vector<QuasiIdentity> out;
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (!blank) {
      try {
        out.push_back(parse_quasi_identity(line, sig));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, e.column());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int eval_term(const FiniteAlgebra& alg, const Term& t,
              std::span<const int> assignment) {
  if (t.is_var()) {
    int v = t.var_index();
    if (v < 0 || static_cast<std::size_t>(v) >= assignment.size())
      throw Error("unbound variable x" + std::to_string(v));
    return assignment[static_cast<std::size_t>(v)];
  }
  int op = alg.sig.find(t.symbol());
  if (op < 0) throw Error("unknown symbol '" + t.symbol() + "'");
  if (alg.sig.arity(op) != static_cast<int>(t.args().size()))
    throw Error("arity mismatch for '" + t.symbol() + "'");
  std::vector<int> args(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i)
    args[i] = eval_term(alg, t.args()[i], assignment);
  return alg.apply(op, args);
}

namespace {

/// Terms flattened to postfix programs so satisfaction loops do not chase
/// names or recurse.
struct Compiled {
  struct Ins {
    int op = -1;   // -1: push variable slot
    int slot = 0;  // variable slot or arity
  };
  std::vector<Ins> code;
};

void compile_into(const Term& t, const FiniteAlgebra& alg,
                  const std::vector<int>& var_slot, Compiled& out) {
  if (t.is_var()) {
    out.code.push_back({-1, var_slot[static_cast<std::size_t>(t.var_index())]});
    return;
  }
  int op = alg.sig.find(t.symbol());
  if (op < 0) throw Error("unknown symbol '" + t.symbol() + "'");
  if (alg.sig.arity(op) != static_cast<int>(t.args().size()))
    throw Error("arity mismatch for '" + t.symbol() + "'");
  for (const auto& a : t.args()) compile_into(a, alg, var_slot, out);
  out.code.push_back({op, alg.sig.arity(op)});
}

int run(const Compiled& c, const FiniteAlgebra& alg,
        std::span<const int> slots, std::vector<int>& stack) {
  stack.clear();
  for (const auto& ins : c.code) {
    if (ins.op < 0) {
      stack.push_back(slots[static_cast<std::size_t>(ins.slot)]);
    } else {
      std::size_t base = stack.size() - static_cast<std::size_t>(ins.slot);
      int v = alg.apply(ins.op, {stack.data() + base,
                                 static_cast<std::size_t>(ins.slot)});
      stack.resize(base);
      stack.push_back(v);
    }
  }
  return stack.back();
}

}  // namespace

AlgebraCheck holds_in_algebra(const FiniteAlgebra& alg, const QuasiIdentity& q,
                              const Limits& limits) {
  std::vector<int> vars = q.variables();
  const int k = static_cast<int>(vars.size());
  std::vector<int> var_slot(vars.empty() ? 0
                                         : static_cast<std::size_t>(vars.back()) + 1,
                            -1);
  for (int i = 0; i < k; ++i)
    var_slot[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])] = i;

  std::vector<std::pair<Compiled, Compiled>> premises;
  for (const auto& p : q.premises) {
    std::pair<Compiled, Compiled> c;
    compile_into(p.lhs, alg, var_slot, c.first);
    compile_into(p.rhs, alg, var_slot, c.second);
    premises.push_back(std::move(c));
  }
  Compiled clhs, crhs;
  compile_into(q.conclusion.lhs, alg, var_slot, clhs);
  compile_into(q.conclusion.rhs, alg, var_slot, crhs);

  double space = 1;
  for (int i = 0; i < k; ++i) space *= alg.size;
  if (space > static_cast<double>(limits.assignment_cap))
    throw CapacityError("assignment space exceeds cap", limits.assignment_cap,
                        static_cast<std::size_t>(space));

  std::vector<int> slots(static_cast<std::size_t>(k), 0);
  std::vector<int> stack;
  while (true) {
    bool premises_hold = true;
    for (const auto& [l, r] : premises)
      if (run(l, alg, slots, stack) != run(r, alg, slots, stack)) {
        premises_hold = false;
        break;
      }
    if (premises_hold &&
        run(clhs, alg, slots, stack) != run(crhs, alg, slots, stack)) {
      AlgebraCheck out;
      out.holds = false;
      for (int i = 0; i < k; ++i)
        out.falsifying_assignment.emplace_back(vars[static_cast<std::size_t>(i)],
                                               slots[static_cast<std::size_t>(i)]);
      return out;
    }
    int j = k - 1;
    while (j >= 0 && ++slots[static_cast<std::size_t>(j)] == alg.size) {
      slots[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return {};
}

}  // namespace uasc
