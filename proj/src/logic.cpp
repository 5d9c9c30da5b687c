#include "girard/logic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace girard {

Formula Formula::clone() const {
  Formula f;
  f.kind = kind;
  f.atom = atom;
  if (lhs) f.lhs = std::make_unique<Formula>(lhs->clone());
  if (rhs) f.rhs = std::make_unique<Formula>(rhs->clone());
  return f;
}

bool Formula::operator==(const Formula& other) const {
  if (kind != other.kind || atom != other.atom) return false;
  if (static_cast<bool>(lhs) != static_cast<bool>(other.lhs)) return false;
  if (static_cast<bool>(rhs) != static_cast<bool>(other.rhs)) return false;
  if (lhs && !(*lhs == *other.lhs)) return false;
  if (rhs && !(*rhs == *other.rhs)) return false;
  return true;
}

namespace {

struct Token {
  enum class Kind { Atom, One, Zero, Bot, Top, Star, Pipe, Tilde, Caret,
                    LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t column;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'))
      ++pos_;
    size_t col = pos_ + 1;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", col};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      ++pos_;
      current_ = {k, std::string(1, c), col};
    };
    if (c == '*') return single(Token::Kind::Star);
    if (c == '|') return single(Token::Kind::Pipe);
    if (c == '~') return single(Token::Kind::Tilde);
    if (c == '^') return single(Token::Kind::Caret);
    if (c == '(') return single(Token::Kind::LParen);
    if (c == ')') return single(Token::Kind::RParen);
    if (c == '1') return single(Token::Kind::One);
    if (c == '0') return single(Token::Kind::Zero);
    // Unicode aliases for tensor and par.
    if (text_.substr(pos_).starts_with("⊗")) {
      pos_ += 3;
      current_ = {Token::Kind::Star, "⊗", col};
      return;
    }
    if (text_.substr(pos_).starts_with("⅋")) {
      pos_ += 3;
      current_ = {Token::Kind::Pipe, "⅋", col};
      return;
    }
    if (c >= 'a' && c <= 'z') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9')))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "bot")
        current_ = {Token::Kind::Bot, word, col};
      else if (word == "top")
        current_ = {Token::Kind::Top, word, col};
      else
        current_ = {Token::Kind::Atom, word, col};
      return;
    }
    throw ParseError("unknown token '" + std::string(1, c) + "'", col);
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token current_{Token::Kind::End, "", 1};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = parse_par();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End)
      throw ParseError("unexpected '" + t.text + "'", t.column);
    return f;
  }

 private:
  Formula parse_par() {
    Formula f = parse_tensor();
    while (lex_.peek().kind == Token::Kind::Pipe) {
      lex_.take();
      Formula g = parse_tensor();
      Formula p;
      p.kind = Formula::Kind::Par;
      p.lhs = std::make_unique<Formula>(std::move(f));
      p.rhs = std::make_unique<Formula>(std::move(g));
      f = std::move(p);
    }
    return f;
  }

  Formula parse_tensor() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      Formula g = parse_unary();
      Formula p;
      p.kind = Formula::Kind::Tensor;
      p.lhs = std::make_unique<Formula>(std::move(f));
      p.rhs = std::make_unique<Formula>(std::move(g));
      f = std::move(p);
    }
    return f;
  }

  Formula parse_unary() {
    if (lex_.peek().kind == Token::Kind::Tilde) {
      lex_.take();
      Formula inner = parse_unary();
      Formula n;
      n.kind = Formula::Kind::Neg;
      n.lhs = std::make_unique<Formula>(std::move(inner));
      return n;
    }
    Formula f = parse_primary();
    while (lex_.peek().kind == Token::Kind::Caret) {
      lex_.take();
      Formula n;
      n.kind = Formula::Kind::Neg;
      n.lhs = std::make_unique<Formula>(std::move(f));
      f = std::move(n);
    }
    return f;
  }

  Formula parse_primary() {
    Token t = lex_.take();
    Formula f;
    switch (t.kind) {
      case Token::Kind::Atom:
        f.kind = Formula::Kind::Atom;
        f.atom = t.text;
        return f;
      case Token::Kind::One:
        f.kind = Formula::Kind::One;
        return f;
      case Token::Kind::Zero:
        f.kind = Formula::Kind::Zero;
        return f;
      case Token::Kind::Bot:
        f.kind = Formula::Kind::Bottom;
        return f;
      case Token::Kind::Top:
        f.kind = Formula::Kind::Top;
        return f;
      case Token::Kind::LParen: {
        Formula inner = parse_par();
        const Token& close = lex_.peek();
        if (close.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", close.column);
        lex_.take();
        return inner;
      }
      case Token::Kind::End:
        throw ParseError("unexpected end of formula", t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.column);
    }
  }

  Lexer lex_;
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Par:
      return 1;
    case Formula::Kind::Tensor:
      return 2;
    case Formula::Kind::Neg:
      return 3;
    default:
      return 4;
  }
}

void print_rec(const Formula& f, std::string& out, int parent_prec,
               bool right_slot) {
  int prec = precedence(f.kind);
  // Left-associative binary operators need parens in the right slot at
  // equal precedence.
  bool parens =
      prec < parent_prec || (prec == parent_prec && right_slot && prec <= 2);
  if (parens) out += '(';
  switch (f.kind) {
    case Formula::Kind::Atom:
      out += f.atom;
      break;
    case Formula::Kind::One:
      out += '1';
      break;
    case Formula::Kind::Zero:
      out += '0';
      break;
    case Formula::Kind::Bottom:
      out += "bot";
      break;
    case Formula::Kind::Top:
      out += "top";
      break;
    case Formula::Kind::Neg:
      out += '~';
      print_rec(*f.lhs, out, prec, false);
      break;
    case Formula::Kind::Tensor:
      print_rec(*f.lhs, out, prec, false);
      out += " * ";
      print_rec(*f.rhs, out, prec, true);
      break;
    case Formula::Kind::Par:
      print_rec(*f.lhs, out, prec, false);
      out += " | ";
      print_rec(*f.rhs, out, prec, true);
      break;
  }
  if (parens) out += ')';
}

void collect_rec(const Formula& f, std::set<std::string>& atoms) {
  if (f.kind == Formula::Kind::Atom) atoms.insert(f.atom);
  if (f.lhs) collect_rec(*f.lhs, atoms);
  if (f.rhs) collect_rec(*f.rhs, atoms);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out, 0, false);
  return out;
}

std::vector<std::string> collect_atoms(const Formula& f) {
  std::set<std::string> atoms;
  collect_rec(f, atoms);
  return {atoms.begin(), atoms.end()};
}

LogicModel::LogicModel(Quantale quantale, int dualizing)
    : q(std::move(quantale)), unit(-1), dualizer(dualizing) {
  if (!is_cyclic_element(q, dualizer) || !is_dualizing_element(q, dualizer))
    throw std::invalid_argument(
        "model element is not cyclic dualizing: " + q.lat().label(dualizer));
  perp.resize(q.size());
  for (int a = 0; a < q.size(); ++a)
    perp[a] = residual_right(q, a, dualizer);
  // e = d^ is the unit of a Girard quantale.
  unit = perp[dualizer];
  for (int a = 0; a < q.size(); ++a)
    if (q.mul(unit, a) != a || q.mul(a, unit) != a)
      throw std::logic_error("derived unit is not neutral");
}

LogicModel LogicModel::from_girard(const GirardQuantale& g) {
  return LogicModel(g.g, g.dualizer);
}

int eval_formula(const Formula& f, const LogicModel& m, const Valuation& v) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.atom);
      if (it == v.end())
        throw std::invalid_argument("atom '" + f.atom + "' has no value");
      return it->second;
    }
    case Formula::Kind::One:
      return m.unit;
    case Formula::Kind::Bottom:
      return m.dualizer;
    case Formula::Kind::Zero:
      return m.q.lat().bottom();
    case Formula::Kind::Top:
      return m.q.lat().top();
    case Formula::Kind::Neg:
      return m.perp[eval_formula(*f.lhs, m, v)];
    case Formula::Kind::Tensor:
      return m.q.mul(eval_formula(*f.lhs, m, v), eval_formula(*f.rhs, m, v));
    case Formula::Kind::Par: {
      int a = eval_formula(*f.lhs, m, v);
      int b = eval_formula(*f.rhs, m, v);
      return m.perp[m.q.mul(m.perp[b], m.perp[a])];
    }
  }
  throw std::logic_error("unreachable formula kind");
}

bool is_valid(const Formula& f, const LogicModel& m, const Valuation& v) {
  return m.q.lat().leq(m.unit, eval_formula(f, m, v));
}

TautologyResult is_tautology(const Formula& f, const LogicModel& m,
                             const Budget& budget) {
  std::vector<std::string> atoms = collect_atoms(f);
  double combos = std::pow(static_cast<double>(m.q.size()),
                           static_cast<double>(atoms.size()));
  require_budget(combos <= static_cast<double>(budget.sup_map_candidates),
                 std::to_string(combos) + " valuations");
  std::vector<int> assign(atoms.size(), 0);
  TautologyResult res;
  while (true) {
    Valuation v;
    for (size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = assign[i];
    if (!is_valid(f, m, v)) {
      res.tautology = false;
      res.counterexample = v;
      return res;
    }
    size_t pos = 0;
    while (pos < assign.size() && assign[pos] == m.q.size() - 1)
      assign[pos++] = 0;
    if (pos == assign.size()) break;
    ++assign[pos];
  }
  return res;
}

}  // namespace girard
