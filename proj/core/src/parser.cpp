#include <cctype>
#include <string>
#include <vector>

#include "evlogic/error.hpp"
#include "evlogic/formula.hpp"

namespace evlogic {

namespace {

enum class Tok {
  Atom,
  Meta,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  Modal,     // [B], <E>, ...
  CondOpen,  // B{
  AddOpen,   // [+
  Semi,
  RBrace,
  RBracket,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Op op = Op::True;  // for Modal
};

bool lower_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Op modal_op(char bracket, char letter) {
  const bool box = bracket == '[';
  switch (letter) {
    case 'B': return box ? Op::BoxB : Op::DiaB;
    case 'E': return box ? Op::BoxE : Op::DiaE;
    case 'A': return box ? Op::BoxA : Op::DiaA;
    case 'P': return box ? Op::BoxP : Op::DiaP;
    case 'C': return Op::BoxC;
    case 'U': return Op::BoxU;
    default: return Op::Atom;
  }
}

std::vector<Token> lex(std::string_view s, bool allow_meta) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto at = [&](std::size_t k) { return k < s.size() ? s[k] : '\0'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '~') {
      out.push_back({Tok::Not, start, "~"});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, start, "&"});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, start, "|"});
      ++i;
    } else if (c == '-' && at(i + 1) == '>') {
      out.push_back({Tok::Implies, start, "->"});
      i += 2;
    } else if (c == '<' && at(i + 1) == '-' && at(i + 2) == '>') {
      out.push_back({Tok::Iff, start, "<->"});
      i += 3;
    } else if (c == '(') {
      out.push_back({Tok::LParen, start, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, start, ")"});
      ++i;
    } else if (c == ';') {
      out.push_back({Tok::Semi, start, ";"});
      ++i;
    } else if (static_cast<unsigned char>(c) == 0xEF && static_cast<unsigned char>(at(i + 1)) == 0xBC &&
               static_cast<unsigned char>(at(i + 2)) == 0x9B) {
      // Fullwidth semicolon.
      out.push_back({Tok::Semi, start, ";"});
      i += 3;
    } else if (c == '}') {
      out.push_back({Tok::RBrace, start, "}"});
      ++i;
    } else if (c == ']') {
      out.push_back({Tok::RBracket, start, "]"});
      ++i;
    } else if (c == '[' && at(i + 1) == '+') {
      out.push_back({Tok::AddOpen, start, "[+"});
      i += 2;
    } else if ((c == '[' || c == '<') && at(i + 2) == (c == '[' ? ']' : '>') &&
               modal_op(c, at(i + 1)) != Op::Atom && !(c == '<' && (at(i + 1) == 'C' || at(i + 1) == 'U'))) {
      Token t{Tok::Modal, start, std::string(s.substr(i, 3))};
      t.op = modal_op(c, at(i + 1));
      out.push_back(t);
      i += 3;
    } else if (c == 'B' && at(i + 1) == '{') {
      out.push_back({Tok::CondOpen, start, "B{"});
      i += 2;
    } else if (lower_start(c)) {
      std::size_t j = i;
      while (j < s.size() && (lower_start(s[j]) || std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      if (j < s.size() && ident_char(s[j])) throw ParseError("unknown token", j);
      std::string word(s.substr(i, j - i));
      Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Atom;
      out.push_back({kind, start, std::move(word)});
      i = j;
    } else if (allow_meta && c >= 'A' && c <= 'Z') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Meta, start, std::string(s.substr(i, j - i))});
      i = j;
    } else {
      throw ParseError("unknown token", start);
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind == Tok::RParen || peek().kind == Tok::RBrace || peek().kind == Tok::RBracket)
      throw ParseError("unbalanced bracket", peek().pos);
    if (peek().kind != Tok::End) throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  void expect_close(Tok kind, std::size_t open_pos) {
    if (peek().kind == kind) {
      ++pos_;
      return;
    }
    if (peek().kind == Tok::End) throw ParseError("unbalanced bracket", open_pos);
    throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
  }

  Formula parse_iff() {
    Formula left = parse_imp();
    while (peek().kind == Tok::Iff) {
      ++pos_;
      left = iff(left, parse_imp());
    }
    return left;
  }

  Formula parse_imp() {
    Formula left = parse_or();
    if (peek().kind == Tok::Implies) {
      ++pos_;
      return implies(left, parse_imp());
    }
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (peek().kind == Tok::Or) {
      ++pos_;
      left = disj(left, parse_and());
    }
    return left;
  }

  Formula parse_and() {
    Formula left = parse_unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      left = conj(left, parse_unary());
    }
    return left;
  }

  // Operand of a prefix operator that started at `op_pos`.
  Formula operand(std::size_t op_pos) {
    switch (peek().kind) {
      case Tok::End:
      case Tok::And:
      case Tok::Or:
      case Tok::Implies:
      case Tok::Iff:
      case Tok::RParen:
      case Tok::RBrace:
      case Tok::RBracket:
      case Tok::Semi:
        throw ParseError("dangling modality", op_pos);
      default:
        return parse_unary();
    }
  }

  Formula parse_unary() {
    const Token t = next();
    switch (t.kind) {
      case Tok::Not:
        return neg(operand(t.pos));
      case Tok::Modal:
        return modal(t.op, operand(t.pos));
      case Tok::CondOpen: {
        Formula condition = parse_iff();
        if (peek().kind == Tok::Semi) {
          ++pos_;
          Formula settled = parse_iff();
          expect_close(Tok::RBrace, t.pos);
          return cond_belief2(condition, settled, operand(t.pos));
        }
        expect_close(Tok::RBrace, t.pos);
        return cond_belief(condition, operand(t.pos));
      }
      case Tok::AddOpen: {
        Formula evidence = parse_iff();
        expect_close(Tok::RBracket, t.pos);
        return add_evidence(evidence, operand(t.pos));
      }
      case Tok::LParen: {
        Formula inner = parse_iff();
        expect_close(Tok::RParen, t.pos);
        return inner;
      }
      case Tok::Atom:
        return Formula::atom(t.text);
      case Tok::Meta:
        return Formula::meta(t.text);
      case Tok::True:
        return Formula::top();
      case Tok::False:
        return Formula::bottom();
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      case Tok::RParen:
      case Tok::RBrace:
      case Tok::RBracket:
        throw ParseError("unbalanced bracket", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength: higher binds tighter.
int level(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    default: return 5;
  }
}

const char* modal_text(Op op) {
  switch (op) {
    case Op::BoxB: return "[B]";
    case Op::DiaB: return "<B>";
    case Op::BoxE: return "[E]";
    case Op::DiaE: return "<E>";
    case Op::BoxA: return "[A]";
    case Op::DiaA: return "<A>";
    case Op::BoxP: return "[P]";
    case Op::DiaP: return "<P>";
    case Op::BoxC: return "[C]";
    case Op::BoxU: return "[U]";
    default: return "?";
  }
}

void emit(const Formula& f, int min_level, std::string& out);

void emit_binary(const Formula& f, const char* sym, int lvl, bool right_assoc, std::string& out) {
  emit(f.child(0), right_assoc ? lvl + 1 : lvl, out);
  out += ' ';
  out += sym;
  out += ' ';
  emit(f.child(1), right_assoc ? lvl : lvl + 1, out);
}

void emit(const Formula& f, int min_level, std::string& out) {
  const int lvl = level(f.op());
  const bool paren = lvl < min_level;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::Atom:
    case Op::Meta:
      out += f.name();
      break;
    case Op::True:
      out += "true";
      break;
    case Op::False:
      out += "false";
      break;
    case Op::Not:
      out += '~';
      emit(f.child(0), 5, out);
      break;
    case Op::And:
      emit_binary(f, "&", lvl, false, out);
      break;
    case Op::Or:
      emit_binary(f, "|", lvl, false, out);
      break;
    case Op::Implies:
      emit_binary(f, "->", lvl, true, out);
      break;
    case Op::Iff:
      emit_binary(f, "<->", lvl, false, out);
      break;
    case Op::CondB:
      out += "B{";
      emit(f.child(0), 0, out);
      out += "} ";
      emit(f.child(1), 5, out);
      break;
    case Op::CondB2:
      out += "B{";
      emit(f.child(0), 0, out);
      out += "; ";
      emit(f.child(1), 0, out);
      out += "} ";
      emit(f.child(2), 5, out);
      break;
    case Op::AddEv:
      out += "[+";
      emit(f.child(0), 0, out);
      out += "] ";
      emit(f.child(1), 5, out);
      break;
    default:
      out += modal_text(f.op());
      out += ' ';
      emit(f.child(0), 5, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse(std::string_view text, ParseOptions options) {
  return Parser(lex(text, options.allow_metavariables)).run();
}

Schema parse_schema(std::string_view text) { return parse(text, ParseOptions{true}); }

std::string render(const Formula& f) {
  std::string out;
  emit(f, 0, out);
  return out;
}

}  // namespace evlogic
