#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "zzl/error.hpp"
#include "zzl/lp.hpp"

namespace zzl::lp {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' ||
         c == ']';
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_keyword(const std::string& s) {
  static const char* words[] = {"minimize", "minimise", "minimum", "min", "maximize", "maximise",
                                "maximum", "max", "subject", "such", "st", "s.t.", "bounds",
                                "bound", "end", "free", "inf", "infinity", "general", "generals",
                                "binary", "binaries"};
  const std::string l = lower(s);
  for (const char* w : words) {
    if (l == w) return true;
  }
  return false;
}

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_linear(std::string& out, const Linear& l, const LinearProgram& lp) {
  if (l.empty()) {
    out += " 0";
    return;
  }
  for (const Term& t : l) {
    out += t.coefficient < 0 || std::signbit(t.coefficient) ? " - " : " + ";
    out += number(std::abs(t.coefficient));
    out += ' ';
    out += lp.variables()[t.variable].name;
  }
}

}  // namespace

std::string to_lp_text(const LinearProgram& lp) {
  lp.check();
  std::map<std::string, std::size_t> seen;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    const std::string& name = lp.variables()[j].name;
    bool ok = !name.empty() && name_start(name[0]) && !is_keyword(name);
    for (char c : name) ok = ok && name_char(c);
    if (!ok) throw ArgumentError("LP text: unusable variable name '" + name + "'");
    if (!seen.emplace(name, j).second) {
      throw ArgumentError("LP text: duplicate variable name '" + name + "'");
    }
  }
  std::string out = "Minimize\n obj:";
  // Every variable is listed so that the declaration order survives a round trip.
  std::vector<double> coeff(lp.variable_count(), 0.0);
  for (const Term& t : lp.objective()) coeff[t.variable] += t.coefficient;
  Linear full;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) full.push_back({j, coeff[j]});
  write_linear(out, full, lp);
  out += "\nSubject To\n";
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    const Constraint& c = lp.constraints()[i];
    out += " c" + std::to_string(i) + ":";
    write_linear(out, c.lhs, lp);
    out += ' ';
    out += to_string(c.relation);
    out += ' ';
    out += number(c.rhs);
    out += '\n';
  }
  out += "Bounds\n";
  for (const Variable& v : lp.variables()) {
    if (v.free) out += " " + v.name + " free\n";
  }
  out += "End\n";
  return out;
}

// ---------------------------------------------------------------------------

namespace {

enum class Tok { Name, Number, Plus, Minus, Rel, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  double value = 0.0;
  Relation rel = Relation::Equal;
  std::size_t line = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, k = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(line), msg);
  };
  while (k < text.size()) {
    const char c = text[k];
    if (c == '\n') {
      ++line;
      ++k;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (c == '\\') {
      while (k < text.size() && text[k] != '\n') ++k;
    } else if (c == '+' || c == '-') {
      out.push_back({c == '+' ? Tok::Plus : Tok::Minus, std::string(1, c), 0, {}, line});
      ++k;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", 0, {}, line});
      ++k;
    } else if (c == '<' || c == '>' || c == '=') {
      std::size_t e = k + 1;
      if (e < text.size() && (text[e] == '=' || text[e] == '<' || text[e] == '>')) ++e;
      const std::string op = text.substr(k, e - k);
      Relation r;
      if (op == "<=" || op == "<" || op == "=<") r = Relation::LessEqual;
      else if (op == ">=" || op == ">" || op == "=>") r = Relation::GreaterEqual;
      else if (op == "=") r = Relation::Equal;
      else fail("unknown operator '" + op + "'");
      out.push_back({Tok::Rel, op, 0, r, line});
      k = e;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double v = std::strtod(text.c_str() + k, &end);
      const std::size_t e = static_cast<std::size_t>(end - text.c_str());
      if (e == k) fail("malformed number");
      out.push_back({Tok::Number, text.substr(k, e - k), v, {}, line});
      k = e;
    } else if (name_start(c)) {
      std::size_t e = k;
      while (e < text.size() && name_char(text[e])) ++e;
      out.push_back({Tok::Name, text.substr(k, e - k), 0, {}, line});
      k = e;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", 0, {}, line});
  return out;
}

enum class Section { None, Objective, Constraints, Bounds, Done };

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  LinearProgram run() {
    Section section = Section::None;
    while (peek().kind != Tok::End) {
      if (std::optional<Section> s = section_header()) {
        section = *s;
        if (section == Section::Objective && seen_objective_) fail("second objective section");
        if (section == Section::Objective) seen_objective_ = true;
        if (section == Section::Done) break;
        continue;
      }
      switch (section) {
        case Section::None: fail("expected 'Minimize'");
        case Section::Objective: objective(); break;
        case Section::Constraints: constraint(); break;
        case Section::Bounds: bound(); break;
        case Section::Done: break;
      }
    }
    if (!seen_objective_) fail("missing 'Minimize' section");
    for (std::size_t j = 0; j < names_.size(); ++j) lp_variables_[j].free = free_[j];
    LinearProgram lp;
    for (const Variable& v : lp_variables_) lp.add_variable(v.name, v.free);
    lp.set_objective(objective_);
    for (auto& c : constraints_) lp.add_constraint(c.lhs, c.relation, c.rhs);
    return lp;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(peek().line), msg);
  }

  std::optional<Section> section_header() {
    const Token& t = peek();
    if (t.kind != Tok::Name) return std::nullopt;
    const std::string w = lower(t.text);
    if (peek(1).kind == Tok::Colon) return std::nullopt;
    if (w == "minimize" || w == "minimise" || w == "minimum" || w == "min") {
      ++pos_;
      return Section::Objective;
    }
    if (w == "maximize" || w == "maximise" || w == "maximum" || w == "max") {
      fail("only minimisation is supported");
    }
    if ((w == "subject" || w == "such") && peek(1).kind == Tok::Name &&
        lower(peek(1).text) == (w == "subject" ? "to" : "that")) {
      pos_ += 2;
      return Section::Constraints;
    }
    if (w == "st" || w == "s.t.") {
      ++pos_;
      return Section::Constraints;
    }
    if (w == "bounds" || w == "bound") {
      ++pos_;
      return Section::Bounds;
    }
    if (w == "end") {
      ++pos_;
      return Section::Done;
    }
    if (w == "general" || w == "generals" || w == "binary" || w == "binaries") {
      fail("integer sections are not supported");
    }
    return std::nullopt;
  }

  std::size_t variable(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (is_keyword(name)) fail("keyword '" + name + "' used as a variable");
    index_.emplace(name, names_.size());
    names_.push_back(name);
    free_.push_back(false);
    lp_variables_.push_back({name, false});
    return names_.size() - 1;
  }

  void skip_label() {
    if (peek().kind == Tok::Name && peek(1).kind == Tok::Colon) pos_ += 2;
  }

  /// Parses terms until a relation, a section header or the end; returns the
  /// summed constant part.
  double linear(Linear& out) {
    double constant = 0.0;
    bool first = true;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Rel || t.kind == Tok::End) break;
      if (t.kind == Tok::Name && is_keyword(t.text)) break;
      if (t.kind == Tok::Name && (peek(1).kind == Tok::Colon)) break;
      double sign = 1.0;
      bool had_sign = false;
      while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        if (take().kind == Tok::Minus) sign = -sign;
        had_sign = true;
      }
      if (!first && !had_sign) fail("expected '+' or '-' between terms");
      double coeff = 1.0;
      bool had_number = false;
      if (peek().kind == Tok::Number) {
        coeff = take().value;
        had_number = true;
      }
      if (peek().kind == Tok::Name && !is_keyword(peek().text) && peek(1).kind != Tok::Colon) {
        out.push_back({variable(take().text), sign * coeff});
      } else if (had_number) {
        constant += sign * coeff;
      } else {
        fail("expected a term");
      }
      first = false;
    }
    return constant;
  }

  void objective() {
    skip_label();
    const double constant = linear(objective_);
    if (constant != 0.0) fail("objective constants are not supported");
    if (peek().kind == Tok::Rel) fail("relation in objective");
  }

  double signed_number() {
    double sign = 1.0;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      if (take().kind == Tok::Minus) sign = -sign;
    }
    if (peek().kind == Tok::Number) return sign * take().value;
    if (peek().kind == Tok::Name) {
      const std::string w = lower(peek().text);
      if (w == "inf" || w == "infinity") {
        ++pos_;
        return sign * HUGE_VAL;
      }
    }
    fail("expected a number");
  }

  void constraint() {
    skip_label();
    Constraint c;
    const double constant = linear(c.lhs);
    if (peek().kind != Tok::Rel) fail("expected a relation");
    c.relation = take().rel;
    c.rhs = signed_number() - constant;
    if (!std::isfinite(c.rhs)) fail("infinite right-hand side");
    constraints_.push_back(std::move(c));
  }

  void bound() {
    // name free | name rel value | value rel name [rel value]
    if (peek().kind == Tok::Name && !is_keyword(peek().text)) {
      const std::size_t v = variable(take().text);
      if (peek().kind == Tok::Name && lower(peek().text) == "free") {
        ++pos_;
        free_[v] = true;
        return;
      }
      if (peek().kind != Tok::Rel) fail("expected 'free' or a relation");
      const Relation r = take().rel;
      apply_bound(v, r, signed_number());
      return;
    }
    const double lo = signed_number();
    if (peek().kind != Tok::Rel) fail("expected a relation");
    Relation r = take().rel;
    if (peek().kind != Tok::Name) fail("expected a variable");
    const std::size_t v = variable(take().text);
    // value <= x reads as x >= value
    if (r == Relation::LessEqual) r = Relation::GreaterEqual;
    else if (r == Relation::GreaterEqual) r = Relation::LessEqual;
    apply_bound(v, r, lo);
    if (peek().kind == Tok::Rel) {
      const Relation r2 = take().rel;
      apply_bound(v, r2, signed_number());
    }
  }

  void apply_bound(std::size_t v, Relation r, double value) {
    if (r == Relation::GreaterEqual) {
      if (value == -HUGE_VAL) {
        free_[v] = true;
      } else if (value < 0) {
        free_[v] = true;
        constraints_.push_back({{{v, 1.0}}, Relation::GreaterEqual, value});
      } else if (value > 0) {
        constraints_.push_back({{{v, 1.0}}, Relation::GreaterEqual, value});
      }
    } else if (r == Relation::LessEqual) {
      if (value != HUGE_VAL) constraints_.push_back({{{v, 1.0}}, Relation::LessEqual, value});
    } else {
      if (!std::isfinite(value)) fail("infinite fixed bound");
      free_[v] = true;
      constraints_.push_back({{{v, 1.0}}, Relation::Equal, value});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool seen_objective_ = false;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
  std::vector<bool> free_;
  std::vector<Variable> lp_variables_;
  Linear objective_;
  std::vector<Constraint> constraints_;
};

}  // namespace

LinearProgram parse_lp_text(const std::string& text) { return Parser(text).run(); }

}  // namespace zzl::lp
