#include "nilq/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace nilq {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;
  int col_offset;  // added to 0-based pos for reported columns

  int col() const { return col_offset + static_cast<int>(pos) + 1; }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(line, col(), std::string("expected '") + c + "'");
    ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col(), msg); }
};

class ExprParser {
 public:
  ExprParser(Cursor& cur, const Alphabet& alphabet, int cap)
      : cur_(cur), alphabet_(alphabet), cap_(cap) {}

  LieElement parse() {
    LieElement e = parse_expr();
    if (!cur_.done()) cur_.fail("unexpected trailing input");
    return e;
  }

 private:
  Cursor& cur_;
  const Alphabet& alphabet_;
  int cap_;

  LieElement parse_expr() {
    LieElement sum(alphabet_, cap_);
    bool negative = false;
    char c = cur_.peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      ++cur_.pos;
    }
    sum += parse_term(negative);
    while (true) {
      c = cur_.peek();
      if (c != '+' && c != '-') break;
      ++cur_.pos;
      sum += parse_term(c == '-');
    }
    return sum;
  }

  LieElement parse_term(bool negative) {
    Rat coeff = negative ? -1 : 1;
    char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= parse_rational();
      cur_.expect('*');
    }
    LieElement f = parse_factor();
    f *= coeff;
    return f;
  }

  Rat parse_rational() {
    cur_.skip_ws();
    size_t start = cur_.pos;
    while (cur_.pos < cur_.s.size() && std::isdigit(static_cast<unsigned char>(cur_.s[cur_.pos])))
      ++cur_.pos;
    std::string num = cur_.s.substr(start, cur_.pos - start);
    if (num.empty()) cur_.fail("expected a number");
    std::string den;
    if (cur_.pos < cur_.s.size() && cur_.s[cur_.pos] == '/') {
      ++cur_.pos;
      size_t dstart = cur_.pos;
      while (cur_.pos < cur_.s.size() &&
             std::isdigit(static_cast<unsigned char>(cur_.s[cur_.pos])))
        ++cur_.pos;
      den = cur_.s.substr(dstart, cur_.pos - dstart);
      if (den.empty()) cur_.fail("expected a denominator");
    }
    return den.empty() ? rat_from_string(num) : rat_from_string(num + "/" + den);
  }

  LieElement parse_factor() {
    char c = cur_.peek();
    if (c == '[') {
      ++cur_.pos;
      LieElement left = parse_expr();
      cur_.expect(',');
      LieElement right = parse_expr();
      cur_.expect(']');
      return bracket(left, right);
    }
    if (!is_ident_start(c)) cur_.fail("expected a generator name or '['");
    int start_col = cur_.col();
    size_t start = cur_.pos;
    while (cur_.pos < cur_.s.size() && is_ident_char(cur_.s[cur_.pos])) ++cur_.pos;
    std::string name = cur_.s.substr(start, cur_.pos - start);
    int idx = alphabet_.index_of(name);
    if (idx < 0) throw ParseError(cur_.line, start_col, "unknown generator: " + name);
    return LieElement::generator(alphabet_, idx, cap_);
  }
};

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

LieElement parse_expression(const std::string& text, const Alphabet& alphabet,
                            int class_cap, int line, int col_offset) {
  Cursor cur{text, 0, line, col_offset};
  if (cur.done()) throw ParseError(line, cur.col(), "empty expression");
  return ExprParser(cur, alphabet, class_cap).parse();
}

std::vector<std::string> scan_identifiers(const std::string& text) {
  std::vector<std::string> names;
  size_t i = 0;
  while (i < text.size()) {
    if (is_ident_start(text[i])) {
      size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      std::string name = text.substr(start, i - start);
      bool seen = false;
      for (const auto& n : names) seen = seen || n == name;
      if (!seen) names.push_back(name);
    } else {
      ++i;
    }
  }
  return names;
}

LiePresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::optional<int> class_cap;
  int class_line = 0;
  std::vector<Generator> gens;
  struct PendingRel {
    std::string expr;
    int line;
    int col;
  };
  std::vector<PendingRel> pending;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t word_end = first;
    while (word_end < line.size() && !std::isspace(static_cast<unsigned char>(line[word_end])))
      ++word_end;
    std::string directive = line.substr(first, word_end - first);
    std::string rest = word_end < line.size() ? line.substr(word_end) : "";
    size_t rest_begin = rest.find_first_not_of(" \t");
    int rest_col = static_cast<int>(word_end) + (rest_begin == std::string::npos
                                                     ? 1
                                                     : static_cast<int>(rest_begin) + 1);
    if (rest_begin == std::string::npos) rest.clear();
    else rest = rest.substr(rest_begin);
    while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ' || rest.back() == '\t'))
      rest.pop_back();

    if (directive == "class") {
      if (class_cap)
        throw ParseError(line_no, static_cast<int>(first) + 1,
                         "duplicate class directive (first on line " +
                             std::to_string(class_line) + ")");
      try {
        size_t used = 0;
        int v = std::stoi(rest, &used);
        if (used != rest.size() || v < 1) throw std::invalid_argument("");
        class_cap = v;
        class_line = line_no;
      } catch (...) {
        throw ParseError(line_no, rest_col, "class needs a positive integer");
      }
    } else if (directive == "gen") {
      std::string name = rest;
      int weight = 1;
      auto colon = rest.find(':');
      if (colon != std::string::npos) {
        name = rest.substr(0, colon);
        std::string w = rest.substr(colon + 1);
        try {
          size_t used = 0;
          weight = std::stoi(w, &used);
          if (used != w.size() || weight < 1) throw std::invalid_argument("");
        } catch (...) {
          throw ParseError(line_no, rest_col + static_cast<int>(colon) + 1,
                           "generator weight needs a positive integer");
        }
      }
      if (name.empty() || !is_ident_start(name[0]))
        throw ParseError(line_no, rest_col, "generator needs a name");
      for (char c : name)
        if (!is_ident_char(c))
          throw ParseError(line_no, rest_col, "bad character in generator name: " + name);
      for (const auto& g : gens)
        if (g.name == name)
          throw ParseError(line_no, rest_col, "duplicate generator name: " + name);
      gens.push_back({name, weight});
    } else if (directive == "rel") {
      if (rest.empty())
        throw ParseError(line_no, rest_col, "rel needs an expression");
      pending.push_back({rest, line_no, rest_col - 1});
    } else {
      throw ParseError(line_no, static_cast<int>(first) + 1,
                       "unknown directive: " + directive);
    }
  }

  if (!class_cap) throw ParseError(line_no + 1, 1, "missing class directive");
  if (gens.empty()) throw ParseError(line_no + 1, 1, "at least one gen directive required");

  Alphabet alphabet(std::move(gens));
  std::vector<LieElement> rels;
  for (const auto& p : pending)
    rels.push_back(parse_expression(p.expr, alphabet, *class_cap, p.line, p.col));
  try {
    return LiePresentation(alphabet, *class_cap, std::move(rels));
  } catch (const InputError& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(class_line, 1, e.what());
  }
}

std::string serialize_presentation(const LiePresentation& pres) {
  std::ostringstream os;
  os << "class " << pres.class_cap() << "\n";
  for (const Generator& g : pres.alphabet().generators()) {
    os << "gen " << g.name;
    if (g.weight != 1) os << ":" << g.weight;
    os << "\n";
  }
  for (const LieElement& r : pres.relations()) os << "rel " << r.to_string() << "\n";
  return os.str();
}

}  // namespace nilq
