#include "mproc/dsl.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mproc {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  StateId state(const Token& t) const {
    if (t.text.size() < 2 || t.text[0] != 'q') fail(t, "expected a state like q0, got '" + t.text + "'");
    std::uint32_t v = 0;
    const char* first = t.text.data() + 1;
    const char* last = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) fail(t, "bad state '" + t.text + "'");
    return StateId{v};
  }

  Symbol symbol(const Token& t) const {
    if (t.text.size() == 1 && is_symbol_char(t.text[0])) return t.text[0];
    if (t.text.size() == 2 && t.text[0] == '\\' && is_symbol_char(t.text[1])) return t.text[1];
    fail(t, "expected a symbol, got '" + t.text + "'");
  }

  std::string action(const Token& t, std::size_t skip) const {
    auto id = t.text.substr(skip);
    if (!is_action_id(id)) fail(t, "bad action name '" + id + "'");
    return id;
  }

  void arity(std::size_t n, const char* form) const {
    if (tokens_.size() != n) {
      const Token& at = tokens_.size() > n ? tokens_[n] : tokens_.back();
      fail(at, std::string(form) + " takes " + std::to_string(n) + " tokens, got " + std::to_string(tokens_.size()));
    }
  }

  Instruction instruction() const {
    if (tokens_.size() < 4) fail(tokens_.back(), "incomplete instruction");
    DispatchKey key{state(tokens_[0]), symbol(tokens_[1])};
    const Token& op = tokens_[2];
    if (op.text == "R" || op.text == "L") {
      arity(4, "move");
      StateId next = state(tokens_[3]);
      return op.text == "R" ? Instruction{key, MoveRight{next}} : Instruction{key, MoveLeft{next}};
    }
    if (op.text == "?") {
      arity(5, "oracle branch");
      return {key, OracleBranch{state(tokens_[3]), state(tokens_[4])}};
    }
    if (op.text.size() > 1 && op.text[0] == '!') {
      arity(5, "action");
      return {key, Act{action(op, 1), state(tokens_[3]), state(tokens_[4])}};
    }
    if (op.text.size() > 1 && op.text[0] == '?') {
      arity(6, "reading action");
      return {key, ReadAct{action(op, 1), state(tokens_[3]), state(tokens_[4]), state(tokens_[5])}};
    }
    if (op.text == "!") fail(op, "expected an action name after '!'");
    arity(4, "print");
    return {key, Print{symbol(op), state(tokens_[3])}};
  }

 private:
  std::size_t line_;
  std::vector<Token> tokens_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Machine parse_dsl_unchecked(std::string_view text) {
  Machine m;
  std::optional<std::set<Symbol>> alphabet;
  std::optional<std::set<std::string>> vocabulary;
  bool named = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens.front().text;
    if (head.back() == ':' && head[0] != 'q') {
      LineParser lp(line_no, tokens);
      const std::string key = head.substr(0, head.size() - 1);
      const std::vector<Token> args(tokens.begin() + 1, tokens.end());
      if (key == "name") {
        if (named) lp.fail(tokens[0], "duplicate name header");
        if (args.size() != 1) lp.fail(tokens[0], "name takes one word");
        m.name = args[0].text;
        named = true;
      } else if (key == "alphabet") {
        if (alphabet) lp.fail(tokens[0], "duplicate alphabet header");
        alphabet.emplace();
        for (const auto& t : args) alphabet->insert(lp.symbol(t));
      } else if (key == "actions") {
        if (vocabulary) lp.fail(tokens[0], "duplicate actions header");
        vocabulary.emplace();
        for (const auto& t : args) vocabulary->insert(lp.action(t, 0));
      } else {
        lp.fail(tokens[0], "unknown header '" + key + "'");
      }
      continue;
    }
    m.instructions.push_back(LineParser(line_no, std::move(tokens)).instruction());
  }

  if (alphabet) {
    m.alphabet = *alphabet;
    m.alphabet.insert(kBlank);
  }
  if (vocabulary) m.vocabulary = *vocabulary;
  Machine inferred = m;
  inferred.declare_referenced();
  if (!alphabet) m.alphabet = inferred.alphabet;
  if (!vocabulary) m.vocabulary = inferred.vocabulary;
  return m;
}

Machine parse_dsl(std::string_view text) {
  Machine m = parse_dsl_unchecked(text);
  require_valid(m);
  return m;
}

std::string render_dsl(const Machine& m) {
  const Machine c = canonical(m);
  std::ostringstream os;
  if (!c.name.empty()) os << "name: " << c.name << '\n';
  os << "alphabet:";
  for (Symbol s : c.alphabet) os << ' ' << symbol_token(s);
  os << "\nactions:";
  for (const auto& a : c.vocabulary) os << ' ' << a;
  os << '\n';
  for (const auto& ins : c.instructions) os << to_string(ins) << '\n';
  return os.str();
}

}  // namespace mproc
