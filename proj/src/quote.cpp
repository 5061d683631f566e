#include "mproc/quote.hpp"

#include <charconv>
#include <map>
#include <vector>

namespace mproc {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::uint64_t number(std::string_view s, const char* what) {
  if (s.empty() || s.size() > 12 || (s.size() > 1 && s[0] == '0')) {
    throw DecodeError(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DecodeError(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

char char_code(std::string_view s) {
  const auto v = number(s, "character code");
  if (v > 0x7e || !is_symbol_char(static_cast<char>(v))) {
    throw DecodeError("character code " + std::string(s) + " is not printable");
  }
  return static_cast<char>(v);
}

StateId state(std::string_view s) {
  const auto v = number(s, "state");
  if (v > 0xffffffffULL) throw DecodeError("state out of range");
  return StateId{static_cast<std::uint32_t>(v)};
}

}  // namespace

std::string quote(const Machine& m) {
  require_valid(m);
  const Machine c = canonical(m);

  std::map<Symbol, std::size_t> sym_index{{kBlank, 0}};
  std::vector<std::string> alpha;
  for (Symbol s : c.alphabet) {
    if (s == kBlank) continue;
    sym_index.emplace(s, alpha.size() + 1);
    alpha.push_back(std::to_string(int(s)));
  }
  std::map<std::string, std::size_t, std::less<>> act_index;
  std::vector<std::string> vocab;
  for (const auto& id : c.vocabulary) {
    act_index.emplace(id, vocab.size());
    std::vector<std::string> codes;
    for (char ch : id) codes.push_back(std::to_string(int(ch)));
    vocab.push_back(join(codes, '.'));
  }

  std::string body = join(alpha, ',') + ':' + join(vocab, ',') + ':';
  auto n = [](std::size_t v) { return std::to_string(v); };
  auto st = [](StateId s) { return std::to_string(s.value); };
  for (const auto& ins : c.instructions) {
    std::vector<std::string> f{st(ins.key.state), n(sym_index.at(ins.key.read))};
    if (const auto* p = std::get_if<Print>(&ins.op)) {
      f.insert(f.end(), {"0", n(sym_index.at(p->write)), st(p->next)});
    } else if (const auto* p = std::get_if<MoveRight>(&ins.op)) {
      f.insert(f.end(), {"1", st(p->next)});
    } else if (const auto* p = std::get_if<MoveLeft>(&ins.op)) {
      f.insert(f.end(), {"2", st(p->next)});
    } else if (const auto* p = std::get_if<OracleBranch>(&ins.op)) {
      f.insert(f.end(), {"3", st(p->yes), st(p->no)});
    } else if (const auto* p = std::get_if<Act>(&ins.op)) {
      f.insert(f.end(), {"4", n(act_index.at(p->action)), st(p->ok), st(p->fail)});
    } else if (const auto* p = std::get_if<ReadAct>(&ins.op)) {
      f.insert(f.end(), {"5", n(act_index.at(p->reading)), st(p->on_true), st(p->on_false), st(p->fail)});
    }
    body += join(f, '|') + ';';
  }
  return std::to_string(body.size()) + ':' + body;
}

Machine unquote(std::string_view code) {
  const auto colon = code.find(':');
  if (colon == std::string_view::npos) throw DecodeError("missing length prefix");
  const auto len = number(code.substr(0, colon), "length");
  const auto body = code.substr(colon + 1);
  if (body.size() != len) {
    throw DecodeError("length prefix says " + std::to_string(len) + " but body has " + std::to_string(body.size()));
  }

  const auto sections = split(body, ':');
  if (sections.size() != 3) throw DecodeError("expected 3 sections, got " + std::to_string(sections.size()));

  Machine m;
  std::vector<Symbol> symbols{kBlank};
  if (!sections[0].empty()) {
    for (auto c : split(sections[0], ',')) {
      const char s = char_code(c);
      if (s == kBlank) throw DecodeError("blank listed in alphabet");
      symbols.push_back(s);
      m.alphabet.insert(s);
    }
  }
  std::vector<std::string> actions;
  if (!sections[1].empty()) {
    for (auto id : split(sections[1], ',')) {
      std::string name;
      for (auto c : split(id, '.')) name.push_back(char_code(c));
      actions.push_back(name);
      m.vocabulary.insert(name);
    }
  }

  auto sym = [&](std::string_view s) {
    const auto i = number(s, "symbol index");
    if (i >= symbols.size()) throw DecodeError("symbol index " + std::string(s) + " out of range");
    return symbols[i];
  };
  auto act = [&](std::string_view s) {
    const auto i = number(s, "action index");
    if (i >= actions.size()) throw DecodeError("action index " + std::string(s) + " out of range");
    return actions[i];
  };

  std::string_view rest = sections[2];
  while (!rest.empty()) {
    const auto end = rest.find(';');
    if (end == std::string_view::npos) throw DecodeError("unterminated instruction");
    const auto f = split(rest.substr(0, end), '|');
    rest.remove_prefix(end + 1);
    if (f.size() < 4) throw DecodeError("instruction has too few fields");
    DispatchKey key{state(f[0]), sym(f[1])};
    const auto kind = number(f[2], "kind");
    static constexpr std::size_t kFields[] = {5, 4, 4, 5, 6, 7};
    if (kind > 5 || f.size() != kFields[kind]) throw DecodeError("bad instruction kind or arity");
    switch (kind) {
      case 0: m.instructions.push_back({key, Print{sym(f[3]), state(f[4])}}); break;
      case 1: m.instructions.push_back({key, MoveRight{state(f[3])}}); break;
      case 2: m.instructions.push_back({key, MoveLeft{state(f[3])}}); break;
      case 3: m.instructions.push_back({key, OracleBranch{state(f[3]), state(f[4])}}); break;
      case 4: m.instructions.push_back({key, Act{act(f[3]), state(f[4]), state(f[5])}}); break;
      default: m.instructions.push_back({key, ReadAct{act(f[3]), state(f[4]), state(f[5]), state(f[6])}}); break;
    }
  }

  if (!validate_machine(m).valid()) throw DecodeError("decoded machine is invalid");
  if (quote(m) != code) throw DecodeError("encoding is not canonical");
  return m;
}

std::optional<QuotedPair> split_quoted_pair(std::string_view tape) {
  const auto colon = tape.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 12) return std::nullopt;
  std::uint64_t len = 0;
  try {
    len = number(tape.substr(0, colon), "length");
  } catch (const DecodeError&) {
    return std::nullopt;
  }
  const auto end = colon + 1 + len;
  if (end > tape.size()) return std::nullopt;
  QuotedPair pair{std::string(tape.substr(0, end)), {}};
  const auto rest = tape.substr(end);
  if (rest.empty()) {
    pair.input = pair.code;
  } else if (rest.front() == kPairSeparator) {
    pair.input = std::string(rest.substr(1));
  } else {
    return std::nullopt;
  }
  return pair;
}

}  // namespace mproc
