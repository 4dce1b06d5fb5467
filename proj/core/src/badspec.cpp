// Copyright 2026 The Pushin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pushin/badspec.hpp"

#include <algorithm>
#include <sstream>

#include "pushin/automata.hpp"
#include "pushin/error.hpp"
#include "text_util.hpp"

namespace pushin {
namespace {

// ---------------------------------------------------------------- lexing

enum class TokenKind { name, lparen, rparen, bar, star, any, end };

struct RegexToken {
  TokenKind kind;
  std::string text;
  std::vector<std::string> excluded;  // for `any`
  std::vector<std::size_t> excluded_columns;
  std::size_t column;
};

bool is_name_char(char c) {
  return !(c == ' ' || c == '\t' || c == '\r' || c == '(' || c == ')' || c == '|' || c == '*' ||
           c == '<' || c == '>' || c == ';');
}

class RegexLexer {
 public:
  RegexLexer(std::string_view text, std::size_t line, std::size_t column_offset,
             const std::string& source)
      : text_(text), line_(line), offset_(column_offset), source_(source) {}

  std::vector<RegexToken> run() {
    std::vector<RegexToken> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const std::size_t col = column();
      char c = text_[pos_];
      switch (c) {
        case '(': out.push_back({TokenKind::lparen, "(", {}, {}, col}); ++pos_; break;
        case ')': out.push_back({TokenKind::rparen, ")", {}, {}, col}); ++pos_; break;
        case '|': out.push_back({TokenKind::bar, "|", {}, {}, col}); ++pos_; break;
        case '*': out.push_back({TokenKind::star, "*", {}, {}, col}); ++pos_; break;
        case '<': out.push_back(any_token()); break;
        case '>': fail(col, "unexpected '>'");
        default: {
          std::size_t start = pos_;
          while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
          out.push_back({TokenKind::name, std::string(text_.substr(start, pos_ - start)), {}, {}, col});
        }
      }
    }
    out.push_back({TokenKind::end, "", {}, {}, column()});
    return out;
  }

 private:
  RegexToken any_token() {
    const std::size_t col = column();
    ++pos_;  // '<'
    if (text_.substr(pos_, 3) != "ANY") fail(col, "expected '<ANY>' or '<ANY - ...>'");
    pos_ += 3;
    RegexToken tok{TokenKind::any, "<ANY>", {}, {}, col};
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '>') {
      ++pos_;
      return tok;
    }
    if (pos_ >= text_.size() || text_[pos_] != '-') fail(column(), "expected '>' or '-' after '<ANY'");
    ++pos_;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail(col, "unterminated '<ANY - ...>'");
      if (text_[pos_] == '>') {
        ++pos_;
        break;
      }
      std::size_t start = pos_;
      const std::size_t name_col = column();
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      if (start == pos_) fail(name_col, std::string("unexpected '") + text_[pos_] + "' in '<ANY - ...>'");
      tok.excluded.emplace_back(text_.substr(start, pos_ - start));
      tok.excluded_columns.push_back(name_col);
    }
    if (tok.excluded.empty()) fail(col, "'<ANY - ...>' needs at least one action");
    return tok;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  std::size_t column() const { return offset_ + pos_; }
  [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
    throw ParseError(source_, line_, col, msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t offset_;
  const std::string& source_;
};

// ---------------------------------------------------------------- parsing

class RegexParser {
 public:
  RegexParser(std::vector<RegexToken> tokens, const Alphabet& alphabet, std::size_t line,
              const std::string& source)
      : tokens_(std::move(tokens)), alphabet_(alphabet), line_(line), source_(source) {}

  RegexNode parse() {
    RegexNode expr = parse_expr();
    if (peek().kind != TokenKind::end) fail(peek().column, "unexpected '" + peek().text + "'");
    return expr;
  }

 private:
  RegexNode parse_expr() {
    std::vector<RegexNode> options;
    options.push_back(parse_term());
    while (peek().kind == TokenKind::bar) {
      ++pos_;
      options.push_back(parse_term());
    }
    if (options.size() == 1) return std::move(options.front());
    return RegexNode{RegexNode::Alternation{std::move(options)}};
  }

  RegexNode parse_term() {
    std::vector<RegexNode> parts;
    while (starts_atom(peek().kind)) parts.push_back(parse_factor());
    if (parts.empty()) {
      const auto& tok = peek();
      fail(tok.column, tok.kind == TokenKind::end ? "expected an expression"
                                                  : "unexpected '" + tok.text + "'");
    }
    if (parts.size() == 1) return std::move(parts.front());
    return RegexNode{RegexNode::Concat{std::move(parts)}};
  }

  RegexNode parse_factor() {
    RegexNode atom = parse_atom();
    while (peek().kind == TokenKind::star) {
      ++pos_;
      atom = RegexNode{RegexNode::Star{std::make_shared<const RegexNode>(std::move(atom))}};
    }
    return atom;
  }

  RegexNode parse_atom() {
    const RegexToken& tok = tokens_[pos_++];
    switch (tok.kind) {
      case TokenKind::name:
        check_action(tok.text, tok.column);
        return RegexNode{RegexNode::Atom{tok.text, {}}};
      case TokenKind::any:
        for (std::size_t i = 0; i < tok.excluded.size(); ++i) {
          check_action(tok.excluded[i], tok.excluded_columns[i]);
        }
        return RegexNode{RegexNode::Atom{std::nullopt, tok.excluded}};
      case TokenKind::lparen: {
        RegexNode inner = parse_expr();
        if (peek().kind != TokenKind::rparen) fail(peek().column, "expected ')'");
        ++pos_;
        return inner;
      }
      default:
        fail(tok.column, "unexpected '" + tok.text + "'");
    }
  }

  static bool starts_atom(TokenKind k) {
    return k == TokenKind::name || k == TokenKind::any || k == TokenKind::lparen;
  }
  void check_action(const std::string& name, std::size_t column) const {
    if (!alphabet_.contains(name)) {
      fail(column, "unknown action '" + name + "' (system alphabet " + to_string(alphabet_) + ")");
    }
  }
  const RegexToken& peek() const { return tokens_[pos_]; }
  [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
    throw ParseError(source_, line_, col, msg);
  }

  std::vector<RegexToken> tokens_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
  std::size_t line_;
  const std::string& source_;
};

// ---------------------------------------------------------------- Thompson

struct Fragment {
  State start;
  State end;
};

Fragment build(const RegexNode& node, const Alphabet& alphabet, Nfa& nfa) {
  return std::visit(
      [&](const auto& n) -> Fragment {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RegexNode::Atom>) {
          State s = nfa.add_state();
          State e = nfa.add_state();
          if (n.action) {
            nfa.add_transition(s, *n.action, e);
          } else {
            for (const auto& symbol : alphabet) {
              if (std::find(n.excluded.begin(), n.excluded.end(), symbol) == n.excluded.end()) {
                nfa.add_transition(s, symbol, e);
              }
            }
          }
          return {s, e};
        } else if constexpr (std::is_same_v<T, RegexNode::Concat>) {
          Fragment first = build(n.parts.front(), alphabet, nfa);
          State end = first.end;
          for (std::size_t i = 1; i < n.parts.size(); ++i) {
            Fragment next = build(n.parts[i], alphabet, nfa);
            nfa.add_transition(end, kEpsilon, next.start);
            end = next.end;
          }
          return {first.start, end};
        } else if constexpr (std::is_same_v<T, RegexNode::Alternation>) {
          State s = nfa.add_state();
          State e = nfa.add_state();
          for (const auto& option : n.options) {
            Fragment f = build(option, alphabet, nfa);
            nfa.add_transition(s, kEpsilon, f.start);
            nfa.add_transition(f.end, kEpsilon, e);
          }
          return {s, e};
        } else {
          State s = nfa.add_state();
          State e = nfa.add_state();
          Fragment body = build(*n.body, alphabet, nfa);
          nfa.add_transition(s, kEpsilon, e);
          nfa.add_transition(s, kEpsilon, body.start);
          nfa.add_transition(body.end, kEpsilon, body.start);
          nfa.add_transition(body.end, kEpsilon, e);
          return {s, e};
        }
      },
      node.node);
}

void render(const RegexNode& node, int context, std::string& out) {
  // context: 0 = alternation, 1 = concatenation, 2 = star operand
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RegexNode::Atom>) {
          if (n.action) {
            out += *n.action;
          } else if (n.excluded.empty()) {
            out += "<ANY>";
          } else {
            out += "<ANY -";
            for (const auto& x : n.excluded) out += " " + x;
            out += ">";
          }
        } else if constexpr (std::is_same_v<T, RegexNode::Concat>) {
          if (context > 1) out += "(";
          for (std::size_t i = 0; i < n.parts.size(); ++i) {
            if (i > 0) out += " ";
            render(n.parts[i], 1, out);
          }
          if (context > 1) out += ")";
        } else if constexpr (std::is_same_v<T, RegexNode::Alternation>) {
          if (context > 0) out += "(";
          for (std::size_t i = 0; i < n.options.size(); ++i) {
            if (i > 0) out += " | ";
            render(n.options[i], 0, out);
          }
          if (context > 0) out += ")";
        } else {
          render(*n.body, 2, out);
          out += "*";
        }
      },
      node.node);
}

struct Segment {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::string_view strip(std::string_view s, std::size_t& column) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
    ++column;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits text into `;`/newline separated segments without comments.
std::vector<Segment> segments_of(std::string_view text) {
  std::vector<Segment> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++line;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t start = 0;
    while (start <= raw.size()) {
      std::size_t semi = raw.find(';', start);
      if (semi == std::string_view::npos) semi = raw.size();
      std::size_t column = start + 1;
      std::string_view piece = strip(raw.substr(start, semi - start), column);
      if (!piece.empty()) out.push_back(Segment{piece, line, column});
      start = semi + 1;
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

std::size_t parse_length(std::string_view value, const Segment& seg, std::size_t value_column,
                         const std::string& source) {
  detail::Token tok{std::string(value), value_column};
  if (value.empty()) throw ParseError(source, seg.line, value_column, "expected a length");
  return detail::parse_count(tok, seg.line, source);
}

}  // namespace

std::string to_string(const RegexNode& regex) {
  std::string out;
  render(regex, 0, out);
  return out;
}

BadSpec parse_badspec(std::string_view text, const Alphabet& alphabet, const std::string& source) {
  BadSpec spec;
  spec.alphabet = alphabet;
  bool in_list = false;
  bool seen_body = false;
  const Segment* minlen_seg = nullptr;
  auto segments = segments_of(text);

  for (const Segment& seg : segments) {
    std::size_t colon = seg.text.find(':');
    std::string_view key = colon == std::string_view::npos ? std::string_view{} : seg.text.substr(0, colon);
    std::size_t value_column = seg.column + colon + 1;
    std::string_view value =
        colon == std::string_view::npos ? std::string_view{} : strip(seg.text.substr(colon + 1), value_column);

    if (key == "regex" || key == "list") {
      if (seen_body) throw ParseError(source, seg.line, seg.column, "only one 'regex:' or 'list:' allowed");
      seen_body = true;
      if (key == "regex") {
        in_list = false;
        RegexLexer lexer(value, seg.line, value_column, source);
        spec.pattern = RegexParser(lexer.run(), alphabet, seg.line, source).parse();
      } else {
        in_list = true;
        if (!value.empty()) {
          throw ParseError(source, seg.line, value_column, "list words go on the following lines");
        }
      }
    } else if (key == "minlen") {
      spec.min_length = parse_length(value, seg, value_column, source);
      minlen_seg = &seg;
    } else if (key == "maxlen") {
      spec.max_length = parse_length(value, seg, value_column, source);
    } else if (in_list) {
      Word word = parse_word(seg.text);
      std::size_t col = seg.column;
      for (const auto& symbol : word) {
        if (!alphabet.contains(symbol)) {
          auto at = seg.text.find(symbol);
          throw ParseError(source, seg.line, at == std::string_view::npos ? col : col + at,
                           "unknown action '" + symbol + "'");
        }
      }
      spec.words.push_back(std::move(word));
    } else {
      throw ParseError(source, seg.line, seg.column,
                       "expected 'regex:', 'list:', 'minlen:' or 'maxlen:'");
    }
  }
  if (!seen_body) throw ParseError(source, 1, 1, "missing 'regex:' or 'list:'");
  if (spec.pattern && !spec.max_length) {
    throw ParseError(source, segments.empty() ? 1 : segments.back().line, 1,
                     "missing 'maxlen:' (required for regex specifications)");
  }
  if (spec.max_length && spec.min_length > *spec.max_length) {
    throw ParseError(source, minlen_seg ? minlen_seg->line : 1, minlen_seg ? minlen_seg->column : 1,
                     "minlen exceeds maxlen");
  }
  return spec;
}

std::string to_text(const BadSpec& spec) {
  std::ostringstream out;
  if (spec.pattern) {
    out << "regex: " << to_string(*spec.pattern) << '\n';
  } else {
    out << "list:\n";
    for (const Word& w : spec.words) out << (w.empty() ? std::string(kEpsilonToken) : to_string(w)) << '\n';
  }
  if (spec.min_length > 0) out << "minlen: " << spec.min_length << '\n';
  if (spec.max_length) out << "maxlen: " << *spec.max_length << '\n';
  return out.str();
}

Nfa regex_automaton(const RegexNode& regex, const Alphabet& alphabet) {
  Nfa nfa(alphabet);
  Fragment f = build(regex, alphabet, nfa);
  nfa.add_transition(0, kEpsilon, f.start);
  nfa.set_accepting(f.end);
  return nfa;
}

Nfa compile_badspec(const BadSpec& spec) {
  if (spec.max_length && spec.min_length > *spec.max_length) {
    throw ContractViolation("compile_badspec: minlen exceeds maxlen");
  }
  if (spec.pattern) {
    if (!spec.max_length) throw ContractViolation("compile_badspec: a regex needs a maxlen");
    Nfa pattern = regex_automaton(*spec.pattern, spec.alphabet);
    return normalize(intersect(pattern, length_window(spec.alphabet, spec.min_length, *spec.max_length)));
  }
  Nfa listed = from_word_set(spec.words, spec.alphabet);
  if (!spec.max_length && spec.min_length == 0) return listed;
  std::size_t longest = 0;
  for (const Word& w : spec.words) longest = std::max(longest, w.size());
  std::size_t upper = spec.max_length.value_or(longest);
  if (spec.min_length > upper) return Nfa(spec.alphabet);
  return normalize(intersect(listed, length_window(spec.alphabet, spec.min_length, upper)));
}

}  // namespace pushin
