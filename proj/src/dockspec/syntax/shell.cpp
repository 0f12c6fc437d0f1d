// Copyright 2026 The dockspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dockspec/syntax/shell.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <variant>

#include "dockspec/error.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::syntax {
namespace {

[[noreturn]] void syntax_error(const std::string& what) {
  throw Error(ErrorCode::kShellSyntax, what);
}

struct RedirectOp {
  std::string op;
};

using Token = std::variant<Word, Connector, RedirectOp>;

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      switch (c) {
        case ' ':
        case '\t':
        case '\r':
          finish_word();
          ++pos_;
          break;
        case '\n':
          finish_word();
          tokens_.emplace_back(Connector::kNewline);
          ++pos_;
          break;
        case '#':
          if (!in_word_) {
            while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
          } else {
            take(1);
          }
          break;
        case '&':
          finish_word();
          if (peek(1) == '&') {
            tokens_.emplace_back(Connector::kAnd);
            pos_ += 2;
          } else if (peek(1) == '>') {
            const std::size_t len = peek(2) == '>' ? 3 : 2;
            tokens_.emplace_back(RedirectOp{std::string(src_.substr(pos_, len))});
            pos_ += len;
          } else {
            tokens_.emplace_back(Connector::kBackground);
            ++pos_;
          }
          break;
        case '|':
          finish_word();
          if (peek(1) == '|') {
            tokens_.emplace_back(Connector::kOr);
            pos_ += 2;
          } else {
            tokens_.emplace_back(Connector::kPipe);
            pos_ += peek(1) == '&' ? 2 : 1;
          }
          break;
        case ';':
          finish_word();
          tokens_.emplace_back(Connector::kSemicolon);
          ++pos_;
          break;
        case '(':
        case ')':
          finish_word();
          ++pos_;
          break;
        case '<':
        case '>':
          redirect();
          break;
        case '\'':
          single_quoted();
          break;
        case '"':
          double_quoted();
          break;
        case '\\':
          if (pos_ + 1 >= src_.size()) {
            take(1);
          } else if (src_[pos_ + 1] == '\n') {
            pos_ += 2;
          } else {
            in_word_ = true;
            word_.raw.append(src_.substr(pos_, 2));
            word_.text.push_back(src_[pos_ + 1]);
            pos_ += 2;
          }
          break;
        case '$':
          if (peek(1) == '(' || peek(1) == '{') {
            opaque(scan_balanced(pos_ + 1));
          } else {
            take(1);
          }
          break;
        case '`':
          opaque(scan_backtick(pos_));
          break;
        default:
          take(1);
      }
    }
    finish_word();
    return std::move(tokens_);
  }

 private:
  char peek(std::size_t offset) const {
    return pos_ + offset < src_.size() ? src_[pos_ + offset] : '\0';
  }

  void take(std::size_t n) {
    in_word_ = true;
    word_.raw.append(src_.substr(pos_, n));
    word_.text.append(src_.substr(pos_, n));
    pos_ += n;
  }

  void opaque(std::size_t end) {
    in_word_ = true;
    word_.raw.append(src_.substr(pos_, end - pos_));
    word_.text.append(src_.substr(pos_, end - pos_));
    pos_ = end;
  }

  void finish_word() {
    if (!in_word_) return;
    tokens_.emplace_back(std::move(word_));
    word_ = Word{};
    in_word_ = false;
  }

  // Returns the index one past the bracket closing the one at `open`.
  std::size_t scan_balanced(std::size_t open) const {
    const char open_ch = src_[open];
    const char close_ch = open_ch == '(' ? ')' : '}';
    int depth = 0;
    for (std::size_t i = open; i < src_.size(); ++i) {
      const char c = src_[i];
      if (c == '\\') {
        ++i;
      } else if (c == '\'') {
        i = src_.find('\'', i + 1);
        if (i == std::string_view::npos) syntax_error("unterminated single quote");
      } else if (c == '"') {
        for (++i; i < src_.size() && src_[i] != '"'; ++i)
          if (src_[i] == '\\') ++i;
        if (i >= src_.size()) syntax_error("unterminated double quote");
      } else if (c == open_ch) {
        ++depth;
      } else if (c == close_ch) {
        if (--depth == 0) return i + 1;
      }
    }
    syntax_error(std::string("unterminated '$") + open_ch + "'");
  }

  std::size_t scan_backtick(std::size_t open) const {
    for (std::size_t i = open + 1; i < src_.size(); ++i) {
      if (src_[i] == '\\') {
        ++i;
      } else if (src_[i] == '`') {
        return i + 1;
      }
    }
    syntax_error("unterminated backtick");
  }

  void single_quoted() {
    const std::size_t close = src_.find('\'', pos_ + 1);
    if (close == std::string_view::npos) syntax_error("unterminated single quote");
    in_word_ = true;
    word_.raw.append(src_.substr(pos_, close + 1 - pos_));
    word_.text.append(src_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
  }

  void double_quoted() {
    in_word_ = true;
    const std::size_t start = pos_;
    ++pos_;
    while (true) {
      if (pos_ >= src_.size()) syntax_error("unterminated double quote");
      const char c = src_[pos_];
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\' && pos_ + 1 < src_.size()) {
        const char next = src_[pos_ + 1];
        if (next == '$' || next == '`' || next == '"' || next == '\\') {
          word_.text.push_back(next);
        } else if (next != '\n') {
          word_.text.push_back(c);
          word_.text.push_back(next);
        }
        pos_ += 2;
      } else if (c == '$' && (peek(1) == '(' || peek(1) == '{')) {
        const std::size_t end = scan_balanced(pos_ + 1);
        word_.text.append(src_.substr(pos_, end - pos_));
        pos_ = end;
      } else if (c == '`') {
        const std::size_t end = scan_backtick(pos_);
        word_.text.append(src_.substr(pos_, end - pos_));
        pos_ = end;
      } else {
        word_.text.push_back(c);
        ++pos_;
      }
    }
    word_.raw.append(src_.substr(start, pos_ - start));
  }

  void redirect() {
    std::string fd;
    if (in_word_ && util::is_digits(word_.raw)) {
      fd = word_.raw;
      word_ = Word{};
      in_word_ = false;
    } else {
      finish_word();
    }
    std::string_view rest = src_.substr(pos_);
    std::string op;
    if (rest.rfind("<<<", 0) == 0) {
      op = "<<<";
    } else if (rest.rfind("<<", 0) == 0) {
      syntax_error("here-documents are not supported");
    } else {
      for (std::string_view candidate : {">>", ">&", ">|", "<&", "<>", ">", "<"}) {
        if (rest.rfind(candidate, 0) == 0) {
          op = std::string(candidate);
          break;
        }
      }
    }
    pos_ += op.size();
    tokens_.emplace_back(RedirectOp{fd + op});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Word word_;
  bool in_word_ = false;
  std::vector<Token> tokens_;
};

}  // namespace

std::string_view connector_token(Connector c) {
  switch (c) {
    case Connector::kAnd: return "&&";
    case Connector::kOr: return "||";
    case Connector::kSemicolon: return ";";
    case Connector::kPipe: return "|";
    case Connector::kNewline: return "\n";
    case Connector::kBackground: return "&";
    case Connector::kNone: return "";
  }
  return "";
}

std::vector<ShellStatement> parse_shell(std::string_view script) {
  std::vector<Token> tokens = Lexer(script).run();

  std::vector<ShellStatement> out;
  std::vector<Word> words;
  std::vector<Redirect> redirects;
  std::optional<std::string> pending_redirect;
  std::optional<Connector> last_connector;

  auto close_statement = [&](Connector connector) {
    if (pending_redirect) syntax_error("redirection '" + *pending_redirect + "' without target");
    if (words.empty()) syntax_error("redirection without command");
    ShellStatement st;
    st.command = std::move(words.front());
    st.arguments.assign(std::make_move_iterator(words.begin() + 1),
                        std::make_move_iterator(words.end()));
    st.redirects = std::move(redirects);
    st.connector_to_next = connector;
    out.push_back(std::move(st));
    words.clear();
    redirects.clear();
  };

  for (auto& token : tokens) {
    if (auto* word = std::get_if<Word>(&token)) {
      if (pending_redirect) {
        redirects.push_back({std::move(*pending_redirect), std::move(*word)});
        pending_redirect.reset();
      } else {
        words.push_back(std::move(*word));
      }
    } else if (auto* redir = std::get_if<RedirectOp>(&token)) {
      if (pending_redirect) syntax_error("redirection '" + *pending_redirect + "' without target");
      pending_redirect = std::move(redir->op);
    } else {
      const Connector connector = std::get<Connector>(token);
      if (words.empty() && redirects.empty() && !pending_redirect) {
        if (connector == Connector::kNewline) continue;
        syntax_error("empty statement before '" + std::string(connector_token(connector)) + "'");
      }
      close_statement(connector);
      last_connector = connector;
    }
  }

  if (!words.empty() || !redirects.empty() || pending_redirect) {
    close_statement(Connector::kNone);
  } else if (out.empty()) {
    syntax_error("empty script");
  } else if (last_connector == Connector::kAnd || last_connector == Connector::kOr ||
             last_connector == Connector::kPipe) {
    syntax_error("missing command after '" + std::string(connector_token(*last_connector)) +
                 "'");
  }
  return out;
}

std::string render_statement(const ShellStatement& statement) {
  std::string out = statement.command.raw;
  for (const auto& arg : statement.arguments) {
    out.push_back(' ');
    out.append(arg.raw);
  }
  for (const auto& r : statement.redirects) {
    out.push_back(' ');
    out.append(r.op);
    out.append(r.target.raw);
  }
  return out;
}

std::string render_statements(const std::vector<ShellStatement>& statements) {
  std::string out;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const auto& st = statements[i];
    out.append(render_statement(st));
    const bool last = i + 1 == statements.size();
    switch (st.connector_to_next) {
      case Connector::kNone: break;
      case Connector::kSemicolon: out.append(last ? ";" : "; "); break;
      case Connector::kNewline: out.push_back('\n'); break;
      default:
        out.push_back(' ');
        out.append(connector_token(st.connector_to_next));
        if (!last) out.push_back(' ');
    }
  }
  return out;
}

}  // namespace dockspec::syntax
