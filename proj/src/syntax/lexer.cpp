// Copyright 2026 The Confix Authors
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

#include "lexer.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "confix/syntax/parser.hpp"

namespace confix::detail {

namespace {

constexpr std::array<std::string_view, 25> kKeywords = {
    "class", "create", "feature", "end",   "do",      "require", "ensure",
    "local", "if",     "then",    "else",  "elseif",  "from",    "until",
    "loop",  "check",  "deferred", "not",  "and",     "or",      "True",
    "False", "Void",   "Current", "Result"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < source.size()) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < source.size() && source[i + 1] == '-') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.pos = {line, column};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < source.size() && ident_char(source[j])) ++j;
      tok.text = std::string(source.substr(i, j - i));
      tok.kind = is_keyword(tok.text) ? TokenKind::kKeyword : TokenKind::kIdent;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t value = 0;
      while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) {
        const int digit = source[j] - '0';
        if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
          throw CdlError({{DiagnosticKind::kSyntax, tok.pos, "integer literal out of range"}});
        }
        value = value * 10 + digit;
        ++j;
      }
      tok.kind = TokenKind::kInt;
      tok.value = value;
      tok.text = std::string(source.substr(i, j - i));
      advance(j - i);
    } else {
      static constexpr std::array<std::string_view, 4> kTwoChar = {":=", "/=", "<=", ">="};
      std::string_view two = source.substr(i, 2);
      bool matched = false;
      for (auto s : kTwoChar) {
        if (two == s) {
          tok.kind = TokenKind::kSymbol;
          tok.text = std::string(s);
          advance(2);
          matched = true;
          break;
        }
      }
      if (!matched) {
        static constexpr std::string_view kOneChar = ":;,.()=<>+-";
        if (kOneChar.find(c) == std::string_view::npos) {
          throw CdlError({{DiagnosticKind::kSyntax, tok.pos,
                           std::string("unexpected character '") + c + "'"}});
        }
        tok.kind = TokenKind::kSymbol;
        tok.text = std::string(1, c);
        advance(1);
      }
    }
    tokens.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::kEnd;
  end.pos = {line, column};
  tokens.push_back(end);
  return tokens;
}

}  // namespace confix::detail
