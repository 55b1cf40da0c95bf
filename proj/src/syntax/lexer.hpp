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

#ifndef CONFIX_SRC_SYNTAX_LEXER_HPP_
#define CONFIX_SRC_SYNTAX_LEXER_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "confix/syntax/ast.hpp"

namespace confix::detail {

enum class TokenKind { kIdent, kKeyword, kInt, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::int64_t value = 0;
  SourcePos pos;
};

bool is_keyword(std::string_view word);

// Throws CdlError on an unexpected character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace confix::detail

#endif  // CONFIX_SRC_SYNTAX_LEXER_HPP_
