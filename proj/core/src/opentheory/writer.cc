// Copyright 2026 The holtrans Authors.
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

#include "holtrans/opentheory/article.h"

namespace holtrans::opentheory {

std::string WriteCommand(const Command& c) {
  switch (c.kind) {
    case Command::Kind::kInt:
      return std::to_string(c.number);
    case Command::Kind::kName: {
      std::string out = "\"";
      for (std::size_t i = 0; i < c.name.size(); ++i) {
        const char ch = c.name[i];
        if (ch == '"') {
          out += "\\\"";
        } else if (ch == '\\') {
          // A kept escape such as \. is written back verbatim; a lone
          // backslash is escaped.
          const bool kept = i + 1 < c.name.size() && c.name[i + 1] != '"' &&
                            c.name[i + 1] != '\\';
          if (kept) {
            out += ch;
            out += c.name[++i];
          } else {
            out += "\\\\";
          }
        } else {
          out += ch;
        }
      }
      out += '"';
      return out;
    }
    case Command::Kind::kKeyword:
      return std::string(KeywordName(c.keyword));
  }
  return {};
}

std::string WriteArticle(const std::vector<Command>& commands) {
  std::string out;
  for (const Command& c : commands) {
    out += WriteCommand(c);
    out += '\n';
  }
  return out;
}

}  // namespace holtrans::opentheory
