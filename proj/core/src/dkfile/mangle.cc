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

#include "holtrans/dkfile/mangle.h"

#include <cstdint>
#include <cstdio>

namespace holtrans::dkfile {

namespace {

// Decodes one UTF-8 code point; invalid bytes decode as themselves.
std::uint32_t NextCodePoint(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  int extra = 0;
  std::uint32_t cp = b0;
  if (b0 >= 0xF0 && b0 < 0xF8) {
    extra = 3;
    cp = b0 & 0x07;
  } else if (b0 >= 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  }
  if (extra == 0 || b0 >= 0xF8 || i + extra >= s.size()) {
    ++i;
    return b0;
  }
  for (int k = 1; k <= extra; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += 1 + extra;
  return cp;
}

bool IsWord(std::uint32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

}  // namespace

std::string MangleBase(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  std::size_t i = 0;
  while (i < name.size()) {
    const std::uint32_t c = NextCodePoint(name, i);
    if (IsWord(c)) {
      out += static_cast<char>(c);
    } else if (c == '.') {
      out += '_';
    } else {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "_u%04X_", static_cast<unsigned>(c));
      out += buf;
    }
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9') || out == "Type" || out == "Kind" ||
      out == "def") {
    out.insert(out.begin(), '_');
  }
  return out;
}

Mangler::Mangler(const std::unordered_set<std::string>& reserved) : taken_(reserved) {}

void Mangler::Reserve(const std::string& id) { taken_.insert(id); }

const std::string& Mangler::Mangle(const std::string& name) {
  if (auto it = assigned_.find(name); it != assigned_.end()) return it->second;
  std::string id = MangleBase(name);
  if (taken_.contains(id)) {
    const std::string base = id;
    for (int n = 1;; ++n) {
      id = base + "_" + std::to_string(n);
      if (!taken_.contains(id)) break;
    }
    collisions_.emplace_back(name, id);
  }
  taken_.insert(id);
  return assigned_.emplace(name, std::move(id)).first->second;
}

}  // namespace holtrans::dkfile
