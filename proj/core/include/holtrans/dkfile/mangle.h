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

#ifndef HOLTRANS_DKFILE_MANGLE_H_
#define HOLTRANS_DKFILE_MANGLE_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace holtrans::dkfile {

// Maps an arbitrary (namespaced, UTF-8) name to an identifier: `.` becomes
// `_`, other non-identifier code points become `_uXXXX_`, and a leading
// digit or a reserved word gets a `_` prefix. Not injective on its own.
std::string MangleBase(std::string_view name);

// Injective mangling within one document. Clashes get a numeric suffix and
// are listed in collisions() so that the emitter can document them.
class Mangler {
 public:
  Mangler() = default;
  explicit Mangler(const std::unordered_set<std::string>& reserved);

  // Marks an identifier as taken by something that is not a mangled name.
  void Reserve(const std::string& id);
  const std::string& Mangle(const std::string& name);
  bool Contains(const std::string& name) const { return assigned_.contains(name); }
  // True when `id` is reserved or already assigned.
  bool Taken(const std::string& id) const { return taken_.contains(id); }

  const std::vector<std::pair<std::string, std::string>>& collisions() const {
    return collisions_;
  }

 private:
  std::unordered_map<std::string, std::string> assigned_;
  std::unordered_set<std::string> taken_;
  std::vector<std::pair<std::string, std::string>> collisions_;
};

}  // namespace holtrans::dkfile

#endif  // HOLTRANS_DKFILE_MANGLE_H_
