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

#ifndef HOLTRANS_TESTS_SUPPORT_TEST_DIRS_H_
#define HOLTRANS_TESTS_SUPPORT_TEST_DIRS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace holtrans::testing {

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& text);

// The bundled article corpus, sorted by name.
std::filesystem::path CorpusDir();
std::vector<std::string> CorpusFiles();

// Total size of the regular files in `dir` with the given extension.
std::uintmax_t TotalBytes(const std::filesystem::path& dir, const std::string& extension);

}  // namespace holtrans::testing

#endif  // HOLTRANS_TESTS_SUPPORT_TEST_DIRS_H_
