// Copyright 2026 The fngen Authors.
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

#ifndef FNGEN_JSONL_H_
#define FNGEN_JSONL_H_

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace fngen {

// One parsed line of a JSONL file, tagged with its origin for error messages.
struct JsonlRecord {
  nlohmann::json value;
  std::string source;  // "file.jsonl:12"
  int line = 0;
};

// Reads a line-delimited JSON file. Blank lines are allowed and skipped;
// anything else must be a single JSON object per line.
std::vector<JsonlRecord> read_jsonl(const std::filesystem::path& path);

std::vector<JsonlRecord> parse_jsonl(const std::string& text,
                                     const std::string& source_name);

// Checks a record against a closed field list. Every name in `required` must
// be present and any field outside `allowed` is an error, so typos in hand
// written data fail loudly instead of being ignored.
void require_fields(const JsonlRecord& record,
                    const std::vector<std::string>& required,
                    const std::vector<std::string>& allowed);

std::string get_string(const JsonlRecord& record, const std::string& key);
long get_int(const JsonlRecord& record, const std::string& key);
bool get_bool(const JsonlRecord& record, const std::string& key);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace fngen

#endif  // FNGEN_JSONL_H_
