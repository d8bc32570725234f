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

// Shared fixtures for the test binaries: paths into the bundled data set,
// a scratch directory helper, and hand-rolled random generators for the
// property tests.

#ifndef FNGEN_TESTS_HELPERS_H_
#define FNGEN_TESTS_HELPERS_H_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "fngen/algebra.hpp"
#include "fngen/corpus.hpp"
#include "fngen/patterns.hpp"
#include "fngen/types.hpp"

namespace fngen_tests {

inline std::filesystem::path data_dir() {
  return std::filesystem::path(FNGEN_DATA_DIR);
}

inline std::filesystem::path data_file(const std::string& name) {
  return data_dir() / name;
}

// Creates (and wipes on destruction) a unique scratch directory.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("fngen_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// ---------------------------------------------------------------------------
// Random valence patterns.
//
// The generator produces canonical patterns that satisfy the documented
// invariants: roles only on NPs, Agent only under passive voice, at most one
// FE per role apart from None. FE names repeat across patterns so that
// subsumption actually fires.

struct PatternGen {
  std::mt19937 rng;
  std::vector<std::string> frames = {"Alpha", "Beta", "Gamma"};
  std::vector<std::string> fe_names = {"Agent_like", "Theme", "Goal",
                                       "Source",     "Topic", "Manner"};

  explicit PatternGen(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  fngen::ValencePattern pattern(int max_fes = 5) {
    using namespace fngen;
    ValencePattern p;
    p.frame = frames[pick(static_cast<int>(frames.size()))];
    p.verb_type = static_cast<VerbType>(pick(7));
    p.voice = pick(2) == 0 ? Voice::Act : Voice::Pass;
    int n = pick(max_fes + 1);
    bool used_subj = false, used_dobj = false, used_iobj = false,
         used_agent = false;
    for (int i = 0; i < n; ++i) {
      FERealization fe;
      fe.fe_name = fe_names[pick(static_cast<int>(fe_names.size()))];
      int cat = pick(4);
      fe.cat = static_cast<PhraseCat>(cat);
      fe.role = SynRole::None;
      if (fe.cat == PhraseCat::NP) {
        switch (pick(5)) {
          case 0:
            if (!used_subj) {
              fe.role = SynRole::Subj;
              used_subj = true;
            }
            break;
          case 1:
            if (!used_dobj) {
              fe.role = SynRole::DObj;
              used_dobj = true;
            }
            break;
          case 2:
            if (!used_iobj) {
              fe.role = SynRole::IObj;
              used_iobj = true;
            }
            break;
          case 3:
            if (!used_agent && p.voice == Voice::Pass) {
              fe.role = SynRole::Agent;
              used_agent = true;
            }
            break;
          default:
            break;
        }
      }
      p.fes.push_back(fe);
    }
    p.freq = 1 + pick(5);
    canonicalize(&p);
    return p;
  }

  fngen::PatternSet set(int count, const std::string& fn_id) {
    fngen::PatternSet s;
    s.fn_id = fn_id;
    for (int i = 0; i < count; ++i) s.add(pattern());
    return s;
  }
};

// Brute-force subsumption: same header and multiset containment by counting.
inline bool oracle_subsumes(const fngen::ValencePattern& a,
                            const fngen::ValencePattern& b) {
  if (a.frame != b.frame || a.verb_type != b.verb_type || a.voice != b.voice) {
    return false;
  }
  std::map<std::tuple<std::string, int, int>, int> have;
  for (const auto& fe : a.fes) {
    ++have[{fe.fe_name, static_cast<int>(fe.cat), static_cast<int>(fe.role)}];
  }
  for (const auto& fe : b.fes) {
    auto key = std::tuple<std::string, int, int>{
        fe.fe_name, static_cast<int>(fe.cat), static_cast<int>(fe.role)};
    auto it = have.find(key);
    if (it == have.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

// The shared-set definition, written out literally: candidates subsumed by
// the other side, equal patterns merged with summed frequencies, then
// everything strictly below another candidate dropped.
inline fngen::PatternSet oracle_shared_set(const fngen::PatternSet& s1,
                                           const fngen::PatternSet& s2) {
  using namespace fngen;
  std::vector<ValencePattern> v1 = s1.sorted();
  std::vector<ValencePattern> v2 = s2.sorted();
  PatternSet candidates;
  candidates.fn_id = s1.fn_id + "+" + s2.fn_id;
  for (const auto& p : v1) {
    for (const auto& q : v2) {
      if (oracle_subsumes(q, p)) {
        candidates.add(p);
        break;
      }
    }
  }
  for (const auto& p : v2) {
    for (const auto& q : v1) {
      if (oracle_subsumes(q, p)) {
        candidates.add(p);
        break;
      }
    }
  }
  std::vector<ValencePattern> pool = candidates.sorted();
  PatternSet result;
  result.fn_id = candidates.fn_id;
  for (const auto& p : pool) {
    bool maximal = true;
    for (const auto& q : pool) {
      if (!q.same_pattern(p) && oracle_subsumes(q, p)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.add(p);
  }
  return result;
}

}  // namespace fngen_tests

#endif  // FNGEN_TESTS_HELPERS_H_
