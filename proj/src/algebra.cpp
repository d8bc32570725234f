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

#include "fngen/algebra.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace fngen {

namespace {

// Bucket key for pairwise comparisons: subsumption can only hold within the
// same frame, verb type and voice.
struct BucketKey {
  std::string frame;
  VerbType verb_type;
  Voice voice;

  bool operator<(const BucketKey& other) const {
    if (frame != other.frame) return frame < other.frame;
    if (verb_type != other.verb_type) {
      return verb_type_name(verb_type) < verb_type_name(other.verb_type);
    }
    return voice_wire(voice) < voice_wire(other.voice);
  }
};

BucketKey KeyOf(const ValencePattern& p) {
  return {p.frame, p.verb_type, p.voice};
}

using Buckets = std::map<BucketKey, std::vector<const ValencePattern*>>;

Buckets BucketPatterns(const std::vector<ValencePattern>& patterns) {
  Buckets buckets;
  for (const auto& p : patterns) buckets[KeyOf(p)].push_back(&p);
  return buckets;
}

// Multiset containment of sorted FE lists.
bool FesContain(const std::vector<FERealization>& big,
                const std::vector<FERealization>& small) {
  size_t i = 0;
  for (const auto& fe : small) {
    while (i < big.size() && big[i] < fe) ++i;
    if (i == big.size() || !(big[i] == fe)) return false;
    ++i;
  }
  return true;
}

}  // namespace

bool subsumes(const ValencePattern& a, const ValencePattern& b) {
  return a.frame == b.frame && a.verb_type == b.verb_type &&
         a.voice == b.voice && FesContain(a.fes, b.fes);
}

PatternSet filter_min_freq(const PatternSet& set, long min_freq) {
  PatternSet out;
  out.fn_id = set.fn_id;
  for (const auto& [pattern, freq] : set.patterns) {
    if (freq >= min_freq) {
      out.patterns.emplace(pattern, freq);
    }
  }
  return out;
}

PatternSet filter_once_used(const PatternSet& set) {
  return filter_min_freq(set, 2);
}

PatternSet shared_set(const PatternSet& s1, const PatternSet& s2) {
  auto p1 = s1.sorted();
  auto p2 = s2.sorted();
  Buckets b1 = BucketPatterns(p1);
  Buckets b2 = BucketPatterns(p2);

  // Patterns subsumed by something on the other side enter the candidate
  // pool; equal patterns from both sides merge with summed freqs.
  PatternSet candidates;
  auto collect = [&](const std::vector<ValencePattern>& own,
                     const Buckets& other) {
    for (const auto& p : own) {
      auto it = other.find(KeyOf(p));
      if (it == other.end()) continue;
      for (const ValencePattern* q : it->second) {
        if (subsumes(*q, p)) {
          candidates.add(p);
          break;
        }
      }
    }
  };
  collect(p1, b2);
  collect(p2, b1);

  // Keep only maximal elements: drop anything strictly subsumed by another
  // candidate.
  auto pool = candidates.sorted();
  Buckets pool_buckets = BucketPatterns(pool);
  PatternSet out;
  out.fn_id = s1.fn_id + "+" + s2.fn_id;
  for (const auto& p : pool) {
    bool dominated = false;
    for (const ValencePattern* q : pool_buckets[KeyOf(p)]) {
      if (!q->same_pattern(p) && subsumes(*q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.add(p);
  }
  return out;
}

PatternSet derive_passive(const PatternSet& set) {
  PatternSet out = set;
  for (const auto& [pattern, freq] : set.patterns) {
    if (pattern.verb_type != VerbType::V2 || pattern.voice != Voice::Act) {
      continue;
    }
    bool has_subj = false, has_dobj = false;
    for (const auto& fe : pattern.fes) {
      if (fe.role == SynRole::Subj && fe.cat == PhraseCat::NP) has_subj = true;
      if (fe.role == SynRole::DObj && fe.cat == PhraseCat::NP) has_dobj = true;
    }
    if (!has_subj || !has_dobj) continue;

    bool passive_exists = false;
    for (const auto& [other, other_freq] : set.patterns) {
      if (other.frame == pattern.frame &&
          other.verb_type == pattern.verb_type &&
          other.voice == Voice::Pass) {
        passive_exists = true;
        break;
      }
    }
    if (passive_exists) continue;

    ValencePattern derived = pattern;
    derived.voice = Voice::Pass;
    derived.freq = 1;  // key field; the stored freq below is the 0 marker
    for (auto& fe : derived.fes) {
      if (fe.role == SynRole::DObj) {
        fe.role = SynRole::Subj;
      } else if (fe.role == SynRole::Subj) {
        fe.role = SynRole::Agent;
      }
    }
    canonicalize(&derived);
    out.patterns.emplace(derived, 0);
  }
  return out;
}

CoverageReport coverage(const PatternSet& shared, const Corpus& corpus,
                        const GeneralizationTable& table) {
  std::set<std::string> shared_frames;
  for (const auto& [pattern, freq] : shared.patterns) {
    shared_frames.insert(pattern.frame);
  }
  auto pool = shared.sorted();
  Buckets buckets = BucketPatterns(pool);

  CoverageReport report;
  for (const auto& sentence : corpus.sentences) {
    auto outcome = extract_pattern(sentence, corpus.frames, table);
    if (std::holds_alternative<SkipReport>(outcome)) {
      ++report.skipped;
      continue;
    }
    const auto& pattern = std::get<ValencePattern>(outcome);
    if (!shared_frames.count(pattern.frame)) continue;
    ++report.total;
    for (const ValencePattern* q : buckets[KeyOf(pattern)]) {
      if (subsumes(*q, pattern)) {
        ++report.covered;
        break;
      }
    }
  }
  report.empty_denominator = report.total == 0;
  return report;
}

bool SyntacticSkeleton::operator==(const SyntacticSkeleton& other) const {
  return verb_type == other.verb_type && voice == other.voice &&
         slots == other.slots;
}

bool SyntacticSkeleton::operator<(const SyntacticSkeleton& other) const {
  if (verb_type != other.verb_type) {
    return verb_type_name(verb_type) < verb_type_name(other.verb_type);
  }
  if (voice != other.voice) return voice_wire(voice) < voice_wire(other.voice);
  auto slot_key = [](const std::pair<PhraseCat, SynRole>& slot) {
    return std::make_pair(cat_name(slot.first), role_wire(slot.second));
  };
  return std::lexicographical_compare(
      slots.begin(), slots.end(), other.slots.begin(), other.slots.end(),
      [&](const auto& a, const auto& b) { return slot_key(a) < slot_key(b); });
}

SyntacticSkeleton skeleton_of(const ValencePattern& pattern) {
  SyntacticSkeleton skeleton;
  skeleton.verb_type = pattern.verb_type;
  skeleton.voice = pattern.voice;
  for (const auto& fe : pattern.fes) {
    if (fe.role == SynRole::Agent) {
      skeleton.slots.emplace_back(PhraseCat::Adv, SynRole::None);
    } else {
      skeleton.slots.emplace_back(fe.cat, fe.role);
    }
  }
  std::sort(skeleton.slots.begin(), skeleton.slots.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return cat_less(a.first, b.first);
              return role_less(a.second, b.second);
            });
  return skeleton;
}

std::string skeleton_slots_string(const SyntacticSkeleton& skeleton) {
  std::string out;
  for (const auto& [cat, role] : skeleton.slots) {
    if (!out.empty()) out += " ";
    out += cat_name(cat);
    if (role != SynRole::None) out += "_" + role_label(role);
  }
  return out;
}

std::vector<SkeletonCount> stats(const PatternSet& set) {
  std::map<SyntacticSkeleton, size_t> counts;
  for (const auto& [pattern, freq] : set.patterns) {
    ++counts[skeleton_of(pattern)];
  }
  std::vector<SkeletonCount> rows;
  rows.reserve(counts.size());
  for (const auto& [skeleton, count] : counts) {
    rows.push_back({skeleton, count});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SkeletonCount& a, const SkeletonCount& b) {
                     if (a.count != b.count) return a.count > b.count;
                     return a.skeleton < b.skeleton;
                   });
  return rows;
}

std::string stats_to_text(const std::vector<SkeletonCount>& rows) {
  size_t slot_width = 7;  // header "pattern"
  for (const auto& row : rows) {
    slot_width = std::max(slot_width, skeleton_slots_string(row.skeleton).size());
  }
  std::ostringstream out;
  out << std::left << std::setw(6) << "vtype" << std::setw(7) << "voice"
      << std::setw(static_cast<int>(slot_width) + 2) << "pattern"
      << "count" << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(6) << verb_type_name(row.skeleton.verb_type)
        << std::setw(7) << voice_label(row.skeleton.voice)
        << std::setw(static_cast<int>(slot_width) + 2)
        << skeleton_slots_string(row.skeleton) << row.count << '\n';
  }
  return out.str();
}

std::string stats_to_jsonl(const std::vector<SkeletonCount>& rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& [cat, role] : row.skeleton.slots) {
      slots.push_back({{"cat", cat_name(cat)}, {"role", role_wire(role)}});
    }
    nlohmann::json record = {
        {"vtype", verb_type_name(row.skeleton.verb_type)},
        {"voice", voice_wire(row.skeleton.voice)},
        {"slots", slots},
        {"count", row.count}};
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fngen
