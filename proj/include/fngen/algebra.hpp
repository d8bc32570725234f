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

#ifndef FNGEN_ALGEBRA_H_
#define FNGEN_ALGEBRA_H_

#include <string>
#include <vector>

#include "fngen/corpus.hpp"
#include "fngen/extraction.hpp"
#include "fngen/patterns.hpp"

namespace fngen {

// True iff a and b share frame, verb type and voice, and b's FE
// realizations form a sub-multiset of a's. Reflexive; frequency plays no
// part. Both patterns must be canonical.
bool subsumes(const ValencePattern& a, const ValencePattern& b);

// Keeps patterns seen at least min_freq times. The classic pre-filter drops
// once-used patterns, i.e. min_freq = 2.
PatternSet filter_min_freq(const PatternSet& set, long min_freq);
PatternSet filter_once_used(const PatternSet& set);

// Cross-corpus comparison. A pattern of one set enters the shared set when
// some pattern of the other set subsumes it (reflexivity makes identical
// patterns shared automatically); afterwards every pattern strictly subsumed
// by another shared pattern is removed, leaving the maximal elements.
// Patterns equal across sets merge with summed frequencies.
PatternSet shared_set(const PatternSet& s1, const PatternSet& s2);

// Adds a passive counterpart for every transitive active pattern that has
// both a subject and a direct object, unless the set already has a passive
// pattern for that frame and verb type. The object is promoted to subject,
// the subject demoted to an agent by-phrase. Derived patterns carry freq 0
// so statistics can tell them from observed ones.
PatternSet derive_passive(const PatternSet& set);

struct CoverageReport {
  size_t covered = 0;
  size_t total = 0;  // non-skipped sentences within the shared frames
  size_t skipped = 0;
  bool empty_denominator = false;

  double fraction() const {
    return total == 0 ? 0.0
                      : static_cast<double>(covered) /
                            static_cast<double>(total);
  }
};

// Fraction of corpus sentences whose extracted pattern is subsumed by some
// shared pattern, over the sentences whose frame occurs in the shared set
// at all. Skipped sentences count in neither side.
CoverageReport coverage(const PatternSet& shared, const Corpus& corpus,
                        const GeneralizationTable& table);

// A valence pattern with the frame element names erased: just the shapes of
// the slots. Passive agents display as plain Adv slots.
struct SyntacticSkeleton {
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<std::pair<PhraseCat, SynRole>> slots;

  bool operator==(const SyntacticSkeleton& other) const;
  bool operator<(const SyntacticSkeleton& other) const;
};

SyntacticSkeleton skeleton_of(const ValencePattern& pattern);

// "Adv NP_Subj" style slot rendering.
std::string skeleton_slots_string(const SyntacticSkeleton& skeleton);

struct SkeletonCount {
  SyntacticSkeleton skeleton;
  size_t count = 0;  // distinct patterns, not frequency-weighted
};

// Distinct-pattern counts per skeleton, most common shape first; ties break
// on the skeleton itself so the table is reproducible.
std::vector<SkeletonCount> stats(const PatternSet& set);

std::string stats_to_text(const std::vector<SkeletonCount>& rows);
std::string stats_to_jsonl(const std::vector<SkeletonCount>& rows);

}  // namespace fngen

#endif  // FNGEN_ALGEBRA_H_
