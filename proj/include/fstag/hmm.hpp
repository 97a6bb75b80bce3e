// Copyright 2026 The fstag authors
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

// First-order HMM over tags emitting ambiguity classes.  States are the
// inventory tags; an observation is a cohort's reading set.  Initialized
// from symbol and transition biases, trained unsupervised with
// forward-backward EM, decoded with Viterbi restricted to each cohort's
// readings.  Word-specific tags stay distinct inside the model.

#ifndef FSTAG_HMM_HPP
#define FSTAG_HMM_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fstag/lattice.hpp"
#include "fstag/tagset.hpp"

namespace fstag {

// Initial values before training.  Symbol biases are relative per-tag
// weights inside one ambiguity class; transition biases multiply the
// uniform row entry for a tag pair (0 forbids the pair outright).
struct Biases {
  std::map<TagSet, std::map<Tag, double>> symbol;
  std::map<std::pair<Tag, Tag>, double> transition;

  // File format: `SYMBOL tag... : tag=weight ...` and
  // `TRANS tag tag weight` lines, `#` comments.
  static Biases load(std::istream& in, const TagInventory& inv);
};

using ClassId = std::size_t;

class HmmModel {
 public:
  struct ClassEntry {
    TagSet members;
    std::vector<double> probs;  // aligned with members, sums to 1
  };

  // Uniform initial vector; transition rows proportional to the bias
  // multipliers (default 1); per-class emissions proportional to the
  // symbol weights (default 1).  Classes named only in the biases are
  // registered too.  Throws DataError if a symbol bias references a tag
  // outside its class, or a transition bias zeroes out a whole row.
  static HmmModel init(const TagInventory& inv,
                       const std::vector<TagSet>& classes,
                       const Biases& biases = Biases());

  const TagInventory& inventory() const { return *inv_; }
  std::size_t num_tags() const { return initial_.size(); }
  std::size_t num_classes() const { return classes_.size(); }

  const std::vector<double>& initial() const { return initial_; }
  const std::vector<std::vector<double>>& transition() const {
    return transition_;
  }
  const ClassEntry& class_entry(ClassId id) const { return classes_.at(id); }

  std::optional<ClassId> find_class(const TagSet& members) const;
  ClassId class_id(const TagSet& members) const;  // throws on unknown class
  ClassId ensure_class(const TagSet& members);    // adds with uniform probs

  double emission(ClassId c, Tag t) const;

  // Versioned plain-text dump; numbers are printed round-trippably.
  void save(std::ostream& out) const;
  static HmmModel load(std::istream& in, const TagInventory& inv);

 private:
  friend struct HmmTrainer;
  explicit HmmModel(const TagInventory& inv);

  const TagInventory* inv_;
  std::vector<double> initial_;
  std::vector<std::vector<double>> transition_;
  std::vector<ClassEntry> classes_;
  std::map<TagSet, ClassId> class_index_;
};

struct TrainOptions {
  std::size_t max_iter = 20;
  double tol = 1e-4;
  // Additive smoothing on transition re-estimates, to avoid zero-locking.
  double transition_smoothing = 1e-6;
};

struct TrainResult {
  HmmModel model;
  // Corpus log-likelihood of the model before each iteration's update;
  // nondecreasing (up to the smoothing term).
  std::vector<double> log_likelihood;
};

// Forward-backward EM over the corpus class sequences.  Classes unseen
// by the model are added with uniform emissions.  Stops after max_iter
// iterations or when the log-likelihood improves by less than tol.
TrainResult train(const HmmModel& model,
                  const std::vector<SentenceLattice>& corpus,
                  const TrainOptions& options = TrainOptions());

// Viterbi over the cohorts' reading sets, in log space.  Ties go to the
// lower tag id, resolved backward from the end of the sentence.
std::vector<Tag> decode(const HmmModel& model, const SentenceLattice& lattice);

// Log of the total probability of the class sequence (all hidden paths),
// by the scaled forward recursion; -infinity for impossible sequences.
double sequence_log_likelihood(const HmmModel& model,
                               const SentenceLattice& lattice);

}  // namespace fstag

#endif  // FSTAG_HMM_HPP
