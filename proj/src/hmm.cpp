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

#include "fstag/hmm.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "fstag/errors.hpp"

namespace fstag {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string w;
  while (iss >> w) out.push_back(w);
  return out;
}

void normalize(std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  if (total <= 0.0) throw DataError("cannot normalize a zero distribution");
  for (double& x : v) x /= total;
}

}  // namespace

Biases Biases::load(std::istream& in, const TagInventory& inv) {
  Biases biases;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> atoms = split_ws(raw);
    if (atoms.empty()) continue;
    try {
      if (atoms[0] == "SYMBOL") {
        TagSet members;
        std::size_t i = 1;
        for (; i < atoms.size() && atoms[i] != ":"; ++i)
          members.insert(inv.parse(atoms[i]));
        if (members.empty() || i >= atoms.size())
          throw DataError("expected `SYMBOL tags... : tag=weight ...`");
        std::map<Tag, double> weights;
        for (++i; i < atoms.size(); ++i) {
          std::size_t eq = atoms[i].find('=');
          if (eq == std::string::npos)
            throw DataError("expected tag=weight, got \"" + atoms[i] + "\"");
          Tag tag = inv.parse(atoms[i].substr(0, eq));
          double weight = std::stod(atoms[i].substr(eq + 1));
          if (!(weight > 0.0))
            throw DataError("symbol weight must be positive");
          if (!members.contains(tag))
            throw DataError("symbol bias references tag " + inv.name(tag) +
                            " outside its class");
          weights[tag] = weight;
        }
        if (weights.empty()) throw DataError("symbol bias without weights");
        biases.symbol[members] = std::move(weights);
      } else if (atoms[0] == "TRANS") {
        if (atoms.size() != 4)
          throw DataError("expected `TRANS tag tag weight`");
        Tag from = inv.parse(atoms[1]);
        Tag to = inv.parse(atoms[2]);
        double weight = std::stod(atoms[3]);
        if (weight < 0.0)
          throw DataError("transition multiplier must be nonnegative");
        biases.transition[{from, to}] = weight;
      } else {
        throw DataError("expected SYMBOL or TRANS, got \"" + atoms[0] + "\"");
      }
    } catch (const DataError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number", lineno);
    }
  }
  return biases;
}

HmmModel::HmmModel(const TagInventory& inv) : inv_(&inv) {}

HmmModel HmmModel::init(const TagInventory& inv,
                        const std::vector<TagSet>& classes,
                        const Biases& biases) {
  if (classes.empty() && biases.symbol.empty())
    throw DataError("no ambiguity classes to initialize from");
  HmmModel m(inv);
  std::size_t n = inv.size();
  m.initial_.assign(n, 1.0 / static_cast<double>(n));
  m.transition_.assign(n, std::vector<double>(n, 1.0));
  for (const auto& [pair, mult] : biases.transition)
    m.transition_[pair.first.id()][pair.second.id()] = mult;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      normalize(m.transition_[i]);
    } catch (const DataError&) {
      throw DataError("transition biases zero out every successor of " +
                      inv.name(Tag(inv.all()[i])));
    }
  }
  auto add_class = [&](const TagSet& members) {
    if (members.empty()) throw DataError("empty ambiguity class");
    if (m.class_index_.count(members)) return;
    ClassEntry entry;
    entry.members = members;
    auto bias_it = biases.symbol.find(members);
    for (Tag t : members) {
      double w = 1.0;
      if (bias_it != biases.symbol.end()) {
        auto wit = bias_it->second.find(t);
        if (wit != bias_it->second.end()) w = wit->second;
      }
      entry.probs.push_back(w);
    }
    normalize(entry.probs);
    m.class_index_[members] = m.classes_.size();
    m.classes_.push_back(std::move(entry));
  };
  for (const TagSet& c : classes) add_class(c);
  for (const auto& [members, weights] : biases.symbol) {
    for (const auto& [tag, weight] : weights) {
      (void)weight;
      if (!members.contains(tag))
        throw DataError("symbol bias references tag " + inv.name(tag) +
                        " outside its class");
    }
    add_class(members);
  }
  return m;
}

std::optional<ClassId> HmmModel::find_class(const TagSet& members) const {
  auto it = class_index_.find(members);
  if (it == class_index_.end()) return std::nullopt;
  return it->second;
}

ClassId HmmModel::class_id(const TagSet& members) const {
  if (auto id = find_class(members)) return *id;
  throw DataError("unknown ambiguity class {" + inv_->to_string(members) +
                  "}");
}

ClassId HmmModel::ensure_class(const TagSet& members) {
  if (auto id = find_class(members)) return *id;
  if (members.empty()) throw DataError("empty ambiguity class");
  ClassEntry entry;
  entry.members = members;
  entry.probs.assign(members.size(), 1.0 / static_cast<double>(members.size()));
  class_index_[members] = classes_.size();
  classes_.push_back(std::move(entry));
  return classes_.size() - 1;
}

double HmmModel::emission(ClassId c, Tag t) const {
  const ClassEntry& entry = classes_.at(c);
  std::size_t i = 0;
  for (Tag member : entry.members) {
    if (member == t) return entry.probs[i];
    ++i;
  }
  return 0.0;  // support constraint: zero outside the class
}

void HmmModel::save(std::ostream& out) const {
  out << "fstag-hmm 1\n";
  out << "tags " << num_tags() << "\n";
  for (Tag t : inv_->all()) out << inv_->name(t) << "\n";
  out << "initial\n";
  for (std::size_t i = 0; i < initial_.size(); ++i)
    out << (i ? " " : "") << format_double(initial_[i]);
  out << "\ntransition\n";
  for (const auto& row : transition_) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << format_double(row[j]);
    out << "\n";
  }
  out << "classes " << classes_.size() << "\n";
  for (const ClassEntry& entry : classes_) {
    out << "class " << inv_->to_string(entry.members) << "\n";
    for (std::size_t i = 0; i < entry.probs.size(); ++i)
      out << (i ? " " : "") << format_double(entry.probs[i]);
    out << "\n";
  }
  out << "end\n";
}

HmmModel HmmModel::load(std::istream& in, const TagInventory& inv) {
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line)) throw DataError("truncated model file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  if (next_line() != "fstag-hmm 1")
    throw DataError("not a fstag-hmm version 1 model file");
  std::vector<std::string> head = split_ws(next_line());
  if (head.size() != 2 || head[0] != "tags")
    throw DataError("expected `tags N` in model file");
  std::size_t n = std::stoul(head[1]);
  if (n != inv.size())
    throw DataError("model tag count does not match the inventory");
  for (std::size_t i = 0; i < n; ++i) {
    if (next_line() != inv.name(Tag(inv.all()[i])))
      throw DataError("model tag list does not match the inventory");
  }
  HmmModel m(inv);
  if (next_line() != "initial") throw DataError("expected `initial`");
  {
    std::vector<std::string> nums = split_ws(next_line());
    if (nums.size() != n) throw DataError("bad initial vector length");
    for (const std::string& s : nums) m.initial_.push_back(std::stod(s));
  }
  if (next_line() != "transition") throw DataError("expected `transition`");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> nums = split_ws(next_line());
    if (nums.size() != n) throw DataError("bad transition row length");
    std::vector<double> row;
    for (const std::string& s : nums) row.push_back(std::stod(s));
    m.transition_.push_back(std::move(row));
  }
  head = split_ws(next_line());
  if (head.size() != 2 || head[0] != "classes")
    throw DataError("expected `classes K` in model file");
  std::size_t k = std::stoul(head[1]);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::string> atoms = split_ws(next_line());
    if (atoms.size() < 2 || atoms[0] != "class")
      throw DataError("expected `class tags...` in model file");
    ClassEntry entry;
    for (std::size_t i = 1; i < atoms.size(); ++i)
      entry.members.insert(inv.parse(atoms[i]));
    std::vector<std::string> nums = split_ws(next_line());
    if (nums.size() != entry.members.size())
      throw DataError("bad emission vector length");
    for (const std::string& s : nums) entry.probs.push_back(std::stod(s));
    if (m.class_index_.count(entry.members))
      throw DataError("duplicate class in model file");
    m.class_index_[entry.members] = m.classes_.size();
    m.classes_.push_back(std::move(entry));
  }
  if (next_line() != "end") throw DataError("expected `end`");
  return m;
}

// ---------------------------------------------------------------------
// Forward-backward machinery shared by likelihood and training.

namespace {

struct ForwardResult {
  // alpha_hat[t][i]: scaled forward probabilities over the class members.
  std::vector<std::vector<double>> alpha;
  std::vector<double> scale;
  double log_likelihood = 0.0;
  bool possible = true;
};

std::vector<ClassId> class_sequence(const HmmModel& m,
                                    const SentenceLattice& lattice,
                                    bool add_missing, HmmModel* mutable_m) {
  std::vector<ClassId> out;
  out.reserve(lattice.size());
  for (const Cohort& c : lattice.cohorts) {
    if (add_missing)
      out.push_back(mutable_m->ensure_class(c.readings));
    else
      out.push_back(m.class_id(c.readings));
  }
  return out;
}

ForwardResult forward(const HmmModel& m, const std::vector<ClassId>& cs) {
  ForwardResult r;
  const auto& trans = m.transition();
  std::size_t len = cs.size();
  r.alpha.resize(len);
  r.scale.resize(len);
  std::vector<Tag> prev_members;
  for (std::size_t t = 0; t < len; ++t) {
    const auto& entry = m.class_entry(cs[t]);
    std::vector<Tag> members(entry.members.begin(), entry.members.end());
    std::vector<double>& a = r.alpha[t];
    a.assign(members.size(), 0.0);
    if (t == 0) {
      for (std::size_t i = 0; i < members.size(); ++i)
        a[i] = m.initial()[members[i].id()] * entry.probs[i];
    } else {
      const std::vector<double>& prev = r.alpha[t - 1];
      for (std::size_t i = 0; i < members.size(); ++i) {
        double sum = 0.0;
        for (std::size_t p = 0; p < prev_members.size(); ++p)
          sum += prev[p] * trans[prev_members[p].id()][members[i].id()];
        a[i] = sum * entry.probs[i];
      }
    }
    double total = 0.0;
    for (double x : a) total += x;
    r.scale[t] = total;
    if (total <= 0.0) {
      r.possible = false;
      r.log_likelihood = kNegInf;
      return r;
    }
    for (double& x : a) x /= total;
    r.log_likelihood += std::log(total);
    prev_members = std::move(members);
  }
  return r;
}

}  // namespace

double sequence_log_likelihood(const HmmModel& model,
                               const SentenceLattice& lattice) {
  std::vector<ClassId> cs = class_sequence(model, lattice, false, nullptr);
  if (cs.empty()) throw DataError("empty sentence");
  return forward(model, cs).log_likelihood;
}

std::vector<Tag> decode(const HmmModel& model, const SentenceLattice& lattice) {
  std::vector<ClassId> cs = class_sequence(model, lattice, false, nullptr);
  if (cs.empty()) throw DataError("empty sentence");
  const auto& trans = model.transition();
  std::size_t len = cs.size();

  std::vector<std::vector<double>> delta(len);
  std::vector<std::vector<std::size_t>> back(len);
  std::vector<std::vector<Tag>> members(len);
  for (std::size_t t = 0; t < len; ++t) {
    const auto& entry = model.class_entry(cs[t]);
    members[t].assign(entry.members.begin(), entry.members.end());
    delta[t].assign(members[t].size(), kNegInf);
    back[t].assign(members[t].size(), 0);
    for (std::size_t i = 0; i < members[t].size(); ++i) {
      double emis = std::log(entry.probs[i]);
      if (t == 0) {
        delta[t][i] = std::log(model.initial()[members[t][i].id()]) + emis;
        continue;
      }
      double best = kNegInf;
      std::size_t best_p = 0;
      bool found = false;
      for (std::size_t p = 0; p < members[t - 1].size(); ++p) {
        double v = delta[t - 1][p] +
                   std::log(trans[members[t - 1][p].id()][members[t][i].id()]);
        if (!found || v > best) {
          best = v;
          best_p = p;
          found = true;
        }
      }
      delta[t][i] = best + emis;
      back[t][i] = best_p;
    }
  }

  std::size_t cur = 0;
  for (std::size_t i = 1; i < delta[len - 1].size(); ++i)
    if (delta[len - 1][i] > delta[len - 1][cur]) cur = i;
  std::vector<Tag> path(len);
  for (std::size_t t = len; t-- > 0;) {
    path[t] = members[t][cur];
    if (t > 0) cur = back[t][cur];
  }
  return path;
}

struct HmmTrainer {
  static TrainResult run(const HmmModel& model,
                         const std::vector<SentenceLattice>& corpus,
                         const TrainOptions& options) {
    if (corpus.empty()) throw DataError("empty training corpus");
    TrainResult result{model, {}};
    HmmModel& m = result.model;
    std::vector<std::vector<ClassId>> sequences;
    sequences.reserve(corpus.size());
    for (const SentenceLattice& lattice : corpus) {
      if (lattice.size() == 0) throw DataError("empty sentence in corpus");
      sequences.push_back(class_sequence(m, lattice, true, &m));
    }
    std::size_t n = m.num_tags();

    for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
      double total_ll = 0.0;
      std::vector<double> init_counts(n, 0.0);
      std::vector<std::vector<double>> trans_counts(
          n, std::vector<double>(n, 0.0));
      std::vector<std::vector<double>> emis_counts;
      for (std::size_t c = 0; c < m.num_classes(); ++c)
        emis_counts.emplace_back(m.class_entry(c).members.size(), 0.0);

      const auto& trans = m.transition();
      for (const std::vector<ClassId>& cs : sequences) {
        ForwardResult f = forward(m, cs);
        total_ll += f.log_likelihood;
        if (!f.possible) continue;  // contributes -inf, no counts
        std::size_t len = cs.size();

        // Scaled backward pass using the forward scales.
        std::vector<std::vector<double>> beta(len);
        std::vector<std::vector<Tag>> members(len);
        for (std::size_t t = 0; t < len; ++t) {
          const auto& entry = m.class_entry(cs[t]);
          members[t].assign(entry.members.begin(), entry.members.end());
        }
        beta[len - 1].assign(members[len - 1].size(), 1.0);
        for (std::size_t t = len - 1; t-- > 0;) {
          const auto& next_entry = m.class_entry(cs[t + 1]);
          beta[t].assign(members[t].size(), 0.0);
          for (std::size_t i = 0; i < members[t].size(); ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < members[t + 1].size(); ++j)
              sum += trans[members[t][i].id()][members[t + 1][j].id()] *
                     next_entry.probs[j] * beta[t + 1][j];
            beta[t][i] = sum / f.scale[t + 1];
          }
        }

        // gamma and xi accumulation.
        for (std::size_t t = 0; t < len; ++t) {
          std::vector<double>& ec = emis_counts[cs[t]];
          for (std::size_t i = 0; i < members[t].size(); ++i) {
            double g = f.alpha[t][i] * beta[t][i];
            ec[i] += g;
            if (t == 0) init_counts[members[0][i].id()] += g;
          }
        }
        for (std::size_t t = 0; t + 1 < len; ++t) {
          const auto& next_entry = m.class_entry(cs[t + 1]);
          for (std::size_t i = 0; i < members[t].size(); ++i) {
            for (std::size_t j = 0; j < members[t + 1].size(); ++j) {
              double x = f.alpha[t][i] *
                         trans[members[t][i].id()][members[t + 1][j].id()] *
                         next_entry.probs[j] * beta[t + 1][j] /
                         f.scale[t + 1];
              trans_counts[members[t][i].id()][members[t + 1][j].id()] += x;
            }
          }
        }
      }

      result.log_likelihood.push_back(total_ll);
      if (iter > 0 && total_ll - result.log_likelihood[iter - 1] < options.tol)
        break;  // converged; keep the parameters the trace entry measured

      // M step.
      double init_total = 0.0;
      for (double x : init_counts) init_total += x;
      if (init_total > 0.0)
        for (std::size_t i = 0; i < n; ++i) m.initial_[i] = init_counts[i] / init_total;
      double eps = options.transition_smoothing;
      for (std::size_t i = 0; i < n; ++i) {
        double row_total = 0.0;
        for (double x : trans_counts[i]) row_total += x;
        double denom = row_total + eps * static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j)
          m.transition_[i][j] = (trans_counts[i][j] + eps) / denom;
      }
      for (std::size_t c = 0; c < m.num_classes(); ++c) {
        double total = 0.0;
        for (double x : emis_counts[c]) total += x;
        if (total <= 0.0) continue;  // class unseen: keep previous values
        for (std::size_t i = 0; i < emis_counts[c].size(); ++i)
          m.classes_[c].probs[i] = emis_counts[c][i] / total;
      }
    }
    return result;
  }
};

TrainResult train(const HmmModel& model,
                  const std::vector<SentenceLattice>& corpus,
                  const TrainOptions& options) {
  return HmmTrainer::run(model, corpus, options);
}

}  // namespace fstag
