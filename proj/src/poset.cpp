#include "vinberg/poset.hpp"

#include <algorithm>
#include <map>
#include "json.hpp"

#include "vinberg/error.hpp"

namespace vinberg {

namespace {

std::string label_from_json(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return v.dump();
  throw Error(ErrorCode::SpecError, "element labels must be strings or numbers");
}

}  // namespace

Poset Poset::from_indices(int n, const std::vector<std::pair<int, int>>& strict_pairs) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(strict_pairs.size());
  for (auto [a, b] : strict_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorCode::UnknownLabelInRelation, "index out of range");
    pairs.emplace_back(labels[a], labels[b]);
  }
  return from_labels(std::move(labels), pairs);
}

Poset Poset::from_labels(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& strict_pairs) {
  Poset p;
  p.n_ = static_cast<int>(labels.size());
  p.labels_ = std::move(labels);
  std::map<std::string, int> index;
  for (int i = 0; i < p.n_; ++i) {
    if (!index.emplace(p.labels_[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "element '" + p.labels_[i] + "' listed twice");
  }
  const int n = p.n_;
  p.closure_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) p.closure_[i * n + i] = 1;
  for (const auto& [a, b] : strict_pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(ErrorCode::UnknownLabelInRelation,
                  "relation (" + a + ", " + b + ") names an unknown element");
    if (ia->second == ib->second)
      throw Error(ErrorCode::CycleDetected, "relation (" + a + ", " + a + ") is reflexive");
    p.closure_[ia->second * n + ib->second] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.closure_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (p.closure_[k * n + j]) p.closure_[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.closure_[i * n + j] && p.closure_[j * n + i])
        throw Error(ErrorCode::CycleDetected,
                    "elements '" + p.labels_[i] + "' and '" + p.labels_[j] + "' precede each other");

  // Stable topological sort: repeatedly take the earliest element whose
  // strict down-set is already placed.
  std::vector<char> placed(n, 0);
  p.order_.reserve(n);
  p.pos_.assign(n, -1);
  while (static_cast<int>(p.order_.size()) < n) {
    for (int i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (int j = 0; j < n && ready; ++j)
        if (j != i && p.closure_[j * n + i] && !placed[j]) ready = false;
      if (ready) {
        placed[i] = 1;
        p.pos_[i] = static_cast<int>(p.order_.size());
        p.order_.push_back(i);
        break;
      }
    }
  }
  return p;
}

int Poset::find(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

bool Poset::operator==(const Poset& other) const {
  return n_ == other.n_ && labels_ == other.labels_ && closure_ == other.closure_;
}

Poset parse_poset(std::string_view spec_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(spec_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SpecError, std::string("cone spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw Error(ErrorCode::SpecError, "cone spec needs an \"elements\" array");
  std::vector<std::string> labels;
  for (const auto& v : doc["elements"]) labels.push_back(label_from_json(v));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array())
      throw Error(ErrorCode::SpecError, "\"relations\" must be an array of pairs");
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2)
        throw Error(ErrorCode::SpecError, "each relation must be a pair [a, b]");
      pairs.emplace_back(label_from_json(r[0]), label_from_json(r[1]));
    }
  }
  return Poset::from_labels(std::move(labels), pairs);
}

OrderProfile order_sets(const Poset& p) {
  const int n = p.size();
  OrderProfile prof;
  prof.down.resize(n);
  prof.strict_down.resize(n);
  prof.up.resize(n);
  prof.strict_up.resize(n);
  prof.rank_up.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.leq(j, i)) {
        prof.down[i].push_back(j);
        if (j != i) prof.strict_down[i].push_back(j);
      }
      if (p.leq(i, j)) {
        prof.up[i].push_back(j);
        if (j != i) prof.strict_up[i].push_back(j);
      }
    }
    prof.rank_up[i] = static_cast<int>(prof.up[i].size());
  }
  return prof;
}

std::vector<int> StructureSets::anchors() const {
  std::vector<int> out = roots;
  out.insert(out.end(), separators.begin(), separators.end());
  return out;
}

StructureSets structure_sets(const Poset& p) {
  const int n = p.size();
  StructureSets s;
  s.is_separator.assign(n, 0);
  s.is_root.assign(n, 0);
  // j separates when two distinct elements other than j lie below it.
  for (int j = 0; j < n; ++j) {
    int below = 0;
    for (int i = 0; i < n; ++i)
      if (p.less(i, j)) ++below;
    if (below >= 2) s.is_separator[j] = 1;
  }
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (p.less(j, i)) minimal = false;
    s.is_root[i] = minimal ? 1 : 0;
  }
  s.element_separators.resize(n);
  s.children.resize(n);
  for (int i = 0; i < n; ++i) {
    if (s.is_separator[i]) s.separators.push_back(i);
    if (s.is_root[i]) s.roots.push_back(i);
    for (int j = 0; j < n; ++j)
      if (s.is_separator[j] && p.leq(i, j)) s.element_separators[i].push_back(j);
  }
  for (int j = 0; j < n; ++j) {
    int only = -1, count = 0;
    for (int i = 0; i < n; ++i)
      if (p.less(i, j)) {
        only = i;
        ++count;
      }
    if (count == 1) s.children[only].push_back(j);
  }
  return s;
}

Poset opposite_poset(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [a, b] : p.strict_pairs()) pairs.emplace_back(p.label(b), p.label(a));
  return Poset::from_labels(p.labels(), pairs);
}

Poset subposet(const Poset& p, const std::vector<int>& subset) {
  std::vector<int> keep = subset;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  for (int i : keep) labels.push_back(p.label(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a : keep)
    for (int b : keep)
      if (p.less(a, b)) pairs.emplace_back(p.label(a), p.label(b));
  return Poset::from_labels(std::move(labels), pairs);
}

bool is_vinberg_admissible(const Poset& p) {
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      bool lower = false, upper = false;
      for (int c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b)) lower = true;
        if (p.leq(a, c) && p.leq(b, c)) upper = true;
      }
      if (lower && upper) return false;
    }
  return true;
}

bool decomposition_is_exact(const Poset& p) {
  const StructureSets s = structure_sets(p);
  const int n = p.size();
  // Coefficient of the up-set projection at each anchor.
  std::vector<int> coef(n, 0);
  for (int r : s.roots) coef[r] = 1;
  for (int sep : s.separators) {
    int roots_below = 0;
    for (int r : s.roots)
      if (p.leq(r, sep)) ++roots_below;
    coef[sep] = 1 - roots_below;
  }
  for (int k = 0; k < n; ++k) {
    int total = 0;
    for (int i = 0; i < n; ++i)
      if (p.leq(i, k)) total += coef[i];
    if (total != 1) return false;
  }
  return true;
}

}  // namespace vinberg
