#include <set>

#include "doctest.h"
#include "oracles/posets.hpp"
#include "vinberg/error.hpp"
#include "vinberg/poset.hpp"

using namespace vinberg;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

ErrorCode code_of(const std::string& text) {
  try {
    parse_poset(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::CheckFailed;
}

}  // namespace

TEST_CASE("parse the four-element example poset") {
  const Poset p = parse_poset(R"({"elements": [1, 2, 3, 4], "relations": [[1, 3], [1, 4], [2, 3]]})");
  REQUIRE(p.size() == 4);
  CHECK(p.label(2) == "3");
  CHECK(p.less(0, 2));
  CHECK(p.less(0, 3));
  CHECK(p.less(1, 2));
  CHECK_FALSE(p.comparable(1, 3));
  CHECK_FALSE(p.comparable(2, 3));
  CHECK(p == oracle::p4());
}

TEST_CASE("antichain keeps the element order as linear extension") {
  const Poset p = parse_poset(R"({"elements": ["c", "a", "b"], "relations": []})");
  CHECK(p.linear_extension() == std::vector<int>{0, 1, 2});
}

TEST_CASE("parse errors") {
  CHECK(code_of(R"({"elements": [1, 2], "relations": [[1, 2], [2, 1]]})") == ErrorCode::CycleDetected);
  CHECK(code_of(R"({"elements": [1, 1], "relations": []})") == ErrorCode::DuplicateElement);
  CHECK(code_of(R"({"elements": [1, 2], "relations": [[1, 5]]})") == ErrorCode::UnknownLabelInRelation);
  CHECK(code_of(R"({"elements": [1], "relations": [[1, 1]]})") == ErrorCode::CycleDetected);
  CHECK(code_of(R"({"elements": [1, 2, 3], "relations": [[1, 2], [2, 3], [3, 1]]})") == ErrorCode::CycleDetected);
  CHECK(code_of("{not json") == ErrorCode::SpecError);
  CHECK(code_of(R"({"relations": []})") == ErrorCode::SpecError);
}

TEST_CASE("closure accepts covers or the full relation") {
  const Poset covers = Poset::from_indices(3, {{0, 1}, {1, 2}});
  const Poset full = Poset::from_indices(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(covers == full);
  CHECK(covers.less(0, 2));
}

TEST_CASE("order sets") {
  const OrderProfile e = order_sets(oracle::p4());
  CHECK(as_set(e.down[2]) == std::set<int>{0, 1, 2});
  CHECK(as_set(e.down[3]) == std::set<int>{0, 3});
  CHECK(e.rank_up[0] == 3);

  const OrderProfile a = order_sets(oracle::antichain(3));
  for (int i = 0; i < 3; ++i) CHECK(as_set(a.down[i]) == std::set<int>{i});

  const OrderProfile c = order_sets(oracle::chain(3));
  CHECK(as_set(c.up[1]) == std::set<int>{1, 2});
  CHECK(as_set(c.strict_down[2]) == std::set<int>{0, 1});
}

TEST_CASE("order sets match reachability and nest along the order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<std::pair<int, int>> rel;
    std::bernoulli_distribution coin(0.35);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) rel.emplace_back(i, j);
    const Poset p = Poset::from_indices(n, rel);
    const auto r = oracle::reach(n, rel);
    const OrderProfile prof = order_sets(p);
    for (int i = 0; i < n; ++i) {
      CHECK(prof.rank_up[i] == static_cast<int>(prof.strict_up[i].size()) + 1);
      for (int j = 0; j < n; ++j) {
        CHECK(p.leq(i, j) == static_cast<bool>(r[i][j]));
        if (!p.leq(i, j)) continue;
        const auto di = as_set(prof.down[i]), dj = as_set(prof.down[j]);
        const auto ui = as_set(prof.up[i]), uj = as_set(prof.up[j]);
        CHECK(std::includes(dj.begin(), dj.end(), di.begin(), di.end()));
        CHECK(std::includes(ui.begin(), ui.end(), uj.begin(), uj.end()));
      }
    }
  }
}

TEST_CASE("linear extension respects the order and is repeatable") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = oracle::random_poset(6, 0.4, rng);
    const Poset q = Poset::from_labels(p.labels(), [&] {
      std::vector<std::pair<std::string, std::string>> s;
      for (auto [a, b] : p.strict_pairs()) s.emplace_back(p.label(a), p.label(b));
      return s;
    }());
    CHECK(p.linear_extension() == q.linear_extension());
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (p.less(i, j)) CHECK(p.position(i) < p.position(j));
  }
}

TEST_CASE("structure sets of the named posets") {
  const StructureSets e = structure_sets(oracle::p4());
  CHECK(e.separators == std::vector<int>{2});
  CHECK(e.roots == std::vector<int>{0, 1});
  CHECK(e.element_separators[0] == std::vector<int>{2});
  CHECK(e.element_separators[1] == std::vector<int>{2});
  CHECK(e.children[0] == std::vector<int>{3});
  CHECK(e.anchors() == std::vector<int>{0, 1, 2});

  const StructureSets a = structure_sets(oracle::antichain(4));
  CHECK(a.separators.empty());
  CHECK(a.roots == std::vector<int>{0, 1, 2, 3});
  for (const auto& m : a.children) CHECK(m.empty());

  const StructureSets c = structure_sets(oracle::chain(3));
  CHECK(c.separators == std::vector<int>{2});
  CHECK(c.roots == std::vector<int>{0});
  CHECK(c.anchors() == std::vector<int>{0, 2});
}

TEST_CASE("structure sets agree with the brute-force triple scan on every poset up to six elements") {
  // Every subset of index-ordered pairs gives every poset up to relabelling.
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    const unsigned long total = 1ul << all.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
      std::vector<std::pair<int, int>> rel;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1ul) rel.push_back(all[k]);
      const Poset p = Poset::from_indices(n, rel);
      const StructureSets s = structure_sets(p);
      const oracle::BruteSets b = oracle::brute_structure(p);
      REQUIRE(as_set(s.separators) == b.separators);
      REQUIRE(as_set(s.roots) == b.roots);
      for (int i = 0; i < n; ++i) {
        REQUIRE(as_set(s.element_separators[i]) == b.element_separators[i]);
        REQUIRE(as_set(s.children[i]) == b.children[i]);
        for (int j : s.children[i]) REQUIRE(p.less(i, j));
      }
      REQUIRE(is_vinberg_admissible(p) == oracle::admissible_brute(p));
    }
  }
}

TEST_CASE("opposite poset") {
  const Poset p = oracle::p4();
  const Poset o = opposite_poset(p);
  auto pairs = o.strict_pairs();
  CHECK(std::set<std::pair<int, int>>(pairs.begin(), pairs.end()) ==
        std::set<std::pair<int, int>>{{2, 0}, {3, 0}, {2, 1}});
  CHECK(opposite_poset(o) == p);

  const Poset c = opposite_poset(oracle::chain(2));
  CHECK(c.less(1, 0));
  CHECK(c.linear_extension() == std::vector<int>{1, 0});
}

TEST_CASE("subposet keeps the induced order") {
  const Poset s = subposet(oracle::p4(), {0, 2, 3});
  REQUIRE(s.size() == 3);
  CHECK(s.labels() == std::vector<std::string>{"1", "3", "4"});
  CHECK(s.less(0, 1));
  CHECK(s.less(0, 2));
  CHECK_FALSE(s.comparable(1, 2));
}

TEST_CASE("admissibility and exact decomposition") {
  CHECK(is_vinberg_admissible(oracle::p4()));
  CHECK(is_vinberg_admissible(oracle::chain(5)));
  CHECK(is_vinberg_admissible(oracle::tree()));
  CHECK_FALSE(is_vinberg_admissible(oracle::diamond()));

  CHECK(decomposition_is_exact(oracle::p4()));
  CHECK(decomposition_is_exact(oracle::chain(4)));
  CHECK(decomposition_is_exact(oracle::antichain(3)));
  CHECK(decomposition_is_exact(oracle::tree()));
  // Two roots under a nested pair of separators: the top column is lost.
  CHECK_FALSE(decomposition_is_exact(oracle::y_poset()));
}
