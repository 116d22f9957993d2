#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "clusternet/error.hpp"
#include "clusternet/reactions.hpp"

using namespace clusternet;

namespace {

BalanceMatrix matrix(IntMatrix rows) {
  BalanceMatrix m;
  m.rows = std::move(rows);
  for (std::size_t i = 0; i < m.rows.front().size(); ++i) {
    m.species.push_back("s" + std::to_string(i));
  }
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    m.row_labels.push_back("r" + std::to_string(r));
  }
  return m;
}

// All d in ker(A), d != 0, entries in [-k, bound], ||d^-||_1 <= k.
std::set<Move> brute_kernel(const IntMatrix& A, Coord bound, Coord k) {
  const std::size_t n = A.front().size();
  std::set<Move> out;
  std::vector<Coord> d(n, -k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Coord neg = 0;
      bool zero = true;
      for (Coord c : d) {
        if (c < 0) neg -= c;
        zero = zero && c == 0;
      }
      if (zero || neg > k) return;
      for (const auto& row : A) {
        Coord s = 0;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * d[j];
        if (s != 0) return;
      }
      out.insert(Move(d));
      return;
    }
    for (Coord c = -k; c <= bound; ++c) {
      d[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("enumerate_elementary on (1 1)") {
  const auto A = matrix({{1, 1}});
  const auto r = enumerate_elementary(A, Grading({{1, 1}}));
  CHECK(r.systems.size() == 5);
  CHECK(r.count(CountingConvention::PerSystem) == 8);
  CHECK(r.count(CountingConvention::Distinct) == 4);
  CHECK(r.distinct == std::vector<Move>{{-2, 2}, {-1, 1}, {1, -1}, {2, -2}});
  // Systems ordered by size, then species indices.
  CHECK(r.systems[0].reactants == Exponent{1, 0});
  CHECK(r.systems[1].reactants == Exponent{0, 1});
  CHECK(r.systems[2].reactants == Exponent{2, 0});
  CHECK(r.systems[3].reactants == Exponent{1, 1});
  CHECK(r.systems[4].reactants == Exponent{0, 2});
}

TEST_CASE("enumerate_elementary on the permanganate matrix") {
  const auto A = matrix({
      {0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 2, 2, 2, 1},
      {2, 2, 0, 2, 0, 2, 0, 0, 0, 1, 0, 2, 1, 2, 4, 2, 2, 2, 2},
      {2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 1, 0, 1, 3},
      {4, 4, 0, 4, 0, 4, 4, 2, 0, 2, 1, 6, 2, 4, 8, 8, 7, 7, 6},
      {0, 1, -1, 2, -2, 0, 1, 0, -3, 0, 0, 0, 1, -1, 1, 0, -1, -2, -1}});
  const auto g = find_positive_grading(A.rows);
  const auto r = enumerate_elementary(A, g);
  CHECK(r.systems.size() == 209);
  CHECK(r.count(kDefaultConvention) == 1022);
  CHECK(r.count(CountingConvention::PerSystem) == 1668);
  for (const Move& d : r.distinct) {
    Coord neg = 0;
    for (Coord c : d) neg += c < 0 ? -c : 0;
    CHECK(neg <= 2);
    for (const auto& row : A.rows) {
      Coord s = 0;
      for (std::size_t j = 0; j < d.size(); ++j) s += row[j] * d[j];
      CHECK(s == 0);
    }
    CHECK(g.is_homogeneous(d));
  }
  const auto ts = partition_transitions(r.distinct, A.species, g);
  CHECK(ts.reversible.size() == 24);
  CHECK(ts.irreversible.size() == 974);
  CHECK(2 * ts.reversible.size() + ts.irreversible.size() == 1022);
}

TEST_CASE("threaded enumeration is identical") {
  const auto A = matrix({{1, 2, 1, 0}, {0, 1, 1, 2}});
  const auto g = find_positive_grading(A.rows);
  const auto one = enumerate_elementary(A, g, 2, 100000, 1);
  const auto four = enumerate_elementary(A, g, 2, 100000, 4);
  CHECK(one.distinct == four.distinct);
  CHECK(one.instance_count == four.instance_count);
  REQUIRE(one.systems.size() == four.systems.size());
  for (std::size_t i = 0; i < one.systems.size(); ++i) {
    CHECK(one.systems[i].reactants == four.systems[i].reactants);
    CHECK(one.systems[i].solutions == four.systems[i].solutions);
  }
}

TEST_CASE("enumerate_elementary agrees with a naive kernel search") {
  std::mt19937_64 rng(31);
  int tried = 0;
  while (tried < 60) {
    const std::size_t m = 1 + rng() % 3, n = 2 + rng() % 3;
    IntMatrix rows(m, std::vector<Coord>(n));
    for (auto& row : rows) {
      for (auto& x : row) x = static_cast<Coord>(rng() % 3);
    }
    Grading g;
    try {
      g = find_positive_grading(rows);
    } catch (const NoPositiveGrading&) {
      continue;
    }
    ++tried;
    const auto got = enumerate_elementary(matrix(rows), g, 2);
    // Entries of d are bounded by the fiber: |d_i| <= g.r <= 2 max g.
    const Coord bound = 2 * *std::max_element(g.rows().front().begin(),
                                              g.rows().front().end());
    const auto want = brute_kernel(rows, bound, 2);
    CHECK(std::set<Move>(got.distinct.begin(), got.distinct.end()) == want);
  }
}

TEST_CASE("partition_transitions") {
  const Grading g({{1, 1}});
  auto ts = partition_transitions({Move{1, -1}, Move{-1, 1}}, {"a", "b"}, g);
  CHECK(ts.reversible == std::vector<Move>{{1, -1}});
  CHECK(ts.irreversible.empty());
  ts = partition_transitions({Move{-1, 1}, Move{1, -1}, Move{2, -2}}, {"a", "b"}, g);
  CHECK(ts.reversible == std::vector<Move>{{1, -1}});
  CHECK(ts.irreversible == std::vector<Move>{{2, -2}});
  CHECK(ts.all_moves() == std::vector<Move>{{-1, 1}, {1, -1}, {2, -2}});
  CHECK_THROWS_AS(partition_transitions({Move{0, 0}}, {"a", "b"}, g),
                  InvalidArgument);
  CHECK_THROWS_AS(partition_transitions({Move{1, -1}, Move{0, -1}}, {"a", "b"}, g),
                  InvalidArgument);
}

TEST_CASE("partition round trip") {
  const std::vector<Move> input{{1, -1, 0}, {-1, 1, 0}, {0, 1, -1},
                                {2, -1, -1}, {-2, 1, 1}, {1, 0, -1}};
  const auto ts =
      partition_transitions(input, {"a", "b", "c"}, Grading({{1, 1, 1}}));
  auto sorted = input;
  std::sort(sorted.begin(), sorted.end());
  CHECK(ts.all_moves() == sorted);
}

TEST_CASE("encode_overall") {
  Exponent s(19), t(19);
  s.set(0, 5);
  s.set(2, 6);
  s.set(6, 2);
  t.set(4, 2);
  t.set(9, 10);
  t.set(10, 8);
  CHECK(encode_overall(s, t) ==
        Move{-5, 0, -6, 0, 2, 0, -2, 0, 0, 10, 8, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(encode_overall(s, s).is_zero());
  CHECK(encode_overall(Exponent{1, 0, 0}, Exponent{0, 0, 1}) == Move{-1, 0, 1});
}
