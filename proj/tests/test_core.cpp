#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seriate/core.hpp"
#include "seriate/seriate_set.hpp"
#include "seriate/universe.hpp"
#include "test_util.hpp"

using namespace seriate;
using test::P;
using test::code_of;

namespace {

const PointId A = P(0), B = P(1), C = P(2), D = P(3), X = P(23), Y = P(24), Q = P(16);
const PointId Pp = P(15);  // "P"

Line L(std::vector<PointId> s) { return Line::from(std::move(s)); }

}  // namespace

TEST_CASE("lines are stored canonically") {
  CHECK(L({C, B, A}) == L({A, B, C}));
  CHECK(L({C, B, A}).front() == A);
  CHECK(L({A, B}).degenerate());
  CHECK(code_of([] { L({A, B, A}); }) == Errc::not_injective);
  CHECK(code_of([] { L({A}); }) == Errc::too_few_points);
}

TEST_CASE("rings are stored canonically") {
  Ring r = Ring::from({C, A, D, B});
  CHECK_FALSE(r == Ring::from({A, B, C, D}));
  CHECK(r == Ring::from({A, D, B, C}));
  CHECK(r == Ring::from({B, D, A, C}));
  CHECK(r.points()[0] == A);
  CHECK(r.points()[1] == C);
  CHECK(code_of([] { Ring::from({A, B, C}); }) == Errc::too_few_points);
}

TEST_CASE("concat") {
  CHECK(concat(L({A, X, B}), L({B, Y, C})) == L({A, X, B, Y, C}));
  CHECK(code_of([] { concat(L({A, X, B}), L({B, X, C})); }) == Errc::shared_interior);
  CHECK(code_of([] { concat(L({A, X, B}), L({C, Y, D})); }) == Errc::no_shared_endpoint);
  CHECK(code_of([] { concat(L({A, X, B}), L({B, Y, A})); }) == Errc::multiple_shared);
}

TEST_CASE("split") {
  auto [l, r] = split(L({A, Pp, Q, B}), Q);
  CHECK(l == L({A, Pp, Q}));
  CHECK(r == L({Q, B}));
  auto [l2, r2] = split(L({A, X, B}), X);
  CHECK(l2.degenerate());
  CHECK(r2.degenerate());
  CHECK(validate_seriate(SeriateCandidate::from_points({A, X}), SeriateMode::relaxed).valid);
  CHECK(code_of([] { split(L({A, Pp, B}), A); }) == Errc::not_interior);
  CHECK(code_of([] { split(L({A, Pp, B}), C); }) == Errc::not_interior);
}

TEST_CASE("split3") {
  auto parts = split3(L({A, Pp, X, Q, B}), Pp, Q);
  CHECK(parts[0] == L({A, Pp}));
  CHECK(parts[1] == L({Pp, X, Q}));
  CHECK(parts[2] == L({Q, B}));
  CHECK(split3(L({A, Pp, X, Q, B}), Q, Pp) == parts);
  CHECK(code_of([] { split3(L({A, Pp, B}), Pp, Pp); }) == Errc::duplicate_cut);
  CHECK(code_of([] { split3(L({A, Pp, X, B}), A, X); }) == Errc::not_interior);
}

TEST_CASE("interval") {
  CHECK(interval(L({A, Pp, X, Q, B}), Pp, Q) == L({Pp, X, Q}));
  CHECK(interval(L({A, Pp, B}), A, B) == L({A, Pp, B}));
  CHECK(code_of([] { interval(L({A, Pp, B}), A, C); }) == Errc::not_member);
}

TEST_CASE("between") {
  CHECK(between(L({A, B, C}), A, B, C));
  CHECK_FALSE(between(L({A, B, C, D}), B, A, C));
  CHECK(between(Ring::from({A, B, C, D}), C, A, B));
  CHECK(code_of([] { between(L({A, B, C}), A, A, C); }) == Errc::not_distinct);
  CHECK(code_of([] { between(L({A, B, C}), A, D, C); }) == Errc::not_member);
}

TEST_CASE("ring_from_lines and ring_rechord") {
  Ring r = ring_from_lines(L({A, X, B}), L({B, Y, A}));
  CHECK(r == Ring::from({A, X, B, Y}));
  CHECK(code_of([] { ring_from_lines(L({A, X, B}), L({B, X, A})); }) == Errc::shared_interior);
  CHECK(code_of([] { ring_from_lines(L({A, X, B}), L({C, Y, A})); }) == Errc::endpoint_mismatch);

  auto [l1, l2] = ring_rechord(r, X, Y);
  CHECK(l1 == L({X, B, Y}));
  CHECK(l2 == L({Y, A, X}));
  auto [m1, m2] = ring_rechord(r, A, B);
  CHECK(m1 == L({A, X, B}));
  CHECK(m2 == L({B, Y, A}));
  CHECK(ring_from_lines(l1, l2) == r);
  CHECK(code_of([&] { ring_rechord(r, A, A); }) == Errc::not_distinct);
}

TEST_CASE("validate_seriate examples") {
  auto abc = validate_seriate(SeriateCandidate::from_points({A, B, C}), SeriateMode::strict);
  CHECK(abc.valid);
  REQUIRE(abc.decompositions.size() == 1);
  CHECK(abc.decompositions[0].pieces.size() == 2);

  auto rep = validate_seriate(SeriateCandidate::from_points({A, B, A}), SeriateMode::strict);
  CHECK_FALSE(rep.valid);
  CHECK(rep.failed_clause == "a");

  CHECK_FALSE(validate_seriate(SeriateCandidate::from_points({A, B}), SeriateMode::strict).valid);
  CHECK(validate_seriate(SeriateCandidate::from_points({A, B}), SeriateMode::relaxed).valid);

  SeriateCandidate mixed = SeriateCandidate::from_points({A, B, C});
  mixed.members[1] = Member::line(L({X, Y, Q}));
  CHECK(code_of([&] { validate_seriate(mixed, SeriateMode::strict); }) == Errc::dimension_mismatch);
}

TEST_CASE("a closed loop of sub-sets fails clause (v)") {
  // 0 -[0,1]- 1 -[1,5]- 5 carries the ends; {2,3},{3,4},{4,2} close on themselves.
  SeriateCandidate c = SeriateCandidate::from_points({P(0), P(1), P(2), P(3), P(4), P(5)});
  std::vector<Piece> loop{{{0, 1}, 0, 1}, {{1, 5}, 1, 5}, {{2, 3}, 2, 3}, {{3, 4}, 3, 4}, {{4, 2}, 4, 2}};
  CHECK(check_decomposition(c, 1, loop) == "v");
  c.witness = loop;
  auto rep = validate_seriate(c, SeriateMode::strict);
  CHECK_FALSE(rep.valid);
  CHECK(rep.failed_clause == "v");

  std::vector<Piece> chain{{{0, 1}, 0, 1}, {{1, 2, 3, 4, 5}, 1, 5}};
  CHECK(check_decomposition(c, 1, chain).empty());
}

TEST_CASE("validate_seriate agrees with the set-decomposition search") {
  // Every sequence over a 5-letter alphabet up to length 5; the acceptance
  // run goes to 6.
  int agree = 0, total = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> seq(n, 0);
    for (;;) {
      std::vector<PointId> pts;
      for (int x : seq) pts.push_back(P(static_cast<std::uint32_t>(x)));
      bool lib = validate_seriate(SeriateCandidate::from_points(pts), SeriateMode::strict).valid;
      bool ref = oracle::SeriateBrute(seq).strict();
      ++total;
      agree += lib == ref;
      int i = 0;
      while (i < n && ++seq[i] == 5) seq[i++] = 0;
      if (i == n) break;
    }
  }
  CHECK(agree == total);
  CHECK(total == 5 + 25 + 125 + 625 + 3125);
}

TEST_CASE("stability on assertion") {
  ModelUniverse u = assert_object({}, L({A, X, B, Y, C}));
  // Same ends as the interval A..B but other members.
  CHECK(code_of([&] { assert_object(u, L({A, Y, B})); }) == Errc::stability_violation);
  CHECK_NOTHROW(assert_object(u, L({A, X, B})));
  CHECK(assert_object(u, L({A, X, B, Y, C})).lines.size() == 1);
  CHECK_NOTHROW(assert_object(u, L({D, Q, Pp})));

  ModelUniverse v = assert_object(assert_object({}, L({A, X, B})), L({B, Y, A}));
  ModelUniverse w = assert_object(v, ring_from_lines(L({A, X, B}), L({B, Y, A})));
  CHECK(w.rings.size() == 1);
}

TEST_CASE("randomised stability violations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 9)(rng);
    std::vector<PointId> seq;
    for (int i = 0; i < n; ++i) seq.push_back(P(static_cast<std::uint32_t>(i)));
    std::shuffle(seq.begin(), seq.end(), rng);
    Line big = L(seq);
    ModelUniverse u = assert_object({}, big);
    int i = std::uniform_int_distribution<int>(0, n - 3)(rng);
    int j = std::uniform_int_distribution<int>(i + 2, n - 1)(rng);
    // Same ends as the interval seq[i..j], a different choice of members.
    std::vector<PointId> pool, inner(seq.begin() + i + 1, seq.begin() + j);
    for (int k = 0; k < n; ++k)
      if (k != i && k != j) pool.push_back(seq[static_cast<std::size_t>(k)]);
    std::vector<PointId> mid;
    do {
      std::shuffle(pool.begin(), pool.end(), rng);
      int m = std::uniform_int_distribution<int>(1, static_cast<int>(pool.size()))(rng);
      mid.assign(pool.begin(), pool.begin() + m);
    } while (std::is_permutation(mid.begin(), mid.end(), inner.begin(), inner.end()));
    std::vector<PointId> sub{seq[static_cast<std::size_t>(i)]};
    sub.insert(sub.end(), mid.begin(), mid.end());
    sub.push_back(seq[static_cast<std::size_t>(j)]);
    CHECK(code_of([&] { assert_object(u, L(sub)); }) == Errc::stability_violation);
    CHECK_NOTHROW(assert_object(u, big));
  }
}
