#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "keane/iet.hpp"

using namespace keane;

namespace {

// Four blocks with the image order fully scrambling the layout.
IETSpec scrambled_four() {
  IETSpec spec;
  spec.perm = Permutation::one_line({4, 2, 1, 3});
  spec.lengths = {make_rat(1, 18), make_rat(19, 36), make_rat(11, 36), make_rat(1, 9)};
  spec.validate();
  return spec;
}

Rat random_point(std::mt19937_64& rng) {
  const unsigned long num = rng() % 100000;
  return make_rat(Int(num), Int(100000));
}

}  // namespace

TEST_CASE("block layout and image layout agree with the one-line permutation") {
  const IETSpec spec = scrambled_four();
  CHECK(spec.left(1) == 0);
  CHECK(spec.left(2) == make_rat(1, 18));
  CHECK(spec.left(4) == make_rat(8, 9));
  // Image of block 1 has rank 4: it starts after the images of ranks 1..3,
  // which are blocks 3, 2, 4 of total length 11/36 + 19/36 + 4/36.
  CHECK(spec.image_left(1) == make_rat(17, 18));
  CHECK(apply(spec, Rat(0)) == make_rat(17, 18));
}

TEST_CASE("apply moves every block rigidly") {
  const IETSpec spec = scrambled_four();
  for (int j = 1; j <= spec.n(); ++j) {
    const RInterval dom = spec.interval(j);
    const Rat shift = spec.image_left(j) - spec.left(j);
    const Rat probe = dom.lo + dom.length() / 3;
    CHECK(apply(spec, dom.lo) == dom.lo + shift);
    CHECK(apply(spec, probe) == probe + shift);
  }
}

TEST_CASE("apply_inverse undoes apply on random points") {
  const IETSpec spec = scrambled_four();
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat x = random_point(rng);
    const Rat y = apply(spec, x);
    CHECK(y >= 0);
    CHECK(y < 1);
    CHECK(apply_inverse(spec, y) == x);
    CHECK(apply(spec, apply_inverse(spec, x)) == x);
  }
}

TEST_CASE("the inverse exchange as a spec matches pointwise inversion") {
  const IETSpec spec = scrambled_four();
  const IETSpec inv = inverse_spec(spec);
  inv.validate();
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const Rat x = random_point(rng);
    CHECK(apply(inv, x) == apply_inverse(spec, x));
  }
}

TEST_CASE("distinct points stay distinct under the exchange") {
  const IETSpec spec = scrambled_four();
  std::mt19937_64 rng(99);
  std::set<Rat> images;
  std::set<Rat> sources;
  for (int trial = 0; trial < 200; ++trial) sources.insert(random_point(rng));
  for (const Rat& x : sources) images.insert(apply(spec, x));
  CHECK(images.size() == sources.size());
}

TEST_CASE("interval_index honors half-open boundaries") {
  const IETSpec spec = scrambled_four();
  for (int j = 1; j <= spec.n(); ++j) {
    CHECK(interval_index(spec, spec.left(j)) == j);
    const RInterval dom = spec.interval(j);
    const Rat inside = dom.hi - dom.length() / 7;
    CHECK(interval_index(spec, inside) == j);
  }
  CHECK_THROWS_AS(interval_index(spec, Rat(1)), domain_error);
  CHECK_THROWS_AS(interval_index(spec, Rat(-1)), domain_error);
}

TEST_CASE("orbit records symbols and respects the step budget") {
  const IETSpec spec = scrambled_four();
  const Rat x0 = make_rat(1, 7);
  const auto path = orbit(spec, x0, 50);
  REQUIRE(path.size() == 51);
  CHECK(path[0].x == x0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    CHECK(path[i].symbol == interval_index(spec, path[i].x));
    CHECK(path[i + 1].x == apply(spec, path[i].x));
  }
  CHECK_THROWS_AS(orbit(spec, x0, 50, 10), resource_error);
}

TEST_CASE("first_return tiles the sub-interval and really returns") {
  const IETSpec spec = scrambled_four();
  const RInterval sub{make_rat(1, 10), make_rat(3, 10)};
  const InducedMap ind = first_return(spec, sub);
  REQUIRE(!ind.pieces.empty());
  // Pieces tile [sub.lo, sub.hi) exactly, left to right.
  Rat edge = sub.lo;
  for (const RInterval& piece : ind.pieces) {
    CHECK(piece.lo == edge);
    edge = piece.hi;
  }
  CHECK(edge == sub.hi);
  // Each piece really first-returns at the recorded time, and the landing
  // pattern counts the visits along the way.
  for (std::size_t p = 0; p < ind.pieces.size(); ++p) {
    const Rat mid = (ind.pieces[p].lo + ind.pieces[p].hi) / 2;
    const auto path = orbit(spec, mid, ind.return_times[p]);
    std::vector<std::int64_t> visits(spec.n(), 0);
    for (std::int64_t t = 0; t < ind.return_times[p]; ++t) {
      if (t > 0) CHECK(!sub.contains(path[static_cast<std::size_t>(t)].x));
      visits[static_cast<std::size_t>(path[static_cast<std::size_t>(t)].symbol - 1)]++;
    }
    CHECK(sub.contains(path[static_cast<std::size_t>(ind.return_times[p])].x));
    for (int i = 0; i < spec.n(); ++i)
      CHECK(visits[static_cast<std::size_t>(i)] == ind.landing_pattern[static_cast<std::size_t>(i)][p]);
  }
}

TEST_CASE("degenerate specs are rejected") {
  IETSpec bad;
  bad.perm = Permutation::one_line({2, 1});
  bad.lengths = {make_rat(1, 2), make_rat(1, 3)};  // does not sum to 1
  CHECK_THROWS_AS(bad.validate(), domain_error);
  IETSpec zero;
  zero.perm = Permutation::one_line({2, 1});
  zero.lengths = {Rat(1), Rat(0)};
  CHECK_THROWS_AS(zero.validate(), domain_error);
}
