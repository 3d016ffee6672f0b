#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "test_support.hpp"

using namespace kcore;
using test::word;

TEST_CASE("ball enumeration") {
  auto const fp = test::z2z3();
  auto const g  = test::words(fp, "a1 b1");
  CHECK(enumerate_ball(*fp, g, 0) == std::set<Word>{Word{}});
  std::set<Word> const expect{{},
                              word(fp, "a1 b1"),
                              word(fp, "b2 a1"),
                              word(fp, "a1 b1 a1 b1"),
                              word(fp, "b2 a1 b2 a1")};
  CHECK(enumerate_ball(*fp, g, 2) == expect);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto const  p    = test::group_pairs()[i % 7];
    auto const  gens = test::random_gens(*p, rng);
    auto const  b2   = enumerate_ball(*p, gens, 2);
    auto const  b3   = enumerate_ball(*p, gens, 3);
    CHECK(std::includes(b3.begin(), b3.end(), b2.begin(), b2.end()));
    for (auto const& w : b3) {
      CHECK(b3.count(invert(*p, w)) == 1);
    }
  }
}

TEST_CASE("coset enumeration") {
  auto const d = test::fixture_dinf();
  auto       s = full_cover_bfs(*d.fp, test::words(d.fp, d.gens), 100);
  CHECK(s.complete);
  CHECK(s.index == 2);

  auto const m = test::fixture_m();
  s = full_cover_bfs(*m.fp, test::words(m.fp, m.gens), 50);
  CHECK_FALSE(s.complete);

  auto const fp = test::z2z3();
  s = full_cover_bfs(*fp, test::words(fp, "a1; b1"), 10);
  CHECK(s.complete);
  CHECK(s.index == 1);

  // a complete table is a permutation representation respecting the
  // factor multiplication
  for (auto const& f : test::finite_index_fixtures()) {
    s = full_cover_bfs(*f.fp, test::words(f.fp, f.gens), 500);
    REQUIRE(s.complete);
    std::map<Syllable, std::size_t> col;
    for (std::size_t l = 0; l < s.letters.size(); ++l) {
      col[s.letters[l]] = l;
    }
    for (std::size_t c = 0; c < s.index; ++c) {
      for (auto x : s.letters) {
        for (auto y : syllables_of(*f.fp, x.tag)) {
          elem_type const   xy = f.fp->factor(x.tag).mul(x.elem, y.elem);
          std::size_t const d1 = s.table[s.table[c][col[x]]][col[y]];
          CHECK(d1 == (xy == 0 ? c : s.table[c][col[{x.tag, xy}]]));
        }
      }
    }
  }
}

TEST_CASE("seeded sampling") {
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  auto const fp = test::z2z3();
  auto       a  = split_rng(1, 2);
  auto       b  = split_rng(1, 2);
  auto       c  = split_rng(1, 3);
  auto const x = a();
  CHECK(x == b());
  CHECK(x != c());

  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(uniform_below(rng, 7) < 7);
    Word const w = random_reduced_word(*fp, rng, 5);
    CHECK(is_reduced(w));
    CHECK(w.size() <= 5);
    CHECK(random_word_of_length(*fp, rng, 4).size() == 4);
  }

  // uniform over the 1 + 3 + 4 = 8 reduced words of length <= 2
  std::map<Word, int> counts;
  for (int i = 0; i < 14000; ++i) {
    ++counts[random_reduced_word(*fp, rng, 2)];
  }
  CHECK(counts.size() == 8);
  for (auto const& [w, n] : counts) {
    CHECK(n > 1550);
    CHECK(n < 1950);
  }
}

TEST_CASE("closure samples re-evaluate to their recipes") {
  auto const   fp = test::z2z3();
  Word const   g  = word(fp, "a1 b1 a1 b2");
  SampleParams p{200, 4, 6, 17};
  auto const   samples = sample_closure(*fp, g, p);
  REQUIRE(samples.size() == 200);
  for (auto const& s : samples) {
    CHECK(s.recipe.size() >= 1);
    CHECK(s.recipe.size() <= 4);
    CHECK(evaluate_conjugate_product(*fp, power(*fp, g, 6), s.recipe) == s.z);
    CHECK(closure_sample(*fp, g, p, s.index).z == s.z);
  }
  auto const again = sample_closure(*fp, g, p);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(again[i].z == samples[i].z);
  }
  ConjugateFactor const id{{}, 1};
  CHECK(evaluate_conjugate_product(*fp, power(*fp, g, 6), {id})
        == power(*fp, g, 6));
  CHECK(evaluate_conjugate_product(*fp, power(*fp, g, 6), {{{}, -1}})
        == power(*fp, g, -6));
  CHECK_THROWS_AS(sample_closure(*fp, word(fp, "a1"), p), input_error);
  CHECK_THROWS_AS(sample_closure(*fp, word(fp, "a1 b1 a1"), p), input_error);
}

TEST_CASE("spelling check") {
  auto const fp = test::z2z3();
  Word const g  = word(fp, "a1 b1 a1 b2");
  Word const g6 = power(*fp, g, 6);
  CHECK(spelling_check(*fp, g6, g));
  CHECK(spelling_check(*fp, power(*fp, g, -6), g));
  Word const w    = word(fp, "b1 a1 b1");
  Word const conj = concat_reduce(*fp, concat_reduce(*fp, w, g6),
                                  invert(*fp, w));
  CHECK(spelling_check(*fp, cyclically_reduce(*fp, conj).core, g));
  CHECK_FALSE(spelling_check(*fp, word(fp, "a1 b1 a1 b2 a1 b1"), g));
  CHECK_FALSE(spelling_check(*fp, power(*fp, word(fp, "a1 b1"), 12), g));
}
