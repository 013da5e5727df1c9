#include "pavoid/error.hpp"
#include "pavoid/morphisms.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pavoid;

namespace {

// Images as printed in the literature, grouping spaces included.
std::string strip(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

Word random_word(const AlphabetPtr& a, std::size_t len, std::mt19937& rng) {
  std::vector<Letter> l(len);
  for (auto& x : l) x = static_cast<Letter>(rng() % a->size());
  return Word(a, l);
}

}  // namespace

TEST_CASE("make_morphism") {
  const Morphism mu = Morphism::from_strings("01", "01", {"01", "10"});
  CHECK(mu.image(0).str() == "01");
  CHECK(mu.image(1).str() == "10");

  CHECK_THROWS_AS(Morphism::from_strings("0", "0", {""}), ArgumentError);
  CHECK_THROWS_AS(Morphism::from_strings("01", "01", {"01"}), ArgumentError);
  CHECK_THROWS_AS(Morphism::from_strings("01", "01", {"01", "12"}), ParseError);

  const auto src = make_alphabet("01");
  const auto other = make_alphabet("ab");
  CHECK_THROWS_AS(make_morphism(src, src, {parse_word("a", other), parse_word("b", other)}),
                  ArgumentError);
}

TEST_CASE("apply") {
  const Morphism mu = catalog("thue_morse");
  const auto bin = mu.source_ptr();
  CHECK(apply(mu, parse_word("01", bin)).str() == "0110");
  CHECK(apply(mu, parse_word("", bin)).empty());

  const Morphism leech = catalog("leech");
  const Word h0 = apply(leech, parse_word("0", leech.source_ptr()));
  CHECK(h0.str() == "0121021201210");
  CHECK(h0.size() == 13);

  CHECK_THROWS_AS(apply(mu, parse_word("0", leech.source_ptr())), ArgumentError);
}

TEST_CASE("uniformity") {
  CHECK(uniformity(catalog("thue_morse")) == std::size_t{2});
  CHECK(uniformity(catalog("leech")) == std::size_t{13});
  CHECK_FALSE(uniformity(Morphism::from_strings("01", "01", {"0", "01"})));
  CHECK_THROWS_AS(require_uniform(Morphism::from_strings("01", "01", {"0", "01"}), "x"),
                  PreconditionError);
}

TEST_CASE("iterate_prefix") {
  const Morphism mu = catalog("thue_morse");
  CHECK(iterate_prefix(mu, '0', 32).str() == "01101001100101101001011001101001");
  CHECK(iterate_prefix(mu, '0', 1).str() == "0");
  CHECK(iterate_prefix(catalog("leech"), '0', 13).str() == "0121021201210");

  CHECK_THROWS_AS(iterate_prefix(mu, '0', 0), ArgumentError);
  CHECK_THROWS_AS(iterate_prefix(mu, '2', 4), ArgumentError);
  try {
    iterate_prefix(Morphism::from_strings("01", "01", {"10", "01"}), '0', 4);
    FAIL("expected error");
  } catch (const PreconditionError& e) {
    const std::string what = e.what();
    CHECK(what.find("'0'") != std::string::npos);
    CHECK(what.find("'1'") != std::string::npos);
  }
  CHECK_THROWS_AS(iterate_prefix(Morphism::from_strings("01", "012", {"01", "10"}), '0', 4),
                  PreconditionError);
  CHECK_THROWS_AS(iterate_prefix(Morphism::from_strings("01", "01", {"0", "10"}), '0', 2),
                  PreconditionError);

  // Slow growth: 0 -> 01, 1 -> 1 gives 0111...
  CHECK(iterate_prefix(Morphism::from_strings("01", "01", {"01", "1"}), '0', 6).str() == "011111");
}

TEST_CASE("fixed point prefixes are coherent") {
  for (const auto& name : {"thue_morse", "leech"}) {
    const Morphism m = catalog(name);
    const Word longest = iterate_prefix(m, '0', 200);
    for (std::size_t len = 1; len <= 200; len += 7) {
      CHECK(iterate_prefix(m, '0', len) == longest.prefix(len));
    }
  }
}

TEST_CASE("catalog fidelity") {
  CHECK(catalog_names() == std::vector<std::string>{"thue_morse", "leech", "f4", "g4"});

  const Morphism leech = catalog("leech");
  CHECK(leech.image(0).str() == "0121021201210");
  CHECK(leech.image(1).str() == "1202102012021");
  CHECK(leech.image(2).str() == "2010210120102");

  const std::vector<std::string> f_display{"0123 1230 1 0321 3210", "1230 2301 2 1032 0321",
                                           "2301 3012 3 2103 1032", "3012 0123 0 3210 2103"};
  const std::vector<std::string> g_display{"0123 0122121120 3210", "1230 1300303301 0321",
                                           "2301 2012331022 1032", "3012 3011010013 2103"};
  const Morphism f = catalog("f4");
  const Morphism g = catalog("g4");
  for (Letter i = 0; i < 4; ++i) {
    CHECK(f.image(i).str() == strip(f_display[i]));
    CHECK(g.image(i).str() == strip(g_display[i]));
  }
  CHECK(uniformity(f) == std::size_t{17});
  // 4 + 10 + 4 letters per displayed image.
  CHECK(uniformity(g) == std::size_t{18});

  CHECK_THROWS_AS(catalog("nope"), ArgumentError);
}

TEST_CASE("homomorphism law and uniform length") {
  std::mt19937 rng(7);
  for (const auto& name : catalog_names()) {
    const Morphism m = catalog(name);
    const std::size_t n = *uniformity(m);
    for (int trial = 0; trial < 50; ++trial) {
      const Word u = random_word(m.source_ptr(), rng() % 7, rng);
      const Word v = random_word(m.source_ptr(), rng() % 7, rng);
      CHECK(apply(m, u + v) == apply(m, u) + apply(m, v));
      CHECK(apply(m, u).size() == n * u.size());
    }
  }
}
