#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "tamari/errors.hpp"
#include "tamari/tree.hpp"

using namespace tamari;

namespace {

// Binomial-formula oracle, independent of the recurrence used by catalan().
std::uint64_t catalan_by_binomial(int n) {
  unsigned __int128 c = 1;
  for (int k = 1; k <= n; ++k) c = c * (n + k) / k;  // binom(2n, n), exact at each step
  return static_cast<std::uint64_t>(c / (n + 1));
}

Tree random_tree(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<std::uint64_t> pick(0, catalan(degree) - 1);
  return unrank(degree, pick(rng));
}

const Tree kLeaf;
const Tree kY = Tree::y();

}  // namespace

TEST(Catalan, SmallValues) {
  EXPECT_EQ(catalan(0), 1u);
  EXPECT_EQ(catalan(3), 5u);
  EXPECT_EQ(catalan(8), 1430u);
  EXPECT_EQ(catalan(8), catalan_by_binomial(8));
}

TEST(Catalan, AgreesWithBinomialFormula) {
  for (int n = 0; n <= 35; ++n) EXPECT_EQ(catalan(n), catalan_by_binomial(n)) << n;
}

TEST(Catalan, CapacityError) {
  EXPECT_THROW(catalan(36), CapacityError);
  EXPECT_THROW(catalan(-1), std::invalid_argument);
}

TEST(Enumerate, DegreeTwoOrder) {
  const auto& trees = enumerate(2);
  ASSERT_EQ(trees.size(), 2u);
  EXPECT_EQ(format(trees[0]), "(.(..))");
  EXPECT_EQ(format(trees[1]), "((..).)");
  EXPECT_EQ(trees[0], under(kY, kY));
  EXPECT_EQ(trees[1], over(kY, kY));
}

TEST(Enumerate, DegreeZeroAndFour) {
  ASSERT_EQ(enumerate(0).size(), 1u);
  EXPECT_EQ(format(enumerate(0)[0]), ".");
  EXPECT_EQ(enumerate(4).size(), 14u);
}

TEST(Enumerate, CountsAndDistinctness) {
  for (int n = 0; n <= 10; ++n) {
    const auto& trees = enumerate(n);
    EXPECT_EQ(trees.size(), catalan(n));
    std::set<std::string> literals;
    for (const Tree& t : trees) {
      EXPECT_EQ(t.degree(), n);
      literals.insert(format(t));
    }
    EXPECT_EQ(literals.size(), trees.size());
  }
}

// Brute force: every string over {(, ., )} of length 3n+1 that parses is a tree.
TEST(Enumerate, MatchesBruteForceParse) {
  for (int n = 0; n <= 3; ++n) {
    const int len = 3 * n + 1;
    std::set<std::string> parsed;
    std::string s(static_cast<std::size_t>(len), '.');
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < len; ++i, c /= 3) s[static_cast<std::size_t>(i)] = "(.)"[c % 3];
      try {
        parsed.insert(format(parse(s)));
      } catch (const ParseError&) {
      }
    }
    std::set<std::string> enumerated;
    for (const Tree& t : enumerate(n)) enumerated.insert(format(t));
    EXPECT_EQ(parsed, enumerated) << n;
  }
}

TEST(Enumerate, OrderMatchesComparison) {
  for (int n = 0; n <= 6; ++n) {
    const auto& trees = enumerate(n);
    for (std::size_t i = 1; i < trees.size(); ++i) EXPECT_LT(trees[i - 1], trees[i]);
  }
}

TEST(Enumerate, CapacityError) { EXPECT_THROW(enumerate(kMaxEnumerationDegree + 1), CapacityError); }

TEST(Rank, RoundTrip) {
  for (int n = 0; n <= 8; ++n) {
    const auto& trees = enumerate(n);
    for (std::uint64_t r = 0; r < trees.size(); ++r) {
      EXPECT_EQ(rank(trees[r]), r);
      EXPECT_EQ(unrank(n, r), trees[r]);
      EXPECT_EQ(unrank(tree_id(trees[r])), trees[r]);
    }
  }
  EXPECT_THROW(unrank(3, 5), std::out_of_range);
}

TEST(Grafts, Examples) {
  EXPECT_EQ(wedge(kLeaf, kLeaf), kY);
  EXPECT_EQ(format(wedge(kY, kLeaf)), "((..).)");
  EXPECT_EQ(format(over(kY, kY)), "((..).)");
  EXPECT_EQ(format(under(kY, kY)), "(.(..))");
  const Tree s = parse("((.(..)).)");
  EXPECT_EQ(over(s, kLeaf), s);
  EXPECT_EQ(over(kLeaf, s), s);
  EXPECT_EQ(under(s, kLeaf), s);
  EXPECT_EQ(under(kLeaf, s), s);
}

TEST(Grafts, WedgeFromOverAndUnder) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Tree s = random_tree(rng, static_cast<int>(rng() % 7));
    const Tree t = random_tree(rng, static_cast<int>(rng() % 7));
    EXPECT_EQ(wedge(s, t), under(over(s, kY), t));
    EXPECT_EQ(wedge(s, t), over(s, under(kY, t)));
  }
}

TEST(Grafts, UnderIsAssociativeOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Tree a = random_tree(rng, static_cast<int>(rng() % 5));
    const Tree b = random_tree(rng, static_cast<int>(rng() % 5));
    const Tree c = random_tree(rng, static_cast<int>(rng() % 5));
    EXPECT_EQ(under(under(a, b), c), under(a, under(b, c)));
  }
}

TEST(Grafts, ExhaustiveIdentities) {
  for (int n1 = 0; n1 <= 5; ++n1) {
    for (int n2 = 0; n1 + n2 <= 5; ++n2) {
      for (const Tree& s : enumerate(n1)) {
        for (const Tree& t : enumerate(n2)) {
          EXPECT_EQ(over(s, t).degree(), n1 + n2);
          EXPECT_EQ(under(s, t).degree(), n1 + n2);
          EXPECT_EQ(wedge(s, t).degree(), n1 + n2 + 1);
          EXPECT_EQ(wedge(s, t), under(over(s, kY), t));
          EXPECT_EQ(wedge(s, t), over(s, under(kY, t)));
          EXPECT_EQ(mirror(over(s, t)), under(mirror(t), mirror(s)));
        }
      }
    }
  }
}

TEST(Grafts, AssociativeWithUnitUpToTotalDegreeEight) {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; a + b <= 8; ++b) {
      for (int c = 0; a + b + c <= 8; ++c) {
        for (const Tree& x : enumerate(a)) {
          for (const Tree& y : enumerate(b)) {
            for (const Tree& z : enumerate(c)) {
              ASSERT_EQ(under(under(x, y), z), under(x, under(y, z)));
              ASSERT_EQ(over(over(x, y), z), over(x, over(y, z)));
            }
          }
        }
      }
    }
  }
}

TEST(Mirror, Involution) {
  EXPECT_EQ(mirror(kLeaf), kLeaf);
  EXPECT_EQ(format(mirror(parse("((..).)"))), "(.(..))");
  for (int n = 0; n <= 8; ++n) {
    for (const Tree& t : enumerate(n)) EXPECT_EQ(mirror(mirror(t)), t);
  }
}

TEST(Decompose, Examples) {
  const auto [a, b] = decompose(kY);
  EXPECT_TRUE(a.is_leaf());
  EXPECT_TRUE(b.is_leaf());
  const auto [c, d] = decompose(parse("((..).)"));
  EXPECT_EQ(format(c), "(..)");
  EXPECT_EQ(format(d), ".");
  EXPECT_THROW(decompose(kLeaf), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : enumerate(n)) {
      const auto [l, r] = decompose(t);
      EXPECT_EQ(wedge(l, r), t);
    }
  }
}

TEST(Combs, Extremes) {
  EXPECT_EQ(format(left_comb(3)), "(((..).).)");
  EXPECT_EQ(format(right_comb(3)), "(.(.(..)))");
  EXPECT_EQ(mirror(left_comb(5)), right_comb(5));
}

TEST(Parse, Valid) {
  EXPECT_EQ(parse("(..)"), kY);
  EXPECT_EQ(format(parse("(..)")), "(..)");
  EXPECT_EQ(parse("(.(..))"), right_comb(2));
  EXPECT_EQ(parse("."), kLeaf);
}

TEST(Parse, ErrorOffsets) {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return 0;
  };
  EXPECT_EQ(offset_of("((.)"), 3u);
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("(..)."), 4u);
  EXPECT_EQ(offset_of("(..x"), 3u);
  EXPECT_EQ(offset_of("( ..)"), 1u);
  EXPECT_EQ(offset_of("(.."), 3u);
}

TEST(Parse, FormatRoundTrip) {
  for (int n = 0; n <= 7; ++n) {
    for (const Tree& t : enumerate(n)) {
      const std::string s = format(t);
      EXPECT_EQ(s.size(), 3u * static_cast<std::size_t>(n) + 1);
      EXPECT_EQ(parse(s), t);
    }
  }
}
