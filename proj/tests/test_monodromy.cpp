#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cblab/errors.hpp"
#include "cblab/monodromy.hpp"

using namespace cblab;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_one_line(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string parse_error_text(const std::string& text) {
  try {
    Permutation::parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing and printing") {
  const Permutation p = Permutation::parse("(1 2)(3 4)");
  CHECK(p.degree() == 4);
  CHECK(p.one_line() == std::vector<int>{2, 1, 4, 3});
  CHECK(p.cycle_string() == "(1 2)(3 4)");
  CHECK(Permutation::parse("2 1 4 3") == p);
  CHECK(Permutation::parse("(1 2)", 5).degree() == 5);
  CHECK(Permutation::parse("id", 3) == Permutation::identity(3));
  CHECK(Permutation::parse("()", 3).cycle_string() == "()");
  CHECK(Permutation::parse("(1 3 2)").cycle_type() == std::vector<int>{3});
  CHECK(Permutation::parse("(1 3)", 4).cycle_type() == std::vector<int>{1, 1, 2});

  CHECK(parse_error_text("(1 2").find("position") != std::string::npos);
  CHECK(parse_error_text("(1 x)").find("position 4") != std::string::npos);
  CHECK_THROWS_AS(Permutation::parse("(1 1)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1 1 2"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse(""), ParseError);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 3}), DomainError);
}

TEST_CASE("composition applies the receiver first") {
  const Permutation a = Permutation::parse("(1 2)", 3);
  const Permutation b = Permutation::parse("(2 3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK(a.then(b)(0) == 2);
  CHECK(a.then(b).then(a.then(b).inverse()) == Permutation::identity(3));
  for (const auto& p : all_permutations(4)) CHECK(Permutation::parse(p.cycle_string(), 4) == p);
}

TEST_CASE("exhaustive properties for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    std::vector<MonodromyRep> transitive;
    for (const auto& s1 : perms)
      for (const auto& s2 : perms) {
        const MonodromyRep rep(s1, s2);
        if (!is_transitive(rep)) {
          CHECK_THROWS_AS(is_tree(rep), NotTransitiveError);
          continue;
        }
        transitive.push_back(rep);
        const int chi = euler_characteristic_disk(rep);
        CHECK(is_tree(rep) == (chi == 1));
        CHECK(chi <= 1);
        CHECK(sphere_euler_characteristic(rep) == chi + sphere_disk_euler_difference(rep));
        if (is_tree(rep)) CHECK(sphere_euler_characteristic(rep) == 2);
      }
    // equivalence is an equivalence relation and keeps cycle types
    for (const auto& a : transitive)
      for (const auto& b : transitive) {
        const bool eq = are_equivalent(a, b);
        CHECK(eq == are_equivalent(b, a));
        if (eq) {
          CHECK(a.sigma1().cycle_type() == b.sigma1().cycle_type());
          CHECK(a.sigma2().cycle_type() == b.sigma2().cycle_type());
          CHECK(face_cycles(a) == face_cycles(b));
        }
      }
  }
}

TEST_CASE("trees of degree 4: count and classes") {
  const auto perms = all_permutations(4);
  std::vector<MonodromyRep> trees;
  for (const auto& s1 : perms)
    for (const auto& s2 : perms) {
      const MonodromyRep rep(s1, s2);
      if (is_transitive(rep) && is_tree(rep)) trees.push_back(rep);
    }
  // brute-force classes by explicit conjugation
  std::vector<int> cls(trees.size(), -1);
  int classes = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      for (const auto& g : perms)
        if (g.inverse().then(trees[i].sigma1()).then(g) == trees[j].sigma1() &&
            g.inverse().then(trees[i].sigma2()).then(g) == trees[j].sigma2()) {
          cls[j] = classes;
          break;
        }
    ++classes;
  }
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j)
      CHECK(are_equivalent(trees[i], trees[j]) == (cls[i] == cls[j]));
}

TEST_CASE("random conjugates are equivalent for n up to 10") {
  std::mt19937_64 rng(11);
  for (int n = 5; n <= 10; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto random_perm = [&] {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        return Permutation::from_one_line(v);
      };
      const MonodromyRep rep(random_perm(), random_perm());
      const Permutation g = random_perm();
      const MonodromyRep image(g.inverse().then(rep.sigma1()).then(g), g.inverse().then(rep.sigma2()).then(g));
      CHECK(are_equivalent(rep, image));
      const MonodromyRep other(rep.sigma1(), random_perm());
      if (other.sigma2().cycle_type() != rep.sigma2().cycle_type()) CHECK_FALSE(are_equivalent(rep, other));
    }
  const MonodromyRep big = chebyshev_monodromy(11);
  CHECK_THROWS_AS(are_equivalent(big, big), SizeLimitError);
}

TEST_CASE("Chebyshev chain") {
  for (int n = 1; n <= 10; ++n) {
    const MonodromyRep rep = chebyshev_monodromy(n);
    CHECK(is_transitive(rep));
    CHECK(is_tree(rep));
    const DessinStats st = dessin_stats(rep);
    CHECK(st.vertices == n + 1);
    CHECK(st.edges == n);
    CHECK(face_cycles(rep) == 1);
  }
  CHECK(chebyshev_monodromy(4).sigma1().cycle_string() == "(1 2)(3 4)");
  CHECK(chebyshev_monodromy(4).sigma2().cycle_string() == "(2 3)");
}

TEST_CASE("errors") {
  const MonodromyRep split(Permutation::parse("(1 2)", 4), Permutation::parse("(3 4)", 4));
  CHECK_FALSE(is_transitive(split));
  CHECK_THROWS_AS(euler_characteristic_disk(split), NotTransitiveError);
  const MonodromyRep cyc(Permutation::parse("(1 2 3)"), Permutation::parse("(1 2 3)"));
  CHECK_THROWS_AS(dessin_stats(cyc), NotTreeError);
  CHECK_THROWS_AS(MonodromyRep(Permutation::identity(2), Permutation::identity(3)), DomainError);
}
