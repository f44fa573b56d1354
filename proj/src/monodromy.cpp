#include "cblab/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>

#include "cblab/errors.hpp"

namespace cblab {

namespace {

constexpr int kMaxEquivalenceDegree = 10;

struct Token {
  int value;
  std::size_t position;  // one-based character offset
};

[[noreturn]] void parse_fail(std::size_t position, const std::string& what) {
  throw ParseError("position " + std::to_string(position) + ": " + what);
}

int read_number(std::string_view text, std::size_t& i) {
  const std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
  if (ec != std::errc{} || ptr != text.data() + i) parse_fail(start + 1, "number out of range");
  return value;
}

bool blank(char c) { return c == ' ' || c == '\t' || c == ','; }

Permutation parse_cycles(std::string_view text, std::optional<int> degree) {
  std::vector<std::vector<Token>> cycles;
  std::size_t i = 0;
  int largest = 0;
  while (i < text.size()) {
    if (blank(text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(') parse_fail(i + 1, "expected '('");
    ++i;
    std::vector<Token> cycle;
    for (;;) {
      while (i < text.size() && blank(text[i])) ++i;
      if (i >= text.size()) parse_fail(i + 1, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        parse_fail(i + 1, std::string("unexpected character '") + text[i] + "'");
      const std::size_t at = i + 1;
      const int value = read_number(text, i);
      cycle.push_back({value, at});
      largest = std::max(largest, value);
    }
    cycles.push_back(std::move(cycle));
  }

  const int n = degree.value_or(largest);
  if (n < 1) parse_fail(1, "cannot infer the degree of an empty permutation");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const Token& tok = cycle[t];
      if (tok.value < 1 || tok.value > n)
        parse_fail(tok.position, "entry " + std::to_string(tok.value) + " out of range 1.." +
                                     std::to_string(n));
      if (used[static_cast<std::size_t>(tok.value - 1)])
        parse_fail(tok.position, "duplicate entry " + std::to_string(tok.value));
      used[static_cast<std::size_t>(tok.value - 1)] = true;
      const Token& next = cycle[(t + 1) % cycle.size()];
      images[static_cast<std::size_t>(tok.value - 1)] = next.value - 1;
    }
  }
  std::vector<int> one_based(images.size());
  for (std::size_t p = 0; p < images.size(); ++p) one_based[p] = images[p] + 1;
  return Permutation::from_one_line(one_based);
}

Permutation parse_one_line(std::string_view text, std::optional<int> degree) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (blank(text[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      parse_fail(i + 1, std::string("unexpected character '") + text[i] + "'");
    const std::size_t at = i + 1;
    tokens.push_back({read_number(text, i), at});
  }
  const int n = static_cast<int>(tokens.size());
  if (n == 0) parse_fail(1, "empty permutation");
  if (degree && *degree != n)
    parse_fail(1, "one-line notation has " + std::to_string(n) + " entries, expected " +
                      std::to_string(*degree));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> images;
  for (const Token& tok : tokens) {
    if (tok.value < 1 || tok.value > n)
      parse_fail(tok.position,
                 "entry " + std::to_string(tok.value) + " out of range 1.." + std::to_string(n));
    if (used[static_cast<std::size_t>(tok.value - 1)])
      parse_fail(tok.position, "duplicate entry " + std::to_string(tok.value));
    used[static_cast<std::size_t>(tok.value - 1)] = true;
    images.push_back(tok.value);
  }
  return Permutation::from_one_line(images);
}

// Orbit-compatible backtracking for iota with iota(sigma_b(x)) = sigma_a(iota(x)).
class ConjugacySearch {
 public:
  ConjugacySearch(const MonodromyRep& a, const MonodromyRep& b)
      : a_(a), b_(b), n_(a.degree()),
        map_(static_cast<std::size_t>(n_), -1),
        taken_(static_cast<std::size_t>(n_), false),
        len_a1_(cycle_lengths(a.sigma1())), len_a2_(cycle_lengths(a.sigma2())),
        len_b1_(cycle_lengths(b.sigma1())), len_b2_(cycle_lengths(b.sigma2())),
        a1_inv_(a.sigma1().inverse()), a2_inv_(a.sigma2().inverse()),
        b1_inv_(b.sigma1().inverse()), b2_inv_(b.sigma2().inverse()) {}

  bool run() { return extend(); }

 private:
  static std::vector<int> cycle_lengths(const Permutation& p) {
    std::vector<int> out(static_cast<std::size_t>(p.degree()), 0);
    for (int s = 0; s < p.degree(); ++s) {
      if (out[static_cast<std::size_t>(s)] != 0) continue;
      std::vector<int> members;
      int x = s;
      do {
        members.push_back(x);
        x = p(x);
      } while (x != s);
      for (int m : members) out[static_cast<std::size_t>(m)] = static_cast<int>(members.size());
    }
    return out;
  }

  bool compatible(int x, int y) const {
    return len_b1_[static_cast<std::size_t>(x)] == len_a1_[static_cast<std::size_t>(y)] &&
           len_b2_[static_cast<std::size_t>(x)] == len_a2_[static_cast<std::size_t>(y)];
  }

  // Assign iota(x) = y and everything it forces; false on contradiction.
  bool assign(int x, int y, std::vector<int>& trail) {
    std::deque<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      const auto [u, v] = queue.front();
      queue.pop_front();
      const int current = map_[static_cast<std::size_t>(u)];
      if (current == v) continue;
      if (current != -1 || taken_[static_cast<std::size_t>(v)] || !compatible(u, v)) return false;
      map_[static_cast<std::size_t>(u)] = v;
      taken_[static_cast<std::size_t>(v)] = true;
      trail.push_back(u);
      queue.emplace_back(b_.sigma1()(u), a_.sigma1()(v));
      queue.emplace_back(b_.sigma2()(u), a_.sigma2()(v));
      // inverse direction keeps propagation complete on non-transitive pairs
      queue.emplace_back(b1_inv_(u), a1_inv_(v));
      queue.emplace_back(b2_inv_(u), a2_inv_(v));
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int u : trail) {
      taken_[static_cast<std::size_t>(map_[static_cast<std::size_t>(u)])] = false;
      map_[static_cast<std::size_t>(u)] = -1;
    }
  }

  bool extend() {
    int x = -1;
    for (int p = 0; p < n_; ++p)
      if (map_[static_cast<std::size_t>(p)] == -1) {
        x = p;
        break;
      }
    if (x == -1) return true;
    for (int y = 0; y < n_; ++y) {
      if (taken_[static_cast<std::size_t>(y)] || !compatible(x, y)) continue;
      std::vector<int> trail;
      if (assign(x, y, trail) && extend()) return true;
      undo(trail);
    }
    return false;
  }

  const MonodromyRep& a_;
  const MonodromyRep& b_;
  int n_;
  std::vector<int> map_;
  std::vector<bool> taken_;
  std::vector<int> len_a1_, len_a2_, len_b1_, len_b2_;
  Permutation a1_inv_, a2_inv_, b1_inv_, b2_inv_;
};

void require_transitive(const MonodromyRep& rep) {
  if (!is_transitive(rep)) throw NotTransitiveError("monodromy representation is not transitive");
}

}  // namespace

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw DomainError("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  std::vector<int> zero_based;
  zero_based.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("one-line images must be a bijection of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
    zero_based.push_back(v - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::parse(std::string_view text, std::optional<int> degree) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) parse_fail(1, "empty permutation");
  const std::string_view body = text.substr(first);
  if (body == "id" || body == "()") {
    if (!degree) parse_fail(first + 1, "identity needs an explicit degree");
    return identity(*degree);
  }
  if (body.front() == '(') return parse_cycles(text, degree);
  return parse_one_line(text, degree);
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw DomainError("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    out[p] = next.images_[static_cast<std::size_t>(images_[p])];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    out[static_cast<std::size_t>(images_[p])] = static_cast<int>(p);
  return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int length = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) out[p] = images_[p] + 1;
  return out;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s)) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

MonodromyRep::MonodromyRep(Permutation sigma1, Permutation sigma2)
    : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
  if (sigma1_.degree() != sigma2_.degree())
    throw DomainError("both generators must act on the same {1..n}");
}

bool is_transitive(const MonodromyRep& rep) {
  const int n = rep.degree();
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::deque<int> frontier{0};
  reached[0] = true;
  int count = 1;
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop_front();
    for (const int y : {rep.sigma1()(x), rep.sigma2()(x)}) {
      if (reached[static_cast<std::size_t>(y)]) continue;
      reached[static_cast<std::size_t>(y)] = true;
      ++count;
      frontier.push_back(y);
    }
  }
  return count == n;
}

int cycle_count(const Permutation& p) { return p.cycle_count(); }

bool is_tree(const MonodromyRep& rep) {
  require_transitive(rep);
  return rep.sigma1().cycle_count() + rep.sigma2().cycle_count() == rep.degree() + 1;
}

bool are_equivalent(const MonodromyRep& rep1, const MonodromyRep& rep2) {
  if (rep1.degree() != rep2.degree()) return false;
  if (rep1.degree() > kMaxEquivalenceDegree)
    throw SizeLimitError("equivalence search is limited to n <= 10");
  if (rep1.sigma1().cycle_type() != rep2.sigma1().cycle_type() ||
      rep1.sigma2().cycle_type() != rep2.sigma2().cycle_type())
    return false;
  return ConjugacySearch(rep1, rep2).run();
}

int euler_characteristic_disk(const MonodromyRep& rep) {
  require_transitive(rep);
  return -rep.degree() + rep.sigma1().cycle_count() + rep.sigma2().cycle_count();
}

int face_cycles(const MonodromyRep& rep) {
  return rep.sigma1().then(rep.sigma2()).inverse().cycle_count();
}

int sphere_disk_euler_difference(const MonodromyRep& rep) { return face_cycles(rep); }

int sphere_euler_characteristic(const MonodromyRep& rep) {
  return -rep.degree() + rep.sigma1().cycle_count() + rep.sigma2().cycle_count() +
         face_cycles(rep);
}

MonodromyRep chebyshev_monodromy(int n) {
  if (n < 1) throw DomainError("degree must be positive");
  std::vector<int> s1(static_cast<std::size_t>(n)), s2(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    s1[static_cast<std::size_t>(p - 1)] = p;
    s2[static_cast<std::size_t>(p - 1)] = p;
  }
  // sigma1 swaps (1 2)(3 4)..; sigma2 swaps (2 3)(4 5)..
  for (int p = 1; p + 1 <= n; p += 2) std::swap(s1[static_cast<std::size_t>(p - 1)], s1[static_cast<std::size_t>(p)]);
  for (int p = 2; p + 1 <= n; p += 2) std::swap(s2[static_cast<std::size_t>(p - 1)], s2[static_cast<std::size_t>(p)]);
  return MonodromyRep(Permutation::from_one_line(s1), Permutation::from_one_line(s2));
}

DessinStats dessin_stats(const MonodromyRep& rep) {
  if (!is_tree(rep)) throw NotTreeError("dessin statistics need a tree monodromy");
  return {rep.sigma1().cycle_count() + rep.sigma2().cycle_count(), rep.degree()};
}

}  // namespace cblab
