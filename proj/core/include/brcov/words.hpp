#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brcov {

/// A generator or its inverse.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;

  [[nodiscard]] constexpr Letter inverse() const noexcept {
    return {generator, static_cast<std::int8_t>(-sign)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Column of `l` in a coset table over `rank` generators: generators come
/// first in declaration order, then their inverses.
[[nodiscard]] constexpr std::size_t column_of(Letter l, std::size_t rank) noexcept {
  return l.sign > 0 ? l.generator : rank + l.generator;
}

[[nodiscard]] constexpr std::size_t inverse_column(std::size_t column, std::size_t rank) noexcept {
  return column < rank ? column + rank : column - rank;
}

/// A freely reduced word over an alphabet of `rank` generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}
  /// Validates every letter against `rank` and freely reduces.
  Word(std::size_t rank, std::span<const Letter> letters);

  /// g^power as a word.
  static Word generator(std::size_t rank, std::uint32_t g, long power = 1);

  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

/// Cancels adjacent letter/inverse pairs until none remain.
[[nodiscard]] Word free_reduce(std::size_t rank, std::span<const Letter> letters);

[[nodiscard]] Word word_inverse(const Word& w);
/// Reduced product u*v. Throws InvalidInput if the alphabets differ.
[[nodiscard]] Word word_concat(const Word& u, const Word& v);
[[nodiscard]] Word word_power(const Word& w, long n);
/// u v u^-1 v^-1
[[nodiscard]] Word commutator(const Word& u, const Word& v);
/// Strips letters that cancel between the two ends.
[[nodiscard]] Word cyclically_reduce(const Word& w);

struct Meridian {
  std::string name;
  Word word;

  friend bool operator==(const Meridian&, const Meridian&) = default;
};

/// A finitely presented group with named loops around the branch components.
class Presentation {
 public:
  Presentation() = default;
  /// Throws InvalidInput on duplicate names or words over the wrong alphabet.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators, std::vector<Meridian> meridians);

  /// Free group on a, b, c, ... with meridian m_i = i-th generator.
  static Presentation free_group(std::size_t rank);
  /// Z^n as <a, b, ... | all pairwise commutators>, meridian m_i = i-th generator.
  static Presentation free_abelian(std::size_t rank);

  [[nodiscard]] std::size_t rank() const noexcept { return generators_.size(); }
  [[nodiscard]] const std::vector<std::string>& generator_names() const noexcept { return generators_; }
  [[nodiscard]] const std::vector<Word>& relators() const noexcept { return relators_; }
  [[nodiscard]] const std::vector<Meridian>& meridians() const noexcept { return meridians_; }

  [[nodiscard]] std::optional<std::uint32_t> generator_index(std::string_view name) const;
  [[nodiscard]] const Meridian* find_meridian(std::string_view name) const;

  /// Space-separated letters with inverses written x^-1; the identity is "1".
  [[nodiscard]] std::string format_word(const Word& w) const;
  /// Round-trips through parse_presentation.
  [[nodiscard]] std::string to_dsl() const;

  /// n when the relators are exactly the n(n-1)/2 commutators [x_i, x_j], i < j
  /// (in any order, either orientation); nullopt otherwise.
  [[nodiscard]] std::optional<std::size_t> standard_abelian_rank() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::vector<Meridian> meridians_;
};

/// Parses the `gens ...; rels ...; meridians ...;` DSL or its JSON equivalent.
/// Throws ParseError (with position) on malformed input.
[[nodiscard]] Presentation parse_presentation(std::string_view text);

/// Parses a single word over the generators of `p`.
[[nodiscard]] Word parse_word(const Presentation& p, std::string_view text);

/// Comma-separated list of words (subgroup generators on the command line).
[[nodiscard]] std::vector<Word> parse_word_list(const Presentation& p, std::string_view text);

}  // namespace brcov
