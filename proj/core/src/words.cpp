#include "brcov/words.hpp"

#include <algorithm>
#include <set>

#include "brcov/errors.hpp"

namespace brcov {

Word free_reduce(std::size_t rank, std::span<const Letter> letters) {
  return Word(rank, letters);
}

Word::Word(std::size_t rank, std::span<const Letter> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.generator >= rank || (l.sign != 1 && l.sign != -1)) {
      throw InvalidInput("letter outside the alphabet of rank " + std::to_string(rank));
    }
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(std::size_t rank, std::uint32_t g, long power) {
  const Letter l{g, static_cast<std::int8_t>(power < 0 ? -1 : 1)};
  std::vector<Letter> letters(static_cast<std::size_t>(power < 0 ? -power : power), l);
  return Word(rank, letters);
}

Word word_inverse(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverse());
  return Word(w.rank(), letters);
}

Word word_concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw InvalidInput("words over different alphabets");
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.rank(), letters);
}

Word word_power(const Word& w, long n) {
  const Word base = n < 0 ? word_inverse(w) : w;
  Word out(w.rank());
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = word_concat(out, base);
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return word_concat(word_concat(u, v), word_concat(word_inverse(u), word_inverse(v)));
}

Word cyclically_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(w.rank(), letters.subspan(lo, hi - lo));
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::vector<Meridian> meridians)
    : generators_(std::move(generators)), relators_(std::move(relators)), meridians_(std::move(meridians)) {
  std::set<std::string_view> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw InvalidInput("empty generator name");
    if (!seen.insert(g).second) throw InvalidInput("duplicate generator name '" + g + "'");
  }
  for (const auto& r : relators_) {
    if (r.rank() != rank()) throw InvalidInput("relator over the wrong alphabet");
  }
  std::set<std::string_view> seen_meridians;
  for (const auto& m : meridians_) {
    if (m.name.empty()) throw InvalidInput("empty meridian name");
    if (!seen_meridians.insert(m.name).second) throw InvalidInput("duplicate meridian name '" + m.name + "'");
    if (m.word.rank() != rank()) throw InvalidInput("meridian '" + m.name + "' over the wrong alphabet");
  }
}

namespace {

std::vector<std::string> default_names(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  }
  return names;
}

std::vector<Meridian> generator_meridians(std::size_t rank) {
  std::vector<Meridian> meridians;
  for (std::size_t i = 0; i < rank; ++i) {
    meridians.push_back({"m" + std::to_string(i + 1), Word::generator(rank, static_cast<std::uint32_t>(i))});
  }
  return meridians;
}

}  // namespace

Presentation Presentation::free_group(std::size_t rank) {
  return Presentation(default_names(rank), {}, generator_meridians(rank));
}

Presentation Presentation::free_abelian(std::size_t rank) {
  std::vector<Word> relators;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      relators.push_back(commutator(Word::generator(rank, static_cast<std::uint32_t>(i)),
                                    Word::generator(rank, static_cast<std::uint32_t>(j))));
    }
  }
  return Presentation(default_names(rank), std::move(relators), generator_meridians(rank));
}

std::optional<std::uint32_t> Presentation::generator_index(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - generators_.begin());
}

const Meridian* Presentation::find_meridian(std::string_view name) const {
  auto it = std::find_if(meridians_.begin(), meridians_.end(), [&](const Meridian& m) { return m.name == name; });
  return it == meridians_.end() ? nullptr : &*it;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generators_.at(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string Presentation::to_dsl() const {
  std::string out = "gens ";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? "," : "") + generators_[i];
  out += "; rels ";
  for (std::size_t i = 0; i < relators_.size(); ++i) out += (i ? ", " : "") + format_word(relators_[i]);
  out += "; meridians ";
  for (std::size_t i = 0; i < meridians_.size(); ++i) {
    out += (i ? ", " : "") + meridians_[i].name + "=" + format_word(meridians_[i].word);
  }
  out += ";";
  return out;
}

std::optional<std::size_t> Presentation::standard_abelian_rank() const {
  const std::size_t n = rank();
  if (relators_.size() != n * (n - (n ? 1 : 0)) / 2) return std::nullopt;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& r : relators_) {
    const Word c = cyclically_reduce(r);
    if (c.length() != 4) return std::nullopt;
    // Every cyclic rotation of a commutator (in either orientation) alternates
    // x, y, x^-1, y^-1 with x != y.
    auto l = c.letters();
    if (l[0].generator == l[1].generator || l[2] != l[0].inverse() || l[3] != l[1].inverse()) return std::nullopt;
    const auto lo = std::min(l[0].generator, l[1].generator);
    const auto hi = std::max(l[0].generator, l[1].generator);
    if (!pairs.emplace(lo, hi).second) return std::nullopt;
  }
  return n;
}

}  // namespace brcov
