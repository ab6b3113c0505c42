#pragma once

// Word-list resources: census first names, personal titles, the pronoun
// attribute table and copula forms.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace coref {

enum class Gender { Male, Female, Unknown };
enum class Personhood { Person, NotPerson, Unknown };
enum class Number { Singular, Plural, Unknown };
enum class GrammaticalPerson { First, Second, Third };

std::string_view to_string(Gender g);
std::string_view to_string(Personhood p);
std::string_view to_string(Number n);
std::string_view to_string(GrammaticalPerson p);

// ASCII case folding; bytes >= 0x80 pass through.
std::string fold_case(std::string_view word);

struct NameLists {
  std::set<std::string, std::less<>> male_names;
  std::set<std::string, std::less<>> female_names;
};

// Title surface form (case-folded) -> gender. Every title marks a person.
using TitleMap = std::map<std::string, Gender, std::less<>>;

struct PronounEntry {
  std::string surface;
  Gender gender = Gender::Unknown;
  Personhood personhood = Personhood::Unknown;
  Number number = Number::Unknown;
  GrammaticalPerson person = GrammaticalPerson::Third;
  bool reflexive = false;
  bool possessive = false;
};

using PronounTable = std::map<std::string, PronounEntry, std::less<>>;
using CopulaSet = std::set<std::string, std::less<>>;

struct LexiconCounts {
  std::size_t male_names = 0;
  std::size_t female_names = 0;
  std::size_t titles = 0;
  std::size_t pronouns = 0;
  std::size_t copulas = 0;
};

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(NameLists names, TitleMap titles, PronounTable pronouns, CopulaSet copulas);

  // Loads male_names.txt, female_names.txt, titles.tsv, pronouns.tsv and
  // copulas.txt from dir. Throws LoadError naming the file (and line).
  static Lexicon load(const std::filesystem::path& dir);

  const NameLists& names() const { return names_; }
  const TitleMap& titles() const { return titles_; }
  const PronounTable& pronouns() const { return pronouns_; }
  const CopulaSet& copulas() const { return copulas_; }
  LexiconCounts counts() const;

  // Male or Female only when the name is on exactly one list.
  Gender gender_of_first_name(std::string_view word) const;
  // Looks the word up as given and with a trailing period added or removed,
  // so "Mr" and "Mr." both match a "Mr." entry.
  std::optional<Gender> title_gender(std::string_view word) const;
  bool is_title(std::string_view word) const { return title_gender(word).has_value(); }
  const PronounEntry* pronoun(std::string_view word) const;
  bool is_copula(std::string_view word) const;

 private:
  NameLists names_;
  TitleMap titles_;
  PronounTable pronouns_;
  CopulaSet copulas_;
};

// Free-function spellings of the lookups.
Gender gender_of_first_name(std::string_view word, const NameLists& names);
const PronounEntry* pronoun_lookup(std::string_view word, const Lexicon& lex);

inline Lexicon load_lexicon(const std::filesystem::path& dir) { return Lexicon::load(dir); }

}  // namespace coref
