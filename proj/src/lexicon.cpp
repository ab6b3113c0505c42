#include "coref/lexicon.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "coref/errors.hpp"

namespace coref {

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Male: return "Male";
    case Gender::Female: return "Female";
    case Gender::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Personhood p) {
  switch (p) {
    case Personhood::Person: return "Person";
    case Personhood::NotPerson: return "NotPerson";
    case Personhood::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Number n) {
  switch (n) {
    case Number::Singular: return "Singular";
    case Number::Plural: return "Plural";
    case Number::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(GrammaticalPerson p) {
  switch (p) {
    case GrammaticalPerson::First: return "First";
    case GrammaticalPerson::Second: return "Second";
    case GrammaticalPerson::Third: return "Third";
  }
  return "Third";
}

std::string fold_case(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> read_lines(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) throw LoadError(std::string(what) + " file not found: " + path.string());
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.push_back({number, std::move(text)});
  }
  return lines;
}

[[noreturn]] void malformed(const std::filesystem::path& path, int line, std::string_view why) {
  throw LoadError(path.filename().string() + " line " + std::to_string(line) + ": " +
                  std::string(why));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = s.find('\t', start);
    out.push_back(s.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  for (auto& f : out) {
    auto b = f.find_first_not_of(' ');
    auto e = f.find_last_not_of(' ');
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

bool is_number(const std::string& s) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Either one word per line or the census layout: NAME FREQ CUMFREQ RANK.
std::set<std::string, std::less<>> load_names(const std::filesystem::path& path,
                                              std::string_view what) {
  std::set<std::string, std::less<>> names;
  for (const auto& line : read_lines(path, what)) {
    auto fields = split_ws(line.text);
    if (fields.size() == 4) {
      for (std::size_t i = 1; i < 4; ++i) {
        if (!is_number(fields[i])) malformed(path, line.number, "expected numeric census column");
      }
    } else if (fields.size() != 1) {
      malformed(path, line.number, "expected a name or a census record");
    }
    names.insert(fold_case(fields[0]));
  }
  return names;
}

template <typename Enum>
Enum parse_enum(const std::filesystem::path& path, int line, const std::string& text,
                std::initializer_list<std::pair<std::string_view, Enum>> values) {
  for (const auto& [name, value] : values) {
    if (fold_case(text) == fold_case(name)) return value;
  }
  malformed(path, line, "unknown value '" + text + "'");
}

Gender parse_gender(const std::filesystem::path& path, int line, const std::string& text) {
  return parse_enum<Gender>(path, line, text,
                            {{"Male", Gender::Male},
                             {"Female", Gender::Female},
                             {"Unknown", Gender::Unknown},
                             {"UnknownGender", Gender::Unknown}});
}

bool parse_bool(const std::filesystem::path& path, int line, const std::string& text) {
  return parse_enum<bool>(path, line, text,
                          {{"true", true}, {"yes", true}, {"1", true},
                           {"false", false}, {"no", false}, {"0", false}});
}

TitleMap load_titles(const std::filesystem::path& path) {
  TitleMap titles;
  for (const auto& line : read_lines(path, "titles")) {
    auto fields = split_tabs(line.text);
    if (fields.size() != 2 || fields[0].empty()) {
      malformed(path, line.number, "expected title TAB gender");
    }
    titles[fold_case(fields[0])] = parse_gender(path, line.number, fields[1]);
  }
  return titles;
}

PronounTable load_pronouns(const std::filesystem::path& path) {
  PronounTable table;
  for (const auto& line : read_lines(path, "pronouns")) {
    auto f = split_tabs(line.text);
    if (f.size() != 7 || f[0].empty()) malformed(path, line.number, "expected 7 tab-separated fields");
    PronounEntry e;
    e.surface = fold_case(f[0]);
    e.gender = parse_gender(path, line.number, f[1]);
    e.personhood = parse_enum<Personhood>(path, line.number, f[2],
                                          {{"Person", Personhood::Person},
                                           {"NotPerson", Personhood::NotPerson},
                                           {"Unknown", Personhood::Unknown},
                                           {"UnknownPerson", Personhood::Unknown}});
    e.number = parse_enum<Number>(path, line.number, f[3],
                                  {{"Singular", Number::Singular},
                                   {"Plural", Number::Plural},
                                   {"Unknown", Number::Unknown},
                                   {"UnknownNumber", Number::Unknown}});
    e.person = parse_enum<GrammaticalPerson>(path, line.number, f[4],
                                             {{"First", GrammaticalPerson::First},
                                              {"Second", GrammaticalPerson::Second},
                                              {"Third", GrammaticalPerson::Third}});
    e.reflexive = parse_bool(path, line.number, f[5]);
    e.possessive = parse_bool(path, line.number, f[6]);
    if (table.contains(e.surface)) malformed(path, line.number, "duplicate pronoun '" + e.surface + "'");
    table.emplace(e.surface, std::move(e));
  }
  return table;
}

CopulaSet load_copulas(const std::filesystem::path& path) {
  CopulaSet copulas;
  for (const auto& line : read_lines(path, "copulas")) {
    auto fields = split_ws(line.text);
    if (fields.size() != 1) malformed(path, line.number, "expected one word per line");
    copulas.insert(fold_case(fields[0]));
  }
  if (copulas.empty()) throw LoadError("copulas file is empty: " + path.string());
  return copulas;
}

}  // namespace

Lexicon::Lexicon(NameLists names, TitleMap titles, PronounTable pronouns, CopulaSet copulas)
    : names_(std::move(names)),
      titles_(std::move(titles)),
      pronouns_(std::move(pronouns)),
      copulas_(std::move(copulas)) {}

Lexicon Lexicon::load(const std::filesystem::path& dir) {
  NameLists names;
  names.male_names = load_names(dir / "male_names.txt", "male names");
  names.female_names = load_names(dir / "female_names.txt", "female names");
  return Lexicon(std::move(names), load_titles(dir / "titles.tsv"),
                 load_pronouns(dir / "pronouns.tsv"), load_copulas(dir / "copulas.txt"));
}

LexiconCounts Lexicon::counts() const {
  return {names_.male_names.size(), names_.female_names.size(), titles_.size(),
          pronouns_.size(), copulas_.size()};
}

Gender Lexicon::gender_of_first_name(std::string_view word) const {
  return coref::gender_of_first_name(word, names_);
}

std::optional<Gender> Lexicon::title_gender(std::string_view word) const {
  if (word.empty()) return std::nullopt;
  auto key = fold_case(word);
  if (auto it = titles_.find(key); it != titles_.end()) return it->second;
  std::string alt = key.back() == '.' ? key.substr(0, key.size() - 1) : key + ".";
  if (auto it = titles_.find(alt); it != titles_.end()) return it->second;
  return std::nullopt;
}

const PronounEntry* Lexicon::pronoun(std::string_view word) const {
  auto it = pronouns_.find(fold_case(word));
  return it == pronouns_.end() ? nullptr : &it->second;
}

bool Lexicon::is_copula(std::string_view word) const {
  return copulas_.contains(fold_case(word));
}

Gender gender_of_first_name(std::string_view word, const NameLists& names) {
  auto key = fold_case(word);
  const bool male = names.male_names.contains(key);
  const bool female = names.female_names.contains(key);
  if (male == female) return Gender::Unknown;
  return male ? Gender::Male : Gender::Female;
}

const PronounEntry* pronoun_lookup(std::string_view word, const Lexicon& lex) {
  return lex.pronoun(word);
}

}  // namespace coref
