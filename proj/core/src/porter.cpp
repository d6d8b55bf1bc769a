#include "leakstat/porter.hpp"

#include <array>
#include <cstddef>

namespace leakstat {
namespace {

// 'y' counts as a consonant at position 0 or after a vowel, as a vowel after
// a consonant.
bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// The measure m of w[0, len): [C](VC){m}[V].
int measure(std::string_view w, std::size_t len) {
  int m = 0;
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;
  while (i < len) {
    while (i < len && !is_consonant(w, i)) ++i;
    if (i == len) break;
    ++m;
    while (i < len && is_consonant(w, i)) ++i;
  }
  return m;
}

bool contains_vowel(std::string_view w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

// *d: w[0, len) ends with a double consonant.
bool ends_double_consonant(std::string_view w, std::size_t len) {
  return len >= 2 && w[len - 1] == w[len - 2] && is_consonant(w, len - 1);
}

// *o: w[0, len) ends consonant-vowel-consonant where the final consonant is
// not w, x, or y.
bool ends_cvc(std::string_view w, std::size_t len) {
  if (len < 3) return false;
  if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) ||
      !is_consonant(w, len - 1))
    return false;
  const char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  int min_measure;  // condition (m > min_measure) on the stem
};

// Within a step only the rule with the longest matching suffix is considered;
// if its condition fails, no rule of the step fires.
void apply_rule_table(std::string& w, std::string_view rules_name,
                      const Rule* rules, std::size_t n_rules) {
  (void)rules_name;
  const Rule* best = nullptr;
  for (std::size_t i = 0; i < n_rules; ++i) {
    const Rule& r = rules[i];
    if (ends_with(w, r.suffix) &&
        (best == nullptr || r.suffix.size() > best->suffix.size()))
      best = &r;
  }
  if (best == nullptr) return;
  const std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) > best->min_measure) {
    w.resize(stem_len);
    w.append(best->replacement);
  }
}

void step_1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // keep
  } else if (ends_with(w, "s")) {
    w.resize(w.size() - 1);
  }
}

void step_1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;

  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w, w.size())) {
    const char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.resize(w.size() - 1);
  } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
    w.push_back('e');
  }
}

void step_1c(std::string& w) {
  if (ends_with(w, "y") && contains_vowel(w, w.size() - 1))
    w.back() = 'i';
}

void step_2(std::string& w) {
  static constexpr std::array<Rule, 20> rules{{
      {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
      {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
      {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
      {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
      {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
      {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
      {"iviti", "ive", 0},   {"biliti", "ble", 0},
  }};
  apply_rule_table(w, "step2", rules.data(), rules.size());
}

void step_3(std::string& w) {
  static constexpr std::array<Rule, 7> rules{{
      {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
      {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0},
      {"ness", "", 0},
  }};
  apply_rule_table(w, "step3", rules.data(), rules.size());
}

void step_4(std::string& w) {
  static constexpr std::array<Rule, 19> rules{{
      {"al", "", 1},    {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
      {"ic", "", 1},    {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
      {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},  {"ion", "", 1},
      {"ou", "", 1},    {"ism", "", 1},  {"ate", "", 1},  {"iti", "", 1},
      {"ous", "", 1},   {"ive", "", 1},  {"ize", "", 1},
  }};
  const Rule* best = nullptr;
  for (const Rule& r : rules)
    if (ends_with(w, r.suffix) &&
        (best == nullptr || r.suffix.size() > best->suffix.size()))
      best = &r;
  if (best == nullptr) return;
  const std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) <= 1) return;
  if (best->suffix == "ion") {
    const char c = w[stem_len - 1];
    if (c != 's' && c != 't') return;
  }
  w.resize(stem_len);
}

void step_5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  const std::size_t stem_len = w.size() - 1;
  const int m = measure(w, stem_len);
  if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.resize(stem_len);
}

void step_5b(std::string& w) {
  if (measure(w, w.size()) > 1 && ends_double_consonant(w, w.size()) &&
      w.back() == 'l')
    w.resize(w.size() - 1);
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  step_1a(w);
  step_1b(w);
  step_1c(w);
  step_2(w);
  step_3(w);
  step_4(w);
  step_5a(w);
  step_5b(w);
  return w;
}

}  // namespace leakstat
