#include "parroteval/porter.hpp"

#include <array>

namespace parroteval {
namespace {

// The classic 1980 algorithm, working on a lowercase a-z buffer.
struct Stemmer {
  std::string b;

  bool is_cons(size_t i) const {
    switch (b[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_cons(i - 1);
      default:
        return true;
    }
  }

  // Measure of b[0..end): number of VC sequences.
  int measure(size_t end) const {
    int m = 0;
    size_t i = 0;
    while (i < end && is_cons(i)) ++i;
    while (i < end) {
      while (i < end && !is_cons(i)) ++i;
      if (i == end) break;
      ++m;
      while (i < end && is_cons(i)) ++i;
    }
    return m;
  }

  bool has_vowel(size_t end) const {
    for (size_t i = 0; i < end; ++i) {
      if (!is_cons(i)) return true;
    }
    return false;
  }

  bool double_cons() const {
    size_t n = b.size();
    return n >= 2 && b[n - 1] == b[n - 2] && is_cons(n - 1);
  }

  // *o: stem ends cvc where the final consonant is not w, x or y.
  bool cvc(size_t end) const {
    if (end < 3) return false;
    if (!is_cons(end - 3) || is_cons(end - 2) || !is_cons(end - 1)) return false;
    char c = b[end - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) const {
    return b.size() >= s.size() && b.compare(b.size() - s.size(), s.size(), s) == 0;
  }

  void set_suffix(size_t drop, std::string_view repl) {
    b.resize(b.size() - drop);
    b += repl;
  }

  struct Rule {
    std::string_view suffix;
    std::string_view repl;
  };

  // Longest matching suffix in the list wins; its condition is then
  // tested and the step ends either way.
  void apply_list(std::initializer_list<Rule> rules, int min_measure) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
      if (ends(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    }
    if (!best) return;
    size_t stem_len = b.size() - best->suffix.size();
    if (measure(stem_len) > min_measure) set_suffix(best->suffix.size(), best->repl);
  }

  void step1a() {
    if (ends("sses")) {
      set_suffix(2, "");
    } else if (ends("ies")) {
      set_suffix(3, "i");
    } else if (ends("ss")) {
      // keep
    } else if (ends("s")) {
      set_suffix(1, "");
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(b.size() - 3) > 0) set_suffix(1, "");
      return;
    }
    bool removed = false;
    if (ends("ed") && has_vowel(b.size() - 2)) {
      set_suffix(2, "");
      removed = true;
    } else if (ends("ing") && has_vowel(b.size() - 3)) {
      set_suffix(3, "");
      removed = true;
    }
    if (!removed) return;
    if (ends("at") || ends("bl") || ends("iz")) {
      b += 'e';
    } else if (double_cons() && !ends("l") && !ends("s") && !ends("z")) {
      b.pop_back();
    } else if (measure(b.size()) == 1 && cvc(b.size())) {
      b += 'e';
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(b.size() - 1)) b.back() = 'i';
  }

  void step2() {
    apply_list({{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                {"iviti", "ive"},   {"biliti", "ble"}},
               0);
  }

  void step3() {
    apply_list({{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
                {"ical", "ic"},  {"ful", ""},   {"ness", ""}},
               0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> suffixes = {
        "ement", "ance", "ence", "able", "ible", "ment", "ion", "ent", "ism",
        "ate",   "iti",  "ous",  "ive",  "ize",  "al",   "er",  "ic",  "ou", "ant"};
    std::string_view best;
    for (std::string_view s : suffixes) {
      if (ends(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    size_t stem_len = b.size() - best.size();
    if (measure(stem_len) <= 1) return;
    if (best == "ion" && stem_len > 0 && b[stem_len - 1] != 's' && b[stem_len - 1] != 't')
      return;
    b.resize(stem_len);
  }

  void step5a() {
    if (!ends("e")) return;
    int m = measure(b.size() - 1);
    if (m > 1 || (m == 1 && !cvc(b.size() - 1))) b.pop_back();
  }

  void step5b() {
    if (measure(b.size()) > 1 && double_cons() && ends("l")) b.pop_back();
  }
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  Stemmer st{std::string(word)};
  st.step1a();
  st.step1b();
  st.step1c();
  st.step2();
  st.step3();
  st.step4();
  st.step5a();
  st.step5b();
  return st.b;
}

}  // namespace parroteval
