#include "intent/lovins.hpp"

#include <array>
#include <cstring>

namespace intent {

namespace {

enum Cond : unsigned char {
  A, B, C, D, E, F, G, H, I, J, K, L, M, N, O, P, Q, R, S, T, U, V, W, X, Y, Z,
  AA, BB, CC
};

struct Ending {
  const char* suffix;
  Cond cond;
};

// Ending table, grouped by length 11 down to 1. At most one ending of a
// given length can match a word, so scan order within a group is free.
const Ending kEndings[] = {
    {"alistically", B}, {"arizability", A}, {"izationally", B},
    {"antialness", A}, {"arisations", A}, {"arizations", A}, {"entialness", E},
    {"allically", C}, {"antaneous", A}, {"antiality", A}, {"arisation", A},
    {"arization", A}, {"ationally", B}, {"ativeness", A}, {"eableness", E},
    {"entations", A}, {"entiality", A}, {"entialize", A}, {"entiation", A},
    {"ionalness", A}, {"istically", A}, {"itousness", A}, {"izability", A},
    {"izational", A},
    {"ableness", A}, {"arizable", A}, {"entation", A}, {"entially", A},
    {"eousness", A}, {"ibleness", A}, {"icalness", A}, {"ionalism", A},
    {"ionality", A}, {"ionalize", A}, {"iousness", A}, {"izations", A},
    {"lessness", A},
    {"ability", A}, {"aically", A}, {"alistic", B}, {"alities", A},
    {"ariness", E}, {"aristic", A}, {"arizing", A}, {"ateness", A},
    {"atingly", A}, {"ational", B}, {"atively", A}, {"ativism", A},
    {"elihood", E}, {"encible", A}, {"entally", A}, {"entials", A},
    {"entiate", A}, {"entness", A}, {"fulness", A}, {"ibility", A},
    {"icalism", A}, {"icalist", A}, {"icality", A}, {"icalize", A},
    {"ication", G}, {"icianry", A}, {"ination", A}, {"ingness", A},
    {"ionally", A}, {"isation", A}, {"ishness", A}, {"istical", A},
    {"iteness", A}, {"iveness", A}, {"ivistic", A}, {"ivities", A},
    {"ization", F}, {"izement", A}, {"oidally", A}, {"ousness", A},
    {"aceous", A}, {"acious", B}, {"action", G}, {"alness", A},
    {"ancial", A}, {"ancies", A}, {"ancing", B}, {"ariser", A},
    {"arized", A}, {"arizer", A}, {"atable", A}, {"ations", B},
    {"atives", A}, {"eature", Z}, {"efully", A}, {"encies", A},
    {"encing", A}, {"ential", A}, {"enting", C}, {"entist", A},
    {"eously", A}, {"ialist", A}, {"iality", A}, {"ialize", A},
    {"ically", A}, {"icance", A}, {"icians", A}, {"icists", A},
    {"ifully", A}, {"ionals", A}, {"ionate", D}, {"ioning", A},
    {"ionist", A}, {"iously", A}, {"istics", A}, {"izable", E},
    {"lessly", A}, {"nesses", A}, {"oidism", A},
    {"acies", A}, {"acity", A}, {"aging", B}, {"aical", A},
    {"alist", A}, {"alism", B}, {"ality", A}, {"alize", A},
    {"allic", BB}, {"anced", B}, {"ances", B}, {"antic", C},
    {"arial", A}, {"aries", A}, {"arily", A}, {"arity", B},
    {"arize", A}, {"aroid", A}, {"ately", A}, {"ating", I},
    {"ation", B}, {"ative", A}, {"ators", A}, {"atory", A},
    {"ature", E}, {"early", Y}, {"ehood", A}, {"eless", A},
    {"elity", A}, {"ement", A}, {"enced", A}, {"ences", A},
    {"eness", E}, {"ening", E}, {"ental", A}, {"ented", C},
    {"ently", A}, {"fully", A}, {"ially", A}, {"icant", A},
    {"ician", A}, {"icide", A}, {"icism", A}, {"icist", A},
    {"icity", A}, {"idine", I}, {"iedly", A}, {"ihood", A},
    {"inate", A}, {"iness", A}, {"ingly", B}, {"inism", J},
    {"inity", CC}, {"ional", A}, {"ioned", A}, {"ished", A},
    {"istic", A}, {"ities", A}, {"itous", A}, {"ively", A},
    {"ivity", A}, {"izers", F}, {"izing", F}, {"oidal", A},
    {"oides", A}, {"otide", A}, {"ously", A},
    {"able", A}, {"ably", A}, {"ages", B}, {"ally", B},
    {"ance", B}, {"ancy", B}, {"ants", B}, {"aric", A},
    {"arly", K}, {"ated", I}, {"ates", A}, {"atic", B},
    {"ator", A}, {"ealy", Y}, {"edly", E}, {"eful", A},
    {"eity", A}, {"ence", A}, {"ency", A}, {"ened", E},
    {"enly", E}, {"eous", A}, {"hood", A}, {"ials", A},
    {"ians", A}, {"ible", A}, {"ibly", A}, {"ical", A},
    {"ides", L}, {"iers", A}, {"iful", A}, {"ines", M},
    {"ings", N}, {"ions", B}, {"ious", A}, {"isms", B},
    {"ists", A}, {"itic", H}, {"ized", F}, {"izer", F},
    {"less", A}, {"lily", A}, {"ness", A}, {"ogen", A},
    {"ward", A}, {"wise", A}, {"ying", B}, {"yish", A},
    {"acy", A}, {"age", B}, {"aic", A}, {"als", BB},
    {"ant", B}, {"ars", O}, {"ary", F}, {"ata", A},
    {"ate", A}, {"eal", Y}, {"ear", Y}, {"ely", E},
    {"ene", E}, {"ent", C}, {"ery", E}, {"ese", A},
    {"ful", A}, {"ial", A}, {"ian", A}, {"ics", A},
    {"ide", L}, {"ied", A}, {"ier", A}, {"ies", P},
    {"ily", A}, {"ine", M}, {"ing", N}, {"ion", Q},
    {"ish", C}, {"ism", B}, {"ist", A}, {"ite", AA},
    {"ity", A}, {"ium", A}, {"ive", A}, {"ize", F},
    {"oid", A}, {"one", R}, {"ous", A},
    {"ae", A}, {"al", BB}, {"ar", X}, {"as", B},
    {"ed", E}, {"en", F}, {"es", E}, {"ia", A},
    {"ic", A}, {"is", A}, {"ly", B}, {"on", S},
    {"or", T}, {"um", U}, {"us", V}, {"yl", R},
    {"s'", A}, {"'s", A},
    {"a", A}, {"e", A}, {"i", A}, {"o", A},
    {"s", W}, {"y", B},
};

bool ends_with(const std::string& s, const char* suffix) {
  std::size_t n = std::strlen(suffix);
  return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

bool condition_holds(Cond cond, const std::string& stem) {
  const std::size_t n = stem.size();
  const char last = stem.back();
  switch (cond) {
    case A: return true;
    case B: return n >= 3;
    case C: return n >= 4;
    case D: return n >= 5;
    case E: return last != 'e';
    case F: return n >= 3 && last != 'e';
    case G: return n >= 3 && last == 'f';
    case H: return last == 't' || ends_with(stem, "ll");
    case I: return last != 'o' && last != 'e';
    case J: return last != 'a' && last != 'e';
    case K: return n >= 3 && (last == 'l' || last == 'i' ||
                              (last == 'e' && stem[n - 3] == 'u'));
    case L:
      if (last == 'u' || last == 'x') return false;
      if (last == 's') return n >= 2 && stem[n - 2] == 'o';
      return true;
    case M: return last != 'a' && last != 'c' && last != 'e' && last != 'm';
    case N:  // minimum stem length 4 after s**, elsewhere 3
      if (n >= 3 && stem[n - 3] == 's') return n >= 4;
      return n >= 3;
    case O: return last == 'l' || last == 'i';
    case P: return last != 'c';
    case Q: return n >= 3 && last != 'l' && last != 'n';
    case R: return last == 'n' || last == 'r';
    case S:
      if (ends_with(stem, "dr")) return true;
      return last == 't' && !ends_with(stem, "tt");
    case T:
      if (last == 's') return true;
      return last == 't' && !ends_with(stem, "ot");
    case U: return last == 'l' || last == 'm' || last == 'n' || last == 'r';
    case V: return last == 'c';
    case W: return last != 's' && last != 'u';
    case X: return last == 'l' || last == 'i' ||
                   (last == 'e' && n >= 3 && stem[n - 3] == 'u');
    case Y: return ends_with(stem, "in");
    case Z: return last != 'f';
    case AA:
      return last == 'd' || last == 'f' || last == 'l' || last == 't' ||
             ends_with(stem, "ph") || ends_with(stem, "th") ||
             ends_with(stem, "er") || ends_with(stem, "or") ||
             ends_with(stem, "es");
    case BB: return n >= 3 && !ends_with(stem, "met") && !ends_with(stem, "ryst");
    case CC: return last == 'l';
  }
  return false;
}

void remove_ending(std::string& word) {
  // endings are ordered longest first; a removal must leave >= 2 chars
  for (const Ending& e : kEndings) {
    const std::size_t len = std::strlen(e.suffix);
    if (word.size() < len + 2) continue;
    if (word.compare(word.size() - len, len, e.suffix) != 0) continue;
    std::string stem = word.substr(0, word.size() - len);
    if (condition_holds(e.cond, stem)) {
      word = std::move(stem);
      return;
    }
  }
}

void undouble(std::string& word) {
  if (word.size() < 2) return;
  char c = word[word.size() - 1];
  if (c != word[word.size() - 2]) return;
  if (std::strchr("bdglmnprst", c)) word.pop_back();
}

struct Respell {
  const char* from;
  const char* to;
  const char* not_after;  // blocked when the char before the match is one of these
};

const Respell kRespell[] = {
    {"iev", "ief", ""},   {"uct", "uc", ""},    {"umpt", "um", ""},
    {"rapt", "rab", ""},  {"urs", "ur", ""},    {"istr", "ister", ""},
    {"metr", "meter", ""},{"olv", "olut", ""},  {"ul", "l", "aoi"},
    {"bex", "bic", ""},   {"dex", "dic", ""},   {"pex", "pic", ""},
    {"tex", "tic", ""},   {"ax", "ac", ""},     {"ex", "ec", ""},
    {"ix", "ic", ""},     {"lux", "luc", ""},   {"uad", "uas", ""},
    {"vad", "vas", ""},   {"cid", "cis", ""},   {"lid", "lis", ""},
    {"erid", "eris", ""}, {"pand", "pans", ""}, {"end", "ens", "s"},
    {"ond", "ons", ""},   {"lud", "lus", ""},   {"rud", "rus", ""},
    {"her", "hes", "pt"}, {"mit", "mis", ""},   {"ent", "ens", "m"},
    {"ert", "ers", ""},   {"et", "es", "n"},    {"yt", "ys", ""},
    {"yz", "ys", ""},
};

void respell(std::string& word) {
  for (const Respell& r : kRespell) {
    const std::size_t len = std::strlen(r.from);
    if (word.size() < len) continue;
    if (word.compare(word.size() - len, len, r.from) != 0) continue;
    if (*r.not_after && word.size() > len) {
      char before = word[word.size() - len - 1];
      if (std::strchr(r.not_after, before)) continue;
    }
    word.replace(word.size() - len, len, r.to);
    return;
  }
}

}  // namespace

std::string lovins_stem(const std::string& token) {
  for (char c : token)
    if (!((c >= 'a' && c <= 'z') || c == '\'')) return token;
  if (token.size() < 2) return token;

  std::string word = token;
  remove_ending(word);
  undouble(word);
  respell(word);
  return word;
}

}  // namespace intent
