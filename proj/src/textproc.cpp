#include "intent/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>

namespace intent {

namespace {

bool is_url_start(const std::string& s, std::size_t i) {
  return s.compare(i, 7, "http://") == 0 || s.compare(i, 8, "https://") == 0 ||
         s.compare(i, 4, "www.") == 0;
}

bool is_mention_start(const std::string& s, std::size_t i) {
  if (s[i] != '@' || i + 1 >= s.size()) return false;
  char c = s[i + 1];
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::string clean(const std::string& text) {
  std::string lower;
  lower.reserve(text.size());
  for (unsigned char c : text) lower.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));

  std::string out;
  out.reserve(lower.size());
  std::size_t i = 0;
  while (i < lower.size()) {
    if (is_url_start(lower, i)) {
      while (i < lower.size() && !std::isspace(static_cast<unsigned char>(lower[i]))) ++i;
      out += " url ";
      continue;
    }
    if (is_mention_start(lower, i)) {
      ++i;  // '@'
      while (i < lower.size()) {
        char c = lower[i];
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') ++i;
        else break;
      }
      out += " user ";
      continue;
    }
    char c = lower[i];
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'') out.push_back(c);
    else out.push_back(' ');  // '#' lands here, which strips it from hashtags
    ++i;
  }

  // collapse whitespace runs, trim
  std::string collapsed;
  collapsed.reserve(out.size());
  bool in_space = true;
  for (char c : out) {
    if (c == ' ') {
      if (!in_space) collapsed.push_back(' ');
      in_space = true;
    } else {
      collapsed.push_back(c);
      in_space = false;
    }
  }
  if (!collapsed.empty() && collapsed.back() == ' ') collapsed.pop_back();
  return collapsed;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

Vocabulary Vocabulary::fit(const std::vector<std::vector<std::string>>& documents,
                           int min_frequency) {
  if (min_frequency < 1) throw std::invalid_argument("min_frequency must be >= 1");
  std::unordered_map<std::string, long long> freq;
  for (const auto& doc : documents)
    for (const auto& tok : doc) ++freq[tok];

  std::vector<std::pair<std::string, long long>> kept;
  kept.reserve(freq.size());
  for (const auto& [tok, n] : freq)
    if (n >= min_frequency) kept.emplace_back(tok, n);

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary v;
  v.min_frequency_ = min_frequency;
  v.index_to_token_ = {"<pad>", "<unk>"};
  for (const auto& [tok, n] : kept) {
    (void)n;
    v.token_to_index_.emplace(tok, static_cast<int>(v.index_to_token_.size()));
    v.index_to_token_.push_back(tok);
  }
  return v;
}

int Vocabulary::index_of(const std::string& token) const {
  auto it = token_to_index_.find(token);
  return it == token_to_index_.end() ? kUnk : it->second;
}

std::vector<int> Vocabulary::encode(const std::vector<std::string>& tokens, int max_len) const {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::vector<int> out(static_cast<std::size_t>(max_len), kPad);
  const std::size_t n = std::min(tokens.size(), static_cast<std::size_t>(max_len));
  for (std::size_t i = 0; i < n; ++i) out[i] = index_of(tokens[i]);
  return out;
}

std::vector<std::string> Vocabulary::decode(const std::vector<int>& indices) const {
  std::vector<std::string> out;
  for (int idx : indices) {
    if (idx == kPad) continue;
    out.push_back(index_to_token_.at(idx));
  }
  return out;
}

std::vector<std::string> Vocabulary::ordered_tokens() const {
  return {index_to_token_.begin() + 2, index_to_token_.end()};
}

Vocabulary Vocabulary::from_ordered_tokens(const std::vector<std::string>& tokens,
                                           int min_frequency) {
  Vocabulary v;
  v.min_frequency_ = min_frequency;
  v.index_to_token_ = {"<pad>", "<unk>"};
  for (const auto& tok : tokens) {
    v.token_to_index_.emplace(tok, static_cast<int>(v.index_to_token_.size()));
    v.index_to_token_.push_back(tok);
  }
  return v;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!stopwords.count(t)) out.push_back(t);
  return out;
}

std::unordered_set<std::string> load_stopword_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  return words;
}

}  // namespace intent
