#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace intent {

// Text cleaning pinned for tweet-like input: lowercase, URLs -> "url",
// @mentions -> "user", '#' stripped from hashtags, everything outside
// [a-z0-9' ] spaced out, whitespace runs collapsed.
std::string clean(const std::string& text);

// whitespace split of an already-cleaned string
std::vector<std::string> tokenize(const std::string& text);

// Token -> index map with PAD=0 and UNK=1 reserved. Indices 2..V-1 are
// assigned in descending corpus frequency order, ties lexicographic.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;

  Vocabulary() = default;

  static Vocabulary fit(const std::vector<std::vector<std::string>>& documents,
                        int min_frequency = 3);

  int size() const { return static_cast<int>(index_to_token_.size()); }
  int min_frequency() const { return min_frequency_; }

  // UNK for out-of-vocabulary tokens
  int index_of(const std::string& token) const;
  const std::string& token_at(int index) const { return index_to_token_.at(index); }

  std::vector<int> encode(const std::vector<std::string>& tokens, int max_len) const;
  std::vector<std::string> decode(const std::vector<int>& indices) const;  // PAD stripped

  // serialized form: one non-special token per line, index = line + 2
  std::vector<std::string> ordered_tokens() const;
  static Vocabulary from_ordered_tokens(const std::vector<std::string>& tokens,
                                        int min_frequency);

 private:
  std::vector<std::string> index_to_token_;
  std::unordered_map<std::string, int> token_to_index_;
  int min_frequency_ = 1;
};

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stopwords);

std::unordered_set<std::string> load_stopword_file(const std::string& path);

}  // namespace intent
