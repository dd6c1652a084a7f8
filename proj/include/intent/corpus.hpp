#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace intent {

// The four intent classes, in fixed order. The order doubles as the
// argmax tie-break order and the column order of every report.
enum class IntentLabel { Accusational = 0, Validational = 1, Sensational = 2, None = 3 };

inline constexpr int kNumLabels = 4;
inline constexpr std::array<IntentLabel, 4> kLabelOrder = {
    IntentLabel::Accusational, IntentLabel::Validational,
    IntentLabel::Sensational, IntentLabel::None};

const std::string& to_string(IntentLabel label);
IntentLabel label_from_string(const std::string& s);  // throws on unknown

struct Message {
  std::string id;
  std::string text;
  std::optional<std::string> created_at;
  std::size_t ordinal = 0;  // position in input stream
};

struct Annotation {
  std::string message_id;
  std::string annotator_id;
  IntentLabel label = IntentLabel::None;
  double trust = 1.0;  // in (0, 1]
};

struct LabeledMessage {
  Message message;
  IntentLabel label = IntentLabel::None;
  double confidence = 1.0;
};

// the nine myth-lexicon terms the corpus filter defaults to
const std::vector<std::string>& default_myth_lexicon();

struct LoadResult {
  std::vector<Message> messages;
  std::size_t malformed_lines = 0;
};

// JSONL, one object per line with required string fields `id` and `text`
// and optional `created_at`; malformed lines are skipped and counted.
LoadResult load_corpus(const std::string& path);

struct LabeledLoadResult {
  std::vector<LabeledMessage> messages;
  std::size_t malformed_lines = 0;
};

// JSONL with `id`, `text`, `label` and optional `confidence`
LabeledLoadResult load_labeled_corpus(const std::string& path);

void write_corpus(const std::vector<Message>& messages, const std::string& path);
void write_labeled_corpus(const std::vector<LabeledMessage>& messages, const std::string& path);

// Keeps a message iff some lexicon entry occurs as a whole-token sequence
// in the cleaned text. Multi-word entries match consecutive tokens.
std::vector<Message> lexicon_filter(const std::vector<Message>& messages,
                                    const std::vector<std::string>& lexicon);

// 1 - edit_distance/max(|a|,|b|); 1.0 when both empty
double levenshtein_similarity(const std::string& a, const std::string& b);
std::size_t levenshtein_distance(const std::string& a, const std::string& b);

// Greedy single pass in ordinal order: a message is kept iff its lowercased
// text stays below `threshold` similarity against every previously kept
// message. The scan over kept messages runs in parallel when enabled.
std::vector<Message> dedup(const std::vector<Message>& messages, double threshold,
                           bool parallel = true);

struct AggregationResult {
  std::vector<LabeledMessage> labeled;
  std::size_t skipped_few_annotations = 0;  // messages with < 3 annotations
  std::size_t dropped_low_confidence = 0;   // includes tied votes
};

// Trust-weighted vote share per message; the winning label is emitted iff
// its confidence strictly exceeds the threshold. Ties drop the message.
AggregationResult aggregate_annotations(const std::vector<Message>& messages,
                                        const std::vector<Annotation>& annotations,
                                        double confidence_threshold = 0.67);

// CSV with header message_id,annotator_id,label,trust
std::vector<Annotation> load_annotations_csv(const std::string& path);

}  // namespace intent
