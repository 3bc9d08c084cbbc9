#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cotsel {

// Subject/difficulty metadata. Records without labels carry the explicit
// "unlabeled" value in both fields; empty strings are rejected at load.
struct Labels {
  std::string subject = "unlabeled";
  std::string difficulty = "unlabeled";

  bool operator==(const Labels&) const = default;
};

// Ordered sequence of reasoning-pattern names, possibly with repeats.
using PatternChain = std::vector<std::string>;

// One (question, cot, answer, labels) tuple; the unit of selection.
struct CotRecord {
  std::string id;
  std::string question;
  std::string cot;
  std::string answer;
  Labels labels;
  std::optional<PatternChain> pattern_chain;
  std::optional<std::vector<double>> entropy_chain;  // raw per-token entropies, nats
  std::uint64_t token_count = 0;

  bool operator==(const CotRecord&) const = default;
};

enum class CorpusKind { pool, core, eval };

const char* to_string(CorpusKind kind) noexcept;

struct Corpus {
  std::vector<CotRecord> records;
  CorpusKind kind = CorpusKind::pool;
};

// A core record plus per-pattern importance weights; the reference the
// pool is matched against. `record.pattern_chain` must be present and every
// pattern in it must have an importance entry (>= 0).
struct CoreInstance {
  CotRecord record;
  std::map<std::string, double> importance;
};

struct LoadIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct LoadReport {
  std::string path;
  std::size_t lines_total = 0;
  std::size_t loaded = 0;
  std::vector<LoadIssue> issues;
};

struct LoadResult {
  Corpus corpus;
  LoadReport report;
};

// Reads a JSON Lines corpus. Malformed or invalid records are skipped and
// reported with their line numbers; duplicate ids abort with a DataError
// naming both lines. For kind=core, records without a pattern chain are
// rejected as invalid.
LoadResult load_corpus(const std::string& path, CorpusKind kind);

// One record per line, fields in lexicographic key order, absent optionals
// omitted. load_corpus(save_corpus(c)) round-trips exactly.
void save_corpus(const Corpus& corpus, const std::string& path);

std::string record_to_json_line(const CotRecord& record);

void write_load_report(const LoadReport& report, const std::string& path);

struct RenderedText {
  std::string text;
  bool has_boxed_answer = false;  // cot contains the \boxed{} marker
};

// Training-text form: question, a single newline, then cot. The final answer
// is expected to already sit inside the cot's \boxed{} marker; a missing
// marker only raises the warning flag.
RenderedText render_training_text(const CotRecord& record);

}  // namespace cotsel
