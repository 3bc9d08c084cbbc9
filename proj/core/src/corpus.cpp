#include "cotsel/corpus.hpp"

#include <cmath>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "cotsel/entropy.hpp"
#include "cotsel/errors.hpp"

namespace cotsel {

using nlohmann::json;

const char* to_string(CorpusKind kind) noexcept {
  switch (kind) {
    case CorpusKind::pool: return "pool";
    case CorpusKind::core: return "core";
    case CorpusKind::eval: return "eval";
  }
  return "pool";
}

namespace {

CotRecord parse_record(const json& j, CorpusKind kind) {
  if (!j.is_object()) throw DataError("record is not a JSON object");

  CotRecord rec;
  const auto require_string = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      throw DataError(std::string("missing or non-string field '") + key + "'");
    }
    return it->get<std::string>();
  };

  rec.id = require_string("id");
  if (rec.id.empty()) throw DataError("empty id");
  rec.question = require_string("question");
  if (rec.question.empty()) throw DataError("empty question");
  rec.cot = require_string("cot");
  if (rec.cot.empty()) throw DataError("empty cot");
  if (auto it = j.find("answer"); it != j.end()) {
    if (!it->is_string()) throw DataError("non-string field 'answer'");
    rec.answer = it->get<std::string>();
  }

  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw DataError("'labels' is not an object");
    const auto label_field = [&](const char* key, std::string& dst) {
      auto f = it->find(key);
      if (f == it->end() || f->is_null()) return;
      if (!f->is_string()) throw DataError(std::string("non-string label '") + key + "'");
      dst = f->get<std::string>();
      if (dst.empty()) throw DataError(std::string("empty label '") + key + "'");
    };
    label_field("subject", rec.labels.subject);
    label_field("difficulty", rec.labels.difficulty);
  }

  if (auto it = j.find("pattern_chain"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError("'pattern_chain' is not an array");
    PatternChain chain;
    chain.reserve(it->size());
    for (const auto& step : *it) {
      if (!step.is_string() || step.get<std::string>().empty()) {
        throw DataError("'pattern_chain' steps must be non-empty strings");
      }
      chain.push_back(step.get<std::string>());
    }
    rec.pattern_chain = std::move(chain);
  }

  if (auto it = j.find("entropy_chain"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError("'entropy_chain' is not an array");
    std::vector<double> values;
    values.reserve(it->size());
    for (const auto& v : *it) {
      if (!v.is_number()) throw DataError("'entropy_chain' values must be numbers");
      const double x = v.get<double>();
      if (!std::isfinite(x) || x < 0.0) {
        throw DataError("'entropy_chain' values must be finite and >= 0");
      }
      values.push_back(x);
    }
    rec.entropy_chain = std::move(values);
  } else if (auto tp = j.find("token_probs"); tp != j.end() && !tp->is_null()) {
    // Optional ingestion path: per-token probability vectors.
    if (!tp->is_array()) throw DataError("'token_probs' is not an array");
    std::vector<double> values;
    values.reserve(tp->size());
    for (const auto& entry : *tp) {
      if (!entry.is_object() || !entry.contains("probs") || !entry["probs"].is_array()) {
        throw DataError("'token_probs' entries must be objects with a 'probs' array");
      }
      TokenDistribution dist;
      for (const auto& p : entry["probs"]) {
        if (!p.is_number()) throw DataError("'probs' values must be numbers");
        dist.probs.push_back(p.get<double>());
      }
      values.push_back(token_entropy(dist));
    }
    rec.entropy_chain = std::move(values);
  }

  if (auto it = j.find("token_count"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw DataError("'token_count' must be a non-negative integer");
    rec.token_count = it->get<std::uint64_t>();
    if (rec.entropy_chain && rec.token_count != rec.entropy_chain->size()) {
      throw DataError("'token_count' does not match entropy_chain length");
    }
  } else if (rec.entropy_chain) {
    rec.token_count = rec.entropy_chain->size();
  }

  if (kind == CorpusKind::core && !rec.pattern_chain) {
    throw DataError("core record lacks a pattern_chain");
  }
  return rec;
}

}  // namespace

LoadResult load_corpus(const std::string& path, CorpusKind kind) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);

  LoadResult result;
  result.corpus.kind = kind;
  result.report.path = path;

  std::unordered_map<std::string, std::size_t> first_line_of_id;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++result.report.lines_total;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
      result.report.issues.push_back({line_no, "malformed JSON"});
      continue;
    }
    try {
      CotRecord rec = parse_record(j, kind);
      auto [it, inserted] = first_line_of_id.emplace(rec.id, line_no);
      if (!inserted) {
        throw DataError("duplicate id '" + rec.id + "' at lines " +
                        std::to_string(it->second) + " and " + std::to_string(line_no) +
                        " of " + path);
      }
      result.corpus.records.push_back(std::move(rec));
      ++result.report.loaded;
    } catch (const DataError& e) {
      if (std::string_view(e.what()).starts_with("duplicate id")) throw;
      result.report.issues.push_back({line_no, e.what()});
    }
  }
  return result;
}

std::string record_to_json_line(const CotRecord& record) {
  json j;
  j["id"] = record.id;
  j["question"] = record.question;
  j["cot"] = record.cot;
  j["answer"] = record.answer;
  j["labels"] = {{"subject", record.labels.subject},
                 {"difficulty", record.labels.difficulty}};
  if (record.pattern_chain) j["pattern_chain"] = *record.pattern_chain;
  if (record.entropy_chain) j["entropy_chain"] = *record.entropy_chain;
  j["token_count"] = record.token_count;
  return j.dump();
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  for (const auto& rec : corpus.records) {
    out << record_to_json_line(rec) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_load_report(const LoadReport& report, const std::string& path) {
  json j;
  j["path"] = report.path;
  j["lines_total"] = report.lines_total;
  j["loaded"] = report.loaded;
  j["rejected"] = json::array();
  for (const auto& issue : report.issues) {
    j["rejected"].push_back({{"line", issue.line}, {"message", issue.message}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open report file: " + path);
  out << j.dump(2) << '\n';
}

RenderedText render_training_text(const CotRecord& record) {
  if (record.question.empty()) throw DataError("record '" + record.id + "' has empty question");
  if (record.cot.empty()) throw DataError("record '" + record.id + "' has empty cot");
  RenderedText out;
  out.text = record.question + "\n" + record.cot;
  out.has_boxed_answer = record.cot.find("\\boxed{") != std::string::npos;
  return out;
}

}  // namespace cotsel
