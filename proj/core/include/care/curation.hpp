#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "care/types.hpp"

namespace care::curation {

enum class LabelFlag { present, absent, unknown };

std::string to_string(LabelFlag f);
LabelFlag label_flag_from_string(const std::string& s);

// One manifest row: pre-extracted label flags plus the report text they
// came from. No NLP happens here; labels arrive already extracted.
struct RawRecord {
  std::string record_id;
  std::map<std::string, LabelFlag> label_flags;
  std::optional<std::string> report_text;
  std::vector<std::string> image_refs;

  bool operator==(const RawRecord&) const = default;
};

struct CurationReport {
  std::size_t input_count = 0;
  std::size_t xor_kept = 0;
  std::size_t hedge_excluded = 0;
  std::size_t balance_removed = 0;
  std::size_t final_count = 0;
  std::map<std::string, std::size_t> per_label_counts;
  std::uint64_t seed = 0;
  std::string phrase_list_hash;
};

// Low-confidence report expressions; a match drops the record. The list is
// explicit and hash-stamped into every CurationReport.
const std::vector<std::string>& default_hedge_phrases();
std::string phrase_list_hash(const std::vector<std::string>& phrases);

// Keeps exactly the records where one label is present and the other
// absent. `unknown` on either side drops the record. A record whose flags
// lack either label is a manifest schema error.
std::vector<RawRecord> xor_filter(const std::vector<RawRecord>& records,
                                  const std::string& label_a,
                                  const std::string& label_b);

// Case-insensitive, whitespace-normalized substring match. Returns the
// matched phrase when the record should be dropped. No report text -> keep.
std::optional<std::string> hedge_match(const std::optional<std::string>& report_text,
                                       const std::vector<std::string>& phrases);

// Uniformly subsamples the majority class (seeded, without replacement)
// until the class counts differ by at most `tolerance`. Input order is
// preserved; the minority class is untouched.
std::vector<RawRecord> balance_subsample(const std::vector<RawRecord>& records,
                                         const std::string& label_a,
                                         const std::string& label_b,
                                         std::uint64_t seed,
                                         std::size_t tolerance = 0);

// Full pipeline, order-fixed: xor -> hedge -> balance. Idempotent.
struct CurationResult {
  std::vector<RawRecord> records;
  CurationReport report;
};

CurationResult curate(const std::vector<RawRecord>& records,
                      const std::string& label_a, const std::string& label_b,
                      std::uint64_t seed,
                      const std::vector<std::string>& phrases,
                      std::size_t tolerance = 0);

// The present label of a post-XOR record.
const std::string& record_label(const RawRecord& record,
                                const std::string& label_a,
                                const std::string& label_b);

// JSONL manifest I/O.
std::vector<RawRecord> load_manifest(const std::string& path);
void save_manifest(const std::vector<RawRecord>& records, const std::string& path);
RawRecord raw_record_from_json_line(const std::string& line);

// Curated records as run-ready study skeletons (study_id, truth,
// image paths, report text), one JSON object per line.
std::string to_study_line(const RawRecord& record, const std::string& label_a,
                          const std::string& label_b);

std::string report_to_json(const CurationReport& report);
std::string report_summary(const CurationReport& report);

}  // namespace care::curation
