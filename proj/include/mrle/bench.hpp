#pragma once

#include <string>
#include <string_view>

#include "mrle/common.hpp"

namespace mrle {

enum class CodecId {
    Mrle,     // byte-level codec, raw framing (32-byte flag list + payload)
    Rle,      // run-first pair RLE, unframed
    PackBits, // TIFF PackBits, unframed
};

std::string_view codec_name(CodecId id);

// Parses a comma-separated codec list ("mrle,rle,packbits"); throws Error on
// an unknown name. The result is sorted by codec name and deduplicated.
std::vector<CodecId> parse_codec_list(std::string_view list);

struct NamedInput {
    std::string name;
    Bytes data;
};

struct BenchRow {
    std::string path;
    std::string codec;
    std::uint64_t input_bytes = 0;
    std::uint64_t encoded_bytes = 0; // includes per-codec framing, see CodecId
    double ratio = 0.0;              // encoded / input; 0 for empty inputs
    double encode_ms = 0.0;
    double decode_ms = 0.0;
    bool roundtrip_ok = false;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

// Encodes, decodes and verifies every (input, codec) pair. Rows come out in
// input order, then codec name ascending. Throws Error if any round trip
// fails to reproduce its input.
BenchReport run_bench(const std::vector<NamedInput>& inputs, const std::vector<CodecId>& codecs);

enum class ReportFormat { Table, Csv, Json };

ReportFormat parse_report_format(std::string_view name);

// Table: fixed-width human-readable with a framing footnote. Csv: header row
// path,codec,input_bytes,encoded_bytes,ratio,encode_ms,decode_ms,roundtrip_ok.
// Json: array of row objects with the same keys.
std::string emit_report(const BenchReport& report, ReportFormat format);

// Synthetic corpus generation, fully deterministic for a given seed.
// Generators: "constant", "alternating", "random", "geometric-runs" (run
// lengths geometric with parameter p, adjacent run values always differ).
struct CorpusSpec {
    std::string generator;
    std::uint64_t size = 0;
    std::uint64_t seed = 0;
    double p = 0.05; // geometric-runs only
};

Bytes generate_corpus(const CorpusSpec& spec);

// Parses "name:size:seed" or "name:size:seed:p".
CorpusSpec parse_corpus_spec(std::string_view text);

std::string corpus_spec_name(const CorpusSpec& spec);

} // namespace mrle
