#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sequiv/equivalence.hpp"

namespace sequiv {

using Json = nlohmann::ordered_json;

// On-disk matrix document:
//   { "name": <string>, "matrix": [[int, ...], ...], "metadata": { ... } }
// metadata is optional free-form; rows must form a square matrix.
struct MatrixDocument {
  std::string name;
  IntMat matrix;
  Json metadata = Json::object();
};

// Structural JSON problems (wrong types, ragged rows, out-of-range entries)
// throw ParseError; a square matrix failing the Seifert-type test is a
// domain error raised by SeifertMatrix::validate at use sites.
MatrixDocument matrix_document_from_json(const Json& j);
Json matrix_document_to_json(const MatrixDocument& doc);

MatrixDocument load_matrix_document(const std::filesystem::path& path);
void save_matrix_document(const MatrixDocument& doc, const std::filesystem::path& path);

// Chain document:
//   { "start": {"name": ..., "matrix": ...},
//     "moves": [ {"move": "enlarge", "kind": 1|2, "v": [...]},
//                {"move": "reduce", "kind": 1|2, "p": i, "q": j},
//                {"move": "congruence", "matrix": [[...], ...]} ] }
Json chain_to_json(const MoveChain& chain, const std::string& start_name = "start");
MoveChain chain_from_json(const Json& j);
MoveChain load_chain_document(const std::filesystem::path& path);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);

Json invariant_report_to_json(const InvariantReport& r);
Json verdict_to_json(const Verdict& v);
Json compare_report_to_json(const CompareReport& r);
Json isometry_to_json(const Isometry& iso);

// Parses a whole JSON text, mapping nlohmann parse errors to ParseError
// with 1-based line/column positions.
Json parse_json_text(const std::string& text, const std::string& origin);
Json load_json_file(const std::filesystem::path& path);

// CSV knot-table intake. Header must be exactly "name,size,entries";
// entries is a semicolon-separated row-major integer list of length size^2.
// One bad row never aborts the file.
struct IngestRecord {
  std::string name;
  std::size_t size = 0;
  std::vector<Int> entries;  // row-major, length size^2
};

struct IngestReject {
  std::size_t line = 0;  // 1-based line number in the file
  std::string name;
  std::string reason;
};

struct IngestResult {
  std::vector<MatrixDocument> accepted;
  std::vector<IngestReject> rejected;
};

IngestResult ingest_csv(const std::string& text);
IngestResult ingest_csv_file(const std::filesystem::path& path);

// Corpus directory layout: <dir>/manifest.json plus one matrix document per
// entry under <dir>/entries/. The manifest records seeds, params, and
// FNV-1a content hashes; regeneration with the same params is byte-identical.
void write_corpus(const std::vector<CorpusEntry>& corpus, const CorpusParams& params,
                  const std::vector<NamedMatrix>& seeds, const std::filesystem::path& dir);

struct CorpusVerifyResult {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Regenerates the corpus from the manifest's seeds and params and compares
// every file byte for byte.
CorpusVerifyResult verify_corpus(const std::filesystem::path& dir);

Json corpus_entry_to_json(const CorpusEntry& entry);

std::string hash_hex(const std::string& bytes);

}  // namespace sequiv
