#include "sequiv/documents.hpp"

#include <fstream>
#include <sstream>

namespace sequiv {

namespace {

// Documents carry plain JSON integers; the exact-arithmetic core is
// unbounded but the interchange format is not.
Int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return Int(j.get<long long>());
}

long long int_to_json(const Int& v, const char* what) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v < lo || v > hi)
    throw std::domain_error(std::string(what) + " exceeds the document integer range");
  return v.convert_to<long long>();
}

IntMat int_mat_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw ParseError(std::string(what) + " rows must be arrays");
    cols = j[0].size();
  }
  if (rows != cols) throw ParseError(std::string(what) + " must be square");
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(std::string(what) + " rows must all have the same length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c], what);
  }
  return m;
}

Json int_mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j), "entry"));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << bytes;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert to line/column.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ": " + e.what(), line, col);
  }
}

Json load_json_file(const std::filesystem::path& path) {
  return parse_json_text(read_file(path), path.string());
}

MatrixDocument matrix_document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix document must be a JSON object");
  MatrixDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("matrix")) throw ParseError("matrix document is missing \"matrix\"");
  doc.matrix = int_mat_from_json(j["matrix"], "matrix");
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("metadata must be an object");
    doc.metadata = j["metadata"];
  }
  return doc;
}

Json matrix_document_to_json(const MatrixDocument& doc) {
  Json j = Json::object();
  j["name"] = doc.name;
  j["matrix"] = int_mat_to_json(doc.matrix);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

MatrixDocument load_matrix_document(const std::filesystem::path& path) {
  return matrix_document_from_json(load_json_file(path));
}

void save_matrix_document(const MatrixDocument& doc, const std::filesystem::path& path) {
  write_file(path, dump_document(matrix_document_to_json(doc)));
}

Json move_to_json(const Move& m) {
  Json j = Json::object();
  if (const auto* en = std::get_if<EnlargeMove>(&m)) {
    j["move"] = "enlarge";
    j["kind"] = en->kind;
    Json v = Json::array();
    for (const Int& x : en->v) v.push_back(int_to_json(x, "enlargement entry"));
    j["v"] = std::move(v);
  } else if (const auto* re = std::get_if<ReduceMove>(&m)) {
    j["move"] = "reduce";
    j["kind"] = re->kind;
    j["p"] = re->p;
    j["q"] = re->q;
  } else {
    j["move"] = "congruence";
    j["matrix"] = int_mat_to_json(std::get<CongruenceMove>(m).p);
  }
  return j;
}

Move move_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("move") || !j["move"].is_string())
    throw ParseError("move must be an object with a \"move\" tag");
  const std::string tag = j["move"].get<std::string>();
  if (tag == "enlarge") {
    EnlargeMove en;
    if (!j.contains("kind") || !j["kind"].is_number_integer())
      throw ParseError("enlarge move needs an integer \"kind\"");
    en.kind = j["kind"].get<int>();
    if (!j.contains("v") || !j["v"].is_array())
      throw ParseError("enlarge move needs an array \"v\"");
    for (const auto& x : j["v"]) en.v.push_back(int_from_json(x, "enlargement entry"));
    return en;
  }
  if (tag == "reduce") {
    ReduceMove re;
    if (!j.contains("kind") || !j["kind"].is_number_integer())
      throw ParseError("reduce move needs an integer \"kind\"");
    re.kind = j["kind"].get<int>();
    if (!j.contains("p") || !j.contains("q") || !j["p"].is_number_unsigned() ||
        !j["q"].is_number_unsigned())
      throw ParseError("reduce move needs nonnegative integers \"p\" and \"q\"");
    re.p = j["p"].get<std::size_t>();
    re.q = j["q"].get<std::size_t>();
    return re;
  }
  if (tag == "congruence") {
    if (!j.contains("matrix")) throw ParseError("congruence move needs a \"matrix\"");
    return CongruenceMove{int_mat_from_json(j["matrix"], "congruence matrix")};
  }
  throw ParseError("unknown move tag: " + tag);
}

Json chain_to_json(const MoveChain& chain, const std::string& start_name) {
  Json j = Json::object();
  Json start = Json::object();
  start["name"] = start_name;
  start["matrix"] = int_mat_to_json(chain.start.entries());
  j["start"] = std::move(start);
  Json moves = Json::array();
  for (const Move& m : chain.moves) moves.push_back(move_to_json(m));
  j["moves"] = std::move(moves);
  return j;
}

MoveChain chain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("moves"))
    throw ParseError("chain document needs \"start\" and \"moves\"");
  const Json& start = j["start"];
  if (!start.is_object() || !start.contains("matrix"))
    throw ParseError("chain start needs a \"matrix\"");
  MoveChain chain;
  chain.start = SeifertMatrix::validate(int_mat_from_json(start["matrix"], "start matrix"));
  if (!j["moves"].is_array()) throw ParseError("\"moves\" must be an array");
  for (const auto& m : j["moves"]) chain.moves.push_back(move_from_json(m));
  return chain;
}

MoveChain load_chain_document(const std::filesystem::path& path) {
  return chain_from_json(load_json_file(path));
}

Json invariant_report_to_json(const InvariantReport& r) {
  Json j = Json::object();
  j["alexander"] = to_string(r.alexander);
  j["det_at_minus_one"] = int_to_json(r.det_at_minus_one, "determinant");
  j["signature"] = r.signature;
  j["alexander_at_one"] = int_to_json(r.alexander_at_one, "alexander_at_one");
  return j;
}

Json isometry_to_json(const Isometry& iso) {
  const auto poly_mat = [](const PolyMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json j = Json::object();
  j["forward"] = poly_mat(iso.forward);
  if (iso.inverse) j["inverse"] = poly_mat(*iso.inverse);
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  switch (v.kind) {
    case Verdict::Kind::Isometric:
      j["verdict"] = "isometric";
      if (v.witness.chain) j["chain"] = chain_to_json(*v.witness.chain);
      if (v.witness.map) j["map"] = isometry_to_json(*v.witness.map);
      break;
    case Verdict::Kind::DistinctInvariant:
      j["verdict"] = "distinct_invariant";
      j["invariant"] = v.separating.invariant;
      j["left"] = v.separating.left;
      j["right"] = v.separating.right;
      break;
    case Verdict::Kind::Unknown:
      j["verdict"] = "unknown";
      j["candidates_tried"] = v.candidates_tried;
      break;
  }
  return j;
}

Json compare_report_to_json(const CompareReport& r) {
  Json j = Json::object();
  Json diffs = Json::array();
  for (const auto& d : r.invariant_diffs) {
    Json dj = Json::object();
    dj["invariant"] = d.invariant;
    dj["left"] = d.left;
    dj["right"] = d.right;
    diffs.push_back(std::move(dj));
  }
  j["invariant_diffs"] = std::move(diffs);
  j["verdict"] = verdict_to_json(r.pairing_verdict);
  return j;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::optional<Int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  return Int(s);
}

}  // namespace

IngestResult ingest_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "name,size,entries")
    throw ParseError("missing CSV header \"name,size,entries\"", 1, 1);
  IngestResult result;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto reject = [&](const std::string& name, const std::string& why) {
      result.rejected.push_back({lineno, name, why});
    };
    // name must not contain commas; the remaining fields are numeric.
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      reject(fields.empty() ? "" : fields[0], "expected 3 fields: name,size,entries");
      continue;
    }
    IngestRecord rec;
    rec.name = fields[0];
    const auto size = parse_int(fields[1]);
    if (!size || *size < 0) {
      reject(rec.name, "size is not a nonnegative integer");
      continue;
    }
    rec.size = size->convert_to<std::size_t>();
    bool bad_entry = false;
    if (!fields[2].empty()) {
      for (const auto& piece : split(fields[2], ';')) {
        const auto v = parse_int(piece);
        if (!v) {
          bad_entry = true;
          break;
        }
        rec.entries.push_back(*v);
      }
    }
    if (bad_entry) {
      reject(rec.name, "entries must be semicolon-separated integers");
      continue;
    }
    if (rec.entries.size() != rec.size * rec.size) {
      reject(rec.name, "entries length " + std::to_string(rec.entries.size()) +
                           " does not equal size^2 = " + std::to_string(rec.size * rec.size));
      continue;
    }
    IntMat m(rec.size, rec.size);
    for (std::size_t i = 0; i < rec.size; ++i)
      for (std::size_t j = 0; j < rec.size; ++j) m.at(i, j) = rec.entries[i * rec.size + j];
    try {
      SeifertMatrix::validate(m);
    } catch (const NotSeifertTypeError& e) {
      reject(rec.name, e.what());
      continue;
    }
    MatrixDocument doc;
    doc.name = rec.name;
    doc.matrix = std::move(m);
    result.accepted.push_back(std::move(doc));
  }
  return result;
}

IngestResult ingest_csv_file(const std::filesystem::path& path) {
  return ingest_csv(read_file(path));
}

std::string hash_hex(const std::string& bytes) {
  const std::uint64_t h = fnv1a64(bytes);
  static const char* digits = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xF];
  return out;
}

Json corpus_entry_to_json(const CorpusEntry& entry) {
  MatrixDocument doc;
  doc.name = entry.name;
  doc.matrix = entry.matrix.entries();
  doc.metadata["origin"] = chain_to_json(entry.origin);
  doc.metadata["invariants"] = invariant_report_to_json(entry.invariants);
  return matrix_document_to_json(doc);
}

namespace {

Json corpus_params_to_json(const CorpusParams& p) {
  Json j = Json::object();
  j["per_seed"] = p.per_seed;
  j["max_moves"] = p.max_moves;
  j["seed"] = p.seed;
  j["enlarge_weight"] = p.chain.enlarge_weight;
  j["reduce_weight"] = p.chain.reduce_weight;
  j["congruence_weight"] = p.chain.congruence_weight;
  j["v_bound"] = p.chain.v_bound;
  j["congruence_ops"] = p.chain.congruence_ops;
  j["congruence_coeff"] = p.chain.congruence_coeff;
  j["size_cap_slack"] = p.chain.size_cap_slack;
  return j;
}

CorpusParams corpus_params_from_json(const Json& j) {
  CorpusParams p;
  p.per_seed = j.at("per_seed").get<std::size_t>();
  p.max_moves = j.at("max_moves").get<std::size_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.chain.enlarge_weight = j.at("enlarge_weight").get<int>();
  p.chain.reduce_weight = j.at("reduce_weight").get<int>();
  p.chain.congruence_weight = j.at("congruence_weight").get<int>();
  p.chain.v_bound = j.at("v_bound").get<long>();
  p.chain.congruence_ops = j.at("congruence_ops").get<int>();
  p.chain.congruence_coeff = j.at("congruence_coeff").get<long>();
  p.chain.size_cap_slack = j.at("size_cap_slack").get<std::size_t>();
  return p;
}

std::string entry_file_name(const CorpusEntry& entry) { return entry.name + ".json"; }

}  // namespace

void write_corpus(const std::vector<CorpusEntry>& corpus, const CorpusParams& params,
                  const std::vector<NamedMatrix>& seeds, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "entries");
  Json manifest = Json::object();
  Json seed_list = Json::array();
  for (const auto& [name, mat] : seeds) {
    Json s = Json::object();
    s["name"] = name;
    s["matrix"] = int_mat_to_json(mat.entries());
    seed_list.push_back(std::move(s));
  }
  manifest["seeds"] = std::move(seed_list);
  manifest["params"] = corpus_params_to_json(params);
  Json entries = Json::array();
  for (const CorpusEntry& entry : corpus) {
    const std::string bytes = dump_document(corpus_entry_to_json(entry));
    const std::string file = entry_file_name(entry);
    write_file(dir / "entries" / file, bytes);
    Json e = Json::object();
    e["file"] = "entries/" + file;
    e["name"] = entry.name;
    e["hash"] = hash_hex(bytes);
    entries.push_back(std::move(e));
  }
  manifest["entries"] = std::move(entries);
  write_file(dir / "manifest.json", dump_document(manifest));
}

CorpusVerifyResult verify_corpus(const std::filesystem::path& dir) {
  CorpusVerifyResult result;
  const Json manifest = load_json_file(dir / "manifest.json");
  std::vector<NamedMatrix> seeds;
  for (const auto& s : manifest.at("seeds")) {
    seeds.emplace_back(s.at("name").get<std::string>(),
                       SeifertMatrix::validate(int_mat_from_json(s.at("matrix"), "seed matrix")));
  }
  const CorpusParams params = corpus_params_from_json(manifest.at("params"));
  const auto corpus = corpus_generate(seeds, params);
  const Json& listed = manifest.at("entries");
  if (listed.size() != corpus.size()) {
    result.mismatches.push_back("manifest lists " + std::to_string(listed.size()) +
                                " entries, regeneration produced " +
                                std::to_string(corpus.size()));
    return result;
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++result.checked;
    const std::string expect = dump_document(corpus_entry_to_json(corpus[i]));
    const std::string file = listed[i].at("file").get<std::string>();
    std::string actual;
    try {
      actual = read_file(dir / file);
    } catch (const std::exception& e) {
      result.mismatches.push_back(file + ": " + e.what());
      continue;
    }
    if (actual != expect) {
      result.mismatches.push_back(file + ": content differs from regeneration");
      continue;
    }
    if (hash_hex(actual) != listed[i].at("hash").get<std::string>())
      result.mismatches.push_back(file + ": manifest hash mismatch");
  }
  return result;
}

}  // namespace sequiv
