#include "sequiv/cli.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "sequiv/documents.hpp"

namespace sequiv::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitInternal = 70;

std::string sanitize_filename(const std::string& name) {
  std::string out;
  for (char c : name)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out.empty() ? "unnamed" : out;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

std::vector<LaurentPoly> parse_vector(const std::string& text) {
  std::vector<LaurentPoly> v;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) v.push_back(parse_poly(cur));
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Options {
  std::string path;
  std::string path_b;
  std::string chain_path;
  std::string out_path;
  std::string verify_path;
  std::string corpus_path;
  std::string name;
  std::string vec_v;
  std::string vec_w;
  std::size_t genus = 1;
  long bound = 2;
  std::uint64_t seed = 1;
  std::uint64_t corpus_seed = CorpusParams{}.seed;
  std::size_t budget_depth = 5;
  std::size_t budget_nodes = 100000;
  long coeff_bound = 2;
  int deg_bound = 1;
  std::uint64_t candidates = 1000000;
  std::size_t per_seed = 100;
  std::size_t max_moves = 6;
};

int cmd_validate(const Options& opt, std::ostream& out) {
  const MatrixDocument doc = load_matrix_document(opt.path);
  Json j = Json::object();
  j["name"] = doc.name;
  j["size"] = doc.matrix.rows();
  j["genus"] = doc.matrix.rows() / 2;
  out << "name: " << doc.name << "\n";
  out << "size: " << doc.matrix.rows() << "\n";
  try {
    SeifertMatrix::validate(doc.matrix);
  } catch (const NotSeifertTypeError& e) {
    out << "Seifert type: no (det(A - A^t) = " << e.det().str() << ")\n";
    j["seifert_type"] = false;
    j["det_skew"] = e.det().str();
    emit_json(out, j);
    return kExitDomain;
  }
  out << "genus: " << doc.matrix.rows() / 2 << "\n";
  out << "Seifert type: yes\n";
  j["seifert_type"] = true;
  emit_json(out, j);
  return kExitOk;
}

int cmd_invariants(const Options& opt, std::ostream& out) {
  const MatrixDocument doc = load_matrix_document(opt.path);
  const SeifertMatrix a = SeifertMatrix::validate(doc.matrix);
  const InvariantReport rep = invariant_report(a);
  out << "name: " << doc.name << "\n";
  out << "size: " << a.size() << "\n";
  out << "genus: " << a.genus() << "\n";
  out << "alexander: " << to_string(rep.alexander) << "\n";
  out << "det_at_minus_one: " << rep.det_at_minus_one.str() << "\n";
  out << "signature: " << rep.signature << "\n";
  out << "alexander_at_one: " << rep.alexander_at_one.str() << "\n";
  Json j = Json::object();
  j["name"] = doc.name;
  j["size"] = a.size();
  j["genus"] = a.genus();
  j["invariants"] = invariant_report_to_json(rep);
  emit_json(out, j);
  return kExitOk;
}

int cmd_blanchfield(const Options& opt, std::ostream& out) {
  const MatrixDocument doc = load_matrix_document(opt.path);
  const SeifertMatrix a = SeifertMatrix::validate(doc.matrix);
  const BlanchfieldForm form(a);
  out << "name: " << doc.name << "\n";
  out << "size: " << form.size() << "\n";
  Json j = Json::object();
  j["name"] = doc.name;
  j["size"] = form.size();
  Json rows = Json::array();
  for (std::size_t i = 0; i < form.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < form.size(); ++k) {
      out << "pairing[" << i << "][" << k << "]: " << to_string(form.pairing().at(i, k))
          << " mod Λ\n";
      row.push_back(to_string(form.pairing().at(i, k)));
    }
    rows.push_back(std::move(row));
  }
  j["pairing"] = std::move(rows);
  const bool herm = hermitian_check(form);
  out << "hermitian mod Λ: " << (herm ? "yes" : "no") << "\n";
  j["hermitian"] = herm;
  if (!opt.vec_v.empty() || !opt.vec_w.empty()) {
    const auto v = parse_vector(opt.vec_v);
    const auto w = parse_vector(opt.vec_w);
    const TorsionClass cls = evaluate(form, v, w);
    out << "pairing(v, w): " << to_string(cls) << " mod Λ\n";
    j["value"] = to_string(cls);
  }
  emit_json(out, j);
  return kExitOk;
}

int cmd_moves(const Options& opt, std::ostream& out) {
  const MatrixDocument doc = load_matrix_document(opt.path);
  const SeifertMatrix start = SeifertMatrix::validate(doc.matrix);
  MoveChain chain = load_chain_document(opt.chain_path);
  if (!(chain.start == start))
    throw std::domain_error("chain document start does not match the input matrix");
  const SeifertMatrix result = apply_chain(chain);
  const Isometry iso = chain_isometry(chain);
  MatrixDocument result_doc;
  result_doc.name = doc.name.empty() ? "result" : doc.name + "_moved";
  result_doc.matrix = result.entries();
  if (!opt.out_path.empty()) {
    save_matrix_document(result_doc, opt.out_path);
    out << "wrote: " << opt.out_path << "\n";
  }
  out << "moves applied: " << chain.moves.size() << "\n";
  out << "result size: " << result.size() << "\n";
  out << "isometry verified: yes (" << result.size() * result.size()
      << " basis pairs mod Λ)\n";
  Json j = Json::object();
  j["moves_applied"] = chain.moves.size();
  j["result"] = matrix_document_to_json(result_doc);
  j["isometry"] = isometry_to_json(iso);
  j["isometry_verified"] = true;
  emit_json(out, j);
  return kExitOk;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  const MatrixDocument da = load_matrix_document(opt.path);
  const MatrixDocument db = load_matrix_document(opt.path_b);
  const SeifertMatrix a = SeifertMatrix::validate(da.matrix);
  const SeifertMatrix b = SeifertMatrix::validate(db.matrix);
  CompareBudget budget;
  budget.search.depth = opt.budget_depth;
  budget.search.nodes = opt.budget_nodes;
  budget.isometry.coeff = opt.coeff_bound;
  budget.isometry.deg = opt.deg_bound;
  budget.isometry.candidates = opt.candidates;
  const CompareReport rep = compare(a, b, budget);
  for (const auto& d : rep.invariant_diffs)
    out << "invariant differs: " << d.invariant << ": " << d.left << " vs " << d.right << "\n";
  int code = kExitUnknown;
  switch (rep.pairing_verdict.kind) {
    case Verdict::Kind::Isometric:
      out << "verdict: isometric";
      if (rep.chain_witness)
        out << " (chain witness, " << rep.chain_witness->moves.size() << " moves)";
      else
        out << " (generator map witness)";
      out << "\n";
      code = kExitOk;
      break;
    case Verdict::Kind::DistinctInvariant:
      out << "verdict: distinct invariant (" << rep.pairing_verdict.separating.invariant << ")\n";
      code = kExitDistinct;
      break;
    case Verdict::Kind::Unknown:
      out << "verdict: unknown (budget exhausted after "
          << rep.pairing_verdict.candidates_tried << " candidates)\n";
      code = kExitUnknown;
      break;
  }
  emit_json(out, compare_report_to_json(rep));
  return code;
}

int cmd_random(const Options& opt, std::ostream& out) {
  const SeifertMatrix a = random_seifert(opt.genus, opt.bound, opt.seed);
  MatrixDocument doc;
  doc.name = !opt.name.empty()
                 ? opt.name
                 : "random_g" + std::to_string(opt.genus) + "_s" + std::to_string(opt.seed);
  doc.matrix = a.entries();
  if (!opt.out_path.empty()) {
    save_matrix_document(doc, opt.out_path);
    out << "wrote: " << opt.out_path << "\n";
  }
  emit_json(out, matrix_document_to_json(doc));
  return kExitOk;
}

int cmd_corpus(const Options& opt, std::ostream& out) {
  if (!opt.verify_path.empty()) {
    const CorpusVerifyResult res = verify_corpus(opt.verify_path);
    out << "entries checked: " << res.checked << "\n";
    for (const auto& m : res.mismatches) out << "mismatch: " << m << "\n";
    out << "corpus verified: " << (res.ok() ? "yes" : "no") << "\n";
    Json j = Json::object();
    j["checked"] = res.checked;
    j["mismatches"] = res.mismatches;
    j["ok"] = res.ok();
    emit_json(out, j);
    return res.ok() ? kExitOk : kExitDomain;
  }
  CorpusParams params;
  params.per_seed = opt.per_seed;
  params.max_moves = opt.max_moves;
  params.seed = opt.corpus_seed;
  const auto seeds = default_seeds();
  const auto corpus = corpus_generate(seeds, params);
  write_corpus(corpus, params, seeds, opt.out_path);
  out << "wrote " << corpus.size() << " entries to " << opt.out_path << "\n";
  Json j = Json::object();
  j["entries"] = corpus.size();
  j["dir"] = opt.out_path;
  emit_json(out, j);
  return kExitOk;
}

int cmd_ingest(const Options& opt, std::ostream& out) {
  const IngestResult res = ingest_csv_file(opt.path);
  out << "accepted: " << res.accepted.size() << "\n";
  out << "rejected: " << res.rejected.size() << "\n";
  for (const auto& r : res.rejected)
    out << "rejected line " << r.line << " (" << r.name << "): " << r.reason << "\n";
  if (!opt.out_path.empty()) {
    std::filesystem::create_directories(opt.out_path);
    for (const auto& doc : res.accepted) {
      const auto file =
          std::filesystem::path(opt.out_path) / (sanitize_filename(doc.name) + ".json");
      save_matrix_document(doc, file);
    }
    out << "wrote " << res.accepted.size() << " documents to " << opt.out_path << "\n";
  }
  Json j = Json::object();
  j["accepted"] = Json::array();
  for (const auto& doc : res.accepted) j["accepted"].push_back(matrix_document_to_json(doc));
  j["rejected"] = Json::array();
  for (const auto& r : res.rejected) {
    Json rr = Json::object();
    rr["line"] = r.line;
    rr["name"] = r.name;
    rr["reason"] = r.reason;
    j["rejected"].push_back(std::move(rr));
  }
  emit_json(out, j);
  return kExitOk;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  bool all_ok = true;
  const auto group = [&](const std::string& name, std::function<std::pair<bool, std::string>()> fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [ok, detail] = fn();
    out << (ok ? "PASS" : "FAIL") << " " << name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << " [" << seconds_since(t0) << " s]\n";
    if (!ok) all_ok = false;
  };

  CorpusParams params;
  std::vector<NamedMatrix> seeds = default_seeds();
  std::vector<CorpusEntry> corpus;

  if (!opt.corpus_path.empty()) {
    group("corpus files match regeneration", [&]() -> std::pair<bool, std::string> {
      const auto res = verify_corpus(opt.corpus_path);
      return {res.ok(), std::to_string(res.checked) + " entries"};
    });
    const Json manifest = load_json_file(std::filesystem::path(opt.corpus_path) / "manifest.json");
    params.per_seed = manifest.at("params").at("per_seed").get<std::size_t>();
    params.max_moves = manifest.at("params").at("max_moves").get<std::size_t>();
    params.seed = manifest.at("params").at("seed").get<std::uint64_t>();
  }
  corpus = corpus_generate(seeds, params);

  group("corpus regeneration is deterministic", [&]() -> std::pair<bool, std::string> {
    const auto again = corpus_generate(seeds, params);
    if (again.size() != corpus.size()) return {false, "entry count differs"};
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (corpus_entry_to_json(again[i]) != corpus_entry_to_json(corpus[i]))
        return {false, corpus[i].name + " differs"};
    return {true, std::to_string(corpus.size()) + " entries"};
  });

  group("chains replay and invariants are move-invariant", [&]() -> std::pair<bool, std::string> {
    std::size_t n = 0;
    for (const auto& entry : corpus) {
      if (!(apply_chain(entry.origin) == entry.matrix)) return {false, entry.name + " replay"};
      if (!(invariant_report(entry.matrix) == entry.invariants))
        return {false, entry.name + " invariants"};
      if (!(invariant_report(entry.origin.start) == entry.invariants))
        return {false, entry.name + " move invariance"};
      ++n;
    }
    return {true, std::to_string(n) + " entries"};
  });

  group("pairings are hermitian with exact defining identity",
        [&]() -> std::pair<bool, std::string> {
          std::size_t n = 0;
          for (const auto& entry : corpus) {
            if (entry.matrix.size() > 6 || n >= 60) continue;
            const BlanchfieldForm form(entry.matrix);  // construction checks the identity
            if (!hermitian_check(form)) return {false, entry.name};
            ++n;
          }
          return {true, std::to_string(n) + " forms"};
        });

  group("chain isometries verify", [&]() -> std::pair<bool, std::string> {
    std::size_t n = 0;
    for (const auto& entry : corpus) {
      if (n >= 12 || entry.matrix.size() > 6 || entry.origin.moves.empty()) continue;
      try {
        chain_isometry(entry.origin);
      } catch (const std::exception& e) {
        return {false, entry.name + ": " + e.what()};
      }
      ++n;
    }
    return {true, std::to_string(n) + " chains"};
  });

  out << "selftest: " << (all_ok ? "ok" : "FAILED") << "\n";
  return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Seifert matrix toolkit: S-equivalence moves, Alexander-module "
               "invariants, and Blanchfield pairings over Q(Λ)/Λ"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check the Seifert-type condition det(A - A^t) = 1");
  validate->add_option("path", opt.path, "matrix document (JSON)")->required();
  validate->callback([&] { action = [&] { return cmd_validate(opt, out); }; });

  auto* invariants = app.add_subcommand("invariants", "Alexander polynomial, determinant, signature");
  invariants->add_option("path", opt.path, "matrix document (JSON)")->required();
  invariants->callback([&] { action = [&] { return cmd_invariants(opt, out); }; });

  auto* blanchfield = app.add_subcommand("blanchfield", "Blanchfield pairing matrix and evaluations");
  blanchfield->add_option("path", opt.path, "matrix document (JSON)")->required();
  auto* vopt = blanchfield->add_option("--v", opt.vec_v, "comma-separated Laurent polynomials");
  auto* wopt = blanchfield->add_option("--w", opt.vec_w, "comma-separated Laurent polynomials");
  vopt->needs(wopt);
  wopt->needs(vopt);
  blanchfield->callback([&] { action = [&] { return cmd_blanchfield(opt, out); }; });

  auto* moves = app.add_subcommand("moves", "Replay a move chain and verify its isometry");
  moves->add_option("path", opt.path, "start matrix document")->required();
  moves->add_option("chain", opt.chain_path, "chain document (JSON)")->required();
  moves->add_option("--out", opt.out_path, "write the resulting matrix document here");
  moves->callback([&] { action = [&] { return cmd_moves(opt, out); }; });

  auto* cmp = app.add_subcommand("compare", "Compare two Seifert matrices");
  cmp->add_option("path_a", opt.path, "first matrix document")->required();
  cmp->add_option("path_b", opt.path_b, "second matrix document")->required();
  cmp->add_option("--budget-depth", opt.budget_depth, "chain search depth per direction");
  cmp->add_option("--budget-nodes", opt.budget_nodes, "chain search node budget");
  cmp->add_option("--coeff-bound", opt.coeff_bound, "isometry search coefficient bound");
  cmp->add_option("--deg-bound", opt.deg_bound, "isometry search degree bound");
  cmp->add_option("--candidates", opt.candidates, "isometry search candidate budget");
  cmp->callback([&] { action = [&] { return cmd_compare(opt, out); }; });

  auto* random = app.add_subcommand("random", "Generate a random Seifert-type matrix");
  random->add_option("--genus", opt.genus, "genus (size = 2 * genus)");
  random->add_option("--bound", opt.bound, "coefficient bound");
  random->add_option("--seed", opt.seed, "RNG seed");
  random->add_option("--name", opt.name, "document name");
  random->add_option("--out", opt.out_path, "write the matrix document here");
  random->callback([&] { action = [&] { return cmd_random(opt, out); }; });

  auto* corpus = app.add_subcommand("corpus", "Generate or verify the deterministic corpus");
  auto* oopt = corpus->add_option("--out", opt.out_path, "write the corpus to this directory");
  auto* vfy = corpus->add_option("--verify", opt.verify_path, "verify a corpus directory");
  oopt->excludes(vfy);
  corpus->add_option("--per-seed", opt.per_seed, "entries per seed matrix");
  corpus->add_option("--max-moves", opt.max_moves, "maximum moves per origin chain");
  corpus->add_option("--seed", opt.corpus_seed, "corpus seed");
  corpus->callback([&] {
    action = [&] {
      if (opt.out_path.empty() && opt.verify_path.empty())
        throw CLI::ValidationError("corpus", "either --out or --verify is required");
      return cmd_corpus(opt, out);
    };
  });

  auto* ingest = app.add_subcommand("ingest", "Read a knot-table CSV (name,size,entries)");
  ingest->add_option("path", opt.path, "CSV file")->required();
  ingest->add_option("--out", opt.out_path, "write accepted matrix documents here");
  ingest->callback([&] { action = [&] { return cmd_ingest(opt, out); }; });

  auto* selftest = app.add_subcommand("selftest", "Run the invariance/isometry property suite");
  selftest->add_option("--corpus", opt.corpus_path, "corpus directory to verify and use");
  selftest->callback([&] { action = [&] { return cmd_selftest(opt, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    return action ? action() : kExitParse;
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " (line " << e.line() << ", column " << e.column() << ")";
    err << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const InternalCheckError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NotSeifertTypeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ChainReplayError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace sequiv::cli
