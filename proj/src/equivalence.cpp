#include "sequiv/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace sequiv {

MoveChain random_chain(const SeifertMatrix& a, std::size_t n, const ChainParams& params,
                       std::uint64_t seed) {
  Rng rng(seed);
  MoveChain chain{a, {}};
  SeifertMatrix cur = a;
  const std::size_t cap = a.size() + params.size_cap_slack;
  for (std::size_t step = 0; step < n; ++step) {
    const auto reductions = find_reductions(cur);
    const int we = cur.size() + 2 <= cap ? params.enlarge_weight : 0;
    const int wr = reductions.empty() ? 0 : params.reduce_weight;
    const int wc = params.congruence_weight;
    Move mv;
    switch (rng.weighted({we, wr, wc})) {
      case 0: {
        EnlargeMove em;
        em.kind = 1 + static_cast<int>(rng.index(2));
        em.v.resize(cur.size());
        for (auto& x : em.v) x = Int(rng.uniform(-params.v_bound, params.v_bound));
        mv = std::move(em);
        break;
      }
      case 1:
        mv = reductions[rng.index(reductions.size())];
        break;
      default:
        mv = CongruenceMove{
            random_unimodular(cur.size(), params.congruence_ops, params.congruence_coeff, rng)};
    }
    cur = apply_move(cur, mv);
    chain.moves.push_back(std::move(mv));
  }
  return chain;
}

namespace {

std::string matrix_key(const IntMat& m) {
  std::string s = std::to_string(m.rows());
  s += ':';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += m.at(i, j).str();
      s += ',';
    }
  return s;
}

std::vector<Int> entry_sequence(const IntMat& m, const std::vector<std::size_t>& sigma) {
  std::vector<Int> seq;
  seq.reserve(m.rows() * m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) seq.push_back(m.at(sigma[i], sigma[j]));
  return seq;
}

std::string sequence_key(std::size_t k, const std::vector<Int>& seq) {
  std::string s = std::to_string(k);
  s += ':';
  for (const Int& v : seq) {
    s += v.str();
    s += ',';
  }
  return s;
}

}  // namespace

std::pair<std::string, std::vector<std::size_t>> permutation_canonical(const IntMat& m) {
  const std::size_t k = m.rows();
  std::vector<std::size_t> ident(k);
  std::iota(ident.begin(), ident.end(), std::size_t{0});
  if (k > 8) return {matrix_key(m), ident};
  std::vector<std::size_t> best = ident;
  std::vector<Int> best_seq = entry_sequence(m, ident);
  std::vector<std::size_t> sigma = ident;
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    int rel = 0;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k && rel == 0; ++i)
      for (std::size_t j = 0; j < k; ++j, ++idx) {
        const Int& v = m.at(sigma[i], sigma[j]);
        if (v < best_seq[idx]) {
          rel = -1;
          break;
        }
        if (v > best_seq[idx]) {
          rel = 1;
          break;
        }
      }
    if (rel < 0) {
      best = sigma;
      best_seq = entry_sequence(m, sigma);
    }
  }
  return {sequence_key(k, best_seq), best};
}

namespace {

// Moves explored by the bidirectional search: every reduction, single
// elementary congruences (transvections and sign flips; permutations are
// free through node canonicalization), and enlargements with a vector bound
// shrunk until the per-node fanout stays tractable.
std::vector<Move> search_moves(const SeifertMatrix& cur, const ChainParams& params,
                               std::size_t size_cap) {
  std::vector<Move> out;
  for (const auto& r : find_reductions(cur)) out.push_back(r);
  const std::size_t k = cur.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      for (long c = 1; c <= params.congruence_coeff; ++c)
        for (int s = 0; s < 2; ++s) {
          IntMat p = IntMat::identity(k);
          p.at(i, j) = s == 0 ? Int(c) : Int(-c);
          out.push_back(CongruenceMove{std::move(p)});
        }
    }
  for (std::size_t i = 0; i < k; ++i) {
    IntMat p = IntMat::identity(k);
    p.at(i, i) = -1;
    out.push_back(CongruenceMove{std::move(p)});
  }
  if (k + 2 <= size_cap) {
    long bv = params.v_bound;
    const auto fanout = [&](long b) {
      double f = 1;
      for (std::size_t idx = 0; idx < k; ++idx) f *= static_cast<double>(2 * b + 1);
      return f;
    };
    while (bv > 0 && fanout(bv) > 4096) --bv;
    for (int kind = 1; kind <= 2; ++kind) {
      std::vector<Int> v(k, Int(-bv));
      while (true) {
        out.push_back(EnlargeMove{kind, v});
        std::size_t pos = k;
        while (pos-- > 0) {
          if (v[pos] < bv) {
            v[pos] += 1;
            for (std::size_t r = pos + 1; r < k; ++r) v[r] = Int(-bv);
            break;
          }
          if (pos == 0) {
            pos = k + 1;
            break;
          }
        }
        if (pos == k + 1 || k == 0) break;
      }
    }
  }
  return out;
}

MoveChain invert_chain(const MoveChain& c) {
  std::vector<SeifertMatrix> states{c.start};
  for (const auto& m : c.moves) states.push_back(apply_move(states.back(), m));
  MoveChain inv{states.back(), {}};
  for (std::size_t i = c.moves.size(); i-- > 0;) {
    const SeifertMatrix& before = states[i];
    if (const auto* en = std::get_if<EnlargeMove>(&c.moves[i])) {
      inv.moves.push_back(ReduceMove{en->kind, before.size(), before.size() + 1});
    } else if (const auto* re = std::get_if<ReduceMove>(&c.moves[i])) {
      const std::size_t k = before.size();
      const auto sigma = site_permutation(k, re->p, re->q);
      std::vector<Int> vstar(k - 2);
      for (std::size_t j = 0; j + 2 < k; ++j)
        vstar[j] = re->kind == 1 ? before.entries().at(re->p, sigma[j])
                                 : before.entries().at(sigma[j], re->p);
      inv.moves.push_back(EnlargeMove{re->kind, std::move(vstar)});
      inv.moves.push_back(CongruenceMove{unimodular_inverse(permutation_matrix(sigma))});
    } else {
      const auto& cg = std::get<CongruenceMove>(c.moves[i]);
      inv.moves.push_back(CongruenceMove{unimodular_inverse(cg.p)});
    }
  }
  return inv;
}

// Fuses adjacent congruences and drops identity congruences; keeps replay
// semantics intact.
void tidy_chain(MoveChain& c) {
  std::vector<Move> out;
  for (auto& m : c.moves) {
    if (auto* cg = std::get_if<CongruenceMove>(&m)) {
      if (cg->p == IntMat::identity(cg->p.rows())) continue;
      if (!out.empty()) {
        if (auto* prev = std::get_if<CongruenceMove>(&out.back())) {
          prev->p = cg->p * prev->p;
          if (prev->p == IntMat::identity(prev->p.rows())) out.pop_back();
          continue;
        }
      }
    }
    out.push_back(std::move(m));
  }
  c.moves = std::move(out);
}

struct BfsNode {
  SeifertMatrix mat;
  std::vector<Move> path;
  std::vector<std::size_t> canon_perm;
};

}  // namespace

std::optional<MoveChain> chain_search(const SeifertMatrix& a, const SeifertMatrix& b,
                                      const SearchBudget& budget) {
  const ChainParams params;  // enumeration bounds for generated moves
  const std::size_t cap = std::max(a.size(), b.size()) + params.size_cap_slack;

  struct Side {
    std::map<std::string, BfsNode> seen;
    std::vector<std::string> frontier;
    std::size_t depth = 0;
  };
  Side fwd;
  Side bwd;

  const auto finish = [&](const BfsNode& from_a, const BfsNode& from_b) -> MoveChain {
    // canon(X) == canon(Y): with Pi_x, Pi_y the minimizing permutations,
    // Y = Q X Q^t for Q = Pi_y^-1 Pi_x.
    const IntMat px = permutation_matrix(from_a.canon_perm);
    const IntMat py = permutation_matrix(from_b.canon_perm);
    const IntMat q = unimodular_inverse(py) * px;
    MoveChain chain{a, from_a.path};
    if (!(q == IntMat::identity(q.rows()))) chain.moves.push_back(CongruenceMove{q});
    const MoveChain back{b, from_b.path};
    for (auto& m : invert_chain(back).moves) chain.moves.push_back(std::move(m));
    tidy_chain(chain);
    if (!(apply_chain(chain) == b))
      throw InternalCheckError("bidirectional search produced a chain that does not replay");
    return chain;
  };

  {
    auto [ka, pa] = permutation_canonical(a.entries());
    auto [kb_, pb] = permutation_canonical(b.entries());
    fwd.seen.emplace(ka, BfsNode{a, {}, pa});
    bwd.seen.emplace(kb_, BfsNode{b, {}, pb});
    fwd.frontier.push_back(ka);
    bwd.frontier.push_back(kb_);
    if (ka == kb_) return finish(fwd.seen.at(ka), bwd.seen.at(kb_));
  }

  std::size_t expanded = 0;
  while (!fwd.frontier.empty() || !bwd.frontier.empty()) {
    Side* side = nullptr;
    Side* other = nullptr;
    const bool fwd_ok = !fwd.frontier.empty() && fwd.depth < budget.depth;
    const bool bwd_ok = !bwd.frontier.empty() && bwd.depth < budget.depth;
    if (!fwd_ok && !bwd_ok) break;
    if (fwd_ok && (!bwd_ok || fwd.frontier.size() <= bwd.frontier.size())) {
      side = &fwd;
      other = &bwd;
    } else {
      side = &bwd;
      other = &fwd;
    }

    std::vector<std::string> next_frontier;
    for (const std::string& key : side->frontier) {
      if (++expanded > budget.nodes) return std::nullopt;
      const BfsNode node = side->seen.at(key);
      for (const Move& mv : search_moves(node.mat, params, cap)) {
        SeifertMatrix next = apply_move(node.mat, mv);
        auto [nkey, nperm] = permutation_canonical(next.entries());
        if (side->seen.count(nkey)) continue;
        BfsNode nn{std::move(next), node.path, std::move(nperm)};
        nn.path.push_back(mv);
        auto [it, _] = side->seen.emplace(nkey, std::move(nn));
        next_frontier.push_back(nkey);
        const auto hit = other->seen.find(nkey);
        if (hit != other->seen.end()) {
          return side == &fwd ? finish(it->second, hit->second)
                              : finish(hit->second, it->second);
        }
      }
    }
    side->frontier = std::move(next_frontier);
    side->depth += 1;
  }
  return std::nullopt;
}

CompareReport compare(const SeifertMatrix& a, const SeifertMatrix& b,
                      const CompareBudget& budget) {
  CompareReport rep;
  rep.invariant_diffs = invariant_diffs(a, b);
  if (!rep.invariant_diffs.empty()) {
    rep.pairing_verdict = Verdict::distinct(rep.invariant_diffs.front());
    return rep;
  }
  if (auto chain = chain_search(a, b, budget.search)) {
    // Forward direction of the pairing theorem, machine-checked per witness.
    chain_isometry(*chain);
    rep.chain_witness = *chain;
    rep.pairing_verdict = Verdict::isometric_chain(std::move(*chain));
    return rep;
  }
  rep.pairing_verdict = isometry_search(a, b, budget.isometry);
  return rep;
}

std::vector<NamedMatrix> default_seeds() {
  IntMat tre(2, 2);
  tre.at(0, 0) = -1;
  tre.at(0, 1) = 1;
  tre.at(1, 1) = -1;
  IntMat fe(2, 2);
  fe.at(0, 0) = 1;
  fe.at(0, 1) = 1;
  fe.at(1, 1) = -1;
  return {
      {"unknot", SeifertMatrix::unknot()},
      {"trefoil", SeifertMatrix::validate(std::move(tre))},
      {"figure-eight", SeifertMatrix::validate(std::move(fe))},
  };
}

std::vector<CorpusEntry> corpus_generate(const std::vector<NamedMatrix>& seeds,
                                         const CorpusParams& params) {
  std::vector<CorpusEntry> out;
  for (const auto& [name, mat] : seeds) {
    for (std::size_t i = 0; i < params.per_seed; ++i) {
      const std::uint64_t entry_seed =
          fnv1a64(name + "#" + std::to_string(i) + "@" + std::to_string(params.seed));
      Rng er(entry_seed);
      const std::size_t n =
          static_cast<std::size_t>(er.uniform(0, static_cast<long>(params.max_moves)));
      const std::uint64_t chain_seed = er.next_u64();
      CorpusEntry entry;
      entry.origin = random_chain(mat, n, params.chain, chain_seed);
      entry.matrix = apply_chain(entry.origin);
      entry.invariants = invariant_report(entry.matrix);
      std::string idx = std::to_string(i);
      while (idx.size() < 3) idx.insert(idx.begin(), '0');
      entry.name = name + "_" + idx;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace sequiv
