#include "sequiv/blanchfield.hpp"

#include <algorithm>

namespace sequiv {

namespace {

LaurentPoly t_minus_one() {
  LaurentPoly p;
  p.add_term(1, 1);
  p.add_term(0, -1);
  return p;
}

RatMat scale(const RatMat& m, const RatFun& s) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j) * s;
  return r;
}

PolyMat involute_mat(const PolyMat& m) {
  PolyMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = involute(m.at(i, j));
  return r;
}

bool mats_class_eq(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!class_eq(TorsionClass(a.at(i, j)), TorsionClass(b.at(i, j)))) return false;
  return true;
}

}  // namespace

BlanchfieldForm::BlanchfieldForm(const SeifertMatrix& a)
    : presentation_(presentation_matrix(a)) {
  presentation_inverse_ = inverse(presentation_);
  pairing_ = scale(presentation_inverse_, RatFun(t_minus_one()));

  // Defining identity: pairing * presentation = (t-1) * I, exactly.
  const RatMat prod = pairing_ * to_rat(presentation_);
  const std::size_t k = size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const RatFun expect = i == j ? RatFun(t_minus_one()) : RatFun();
      if (prod.at(i, j) != expect)
        throw InternalCheckError("pairing * presentation != (t-1) I");
    }

  // Hermitian mod Λ at the matrix level.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!class_eq(TorsionClass(pairing_.at(j, i)), TorsionClass(involute(pairing_.at(i, j)))))
        throw InternalCheckError("pairing is not hermitian mod the coefficient ring");
}

TorsionClass evaluate(const BlanchfieldForm& f, const std::vector<LaurentPoly>& v,
                      const std::vector<LaurentPoly>& w) {
  const std::size_t k = f.size();
  if (v.size() != k || w.size() != k)
    throw DimensionError("pairing arguments must have length equal to the form size");
  RatFun acc;
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i].is_zero()) continue;
    const RatFun vi{involute(v[i])};
    for (std::size_t j = 0; j < k; ++j) {
      if (w[j].is_zero()) continue;
      acc += vi * f.pairing().at(i, j) * RatFun(w[j]);
    }
  }
  return TorsionClass(acc);
}

bool hermitian_check(const BlanchfieldForm& f) {
  const std::size_t k = f.size();
  std::vector<LaurentPoly> ei(k), ej(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::fill(ei.begin(), ei.end(), LaurentPoly());
      std::fill(ej.begin(), ej.end(), LaurentPoly());
      ei[i] = LaurentPoly(1);
      ej[j] = LaurentPoly(1);
      const TorsionClass lhs = evaluate(f, ej, ei);
      const TorsionClass rhs = TorsionClass(involute(evaluate(f, ei, ej).rep()));
      if (!class_eq(lhs, rhs)) return false;
    }
  }
  return true;
}

RatMat transported_pairing(const BlanchfieldForm& tgt, const PolyMat& forward) {
  const RatMat f = to_rat(forward);
  const RatMat fbar_t = to_rat(involute_mat(forward).transposed());
  return fbar_t * tgt.pairing() * f;
}

bool isometry_respects(const BlanchfieldForm& src, const BlanchfieldForm& tgt,
                       const PolyMat& forward) {
  if (forward.rows() != tgt.size() || forward.cols() != src.size()) return false;
  return mats_class_eq(src.pairing(), transported_pairing(tgt, forward));
}

bool isometry_respects_exact(const BlanchfieldForm& src, const BlanchfieldForm& tgt,
                             const PolyMat& forward) {
  if (forward.rows() != tgt.size() || forward.cols() != src.size()) return false;
  return src.pairing() == transported_pairing(tgt, forward);
}

namespace {

PolyMat congruence_forward(const IntMat& p) { return to_poly(unimodular_inverse(p)); }

PolyMat enlargement_forward(std::size_t k, int kind, const std::vector<Int>& v) {
  // Relation columns of the enlarged presentation give, for kind 1,
  // t * e_{k+1} = sum v_i e_i and e_k = 0; for kind 2, e_{k+1} = t * sum
  // v_i e_i and e_k = 0 (0-based generator indices).
  PolyMat f(k, k + 2);
  for (std::size_t i = 0; i < k; ++i) f.at(i, i) = LaurentPoly(1);
  const int d = kind == 1 ? -1 : 1;
  for (std::size_t i = 0; i < k; ++i) f.at(i, k + 1) = LaurentPoly::monomial(v[i], d);
  return f;
}

// Section of the enlargement isometry: e_i -> e_i on surviving generators.
// Its composite with the forward map is the identity on those generators,
// hence it is the inverse module map; pairing-respect is re-verified
// directly wherever it is used.
PolyMat enlargement_section(std::size_t k) {
  PolyMat s(k + 2, k);
  for (std::size_t i = 0; i < k; ++i) s.at(i, i) = LaurentPoly(1);
  return s;
}

}  // namespace

Isometry congruence_isometry(const SeifertMatrix& a, const IntMat& p) {
  const SeifertMatrix moved = congruate(a, p);
  const BlanchfieldForm src(moved);
  const BlanchfieldForm tgt(a);
  Isometry iso{congruence_forward(p), to_poly(p)};
  if (!isometry_respects_exact(src, tgt, iso.forward))
    throw InternalCheckError("congruence isometry failed its exact Q(t) identity");
  if (!isometry_respects(tgt, src, *iso.inverse))
    throw InternalCheckError("congruence isometry inverse failed verification");
  return iso;
}

Isometry enlargement_isometry(const SeifertMatrix& a, int kind, const std::vector<Int>& v) {
  const SeifertMatrix big = enlarge(a, kind, v);
  const BlanchfieldForm src(big);
  const BlanchfieldForm tgt(a);
  Isometry iso{enlargement_forward(a.size(), kind, v), enlargement_section(a.size())};
  if (!isometry_respects(src, tgt, iso.forward))
    throw InternalCheckError("enlargement isometry failed verification");
  if (!isometry_respects(tgt, src, *iso.inverse))
    throw InternalCheckError("enlargement section failed verification");
  return iso;
}

Isometry chain_isometry(const MoveChain& c) {
  // Replay, keeping the matrix at every step.
  std::vector<SeifertMatrix> states{c.start};
  states.reserve(c.moves.size() + 1);
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    try {
      states.push_back(apply_move(states.back(), c.moves[i]));
    } catch (const std::exception& e) {
      throw ChainReplayError(i, e.what());
    }
  }
  std::vector<BlanchfieldForm> forms;
  forms.reserve(states.size());
  for (const auto& s : states) forms.emplace_back(s);

  // Per-move isometries form(states[i+1]) -> form(states[i]), composed into
  // one map from the final form to the starting form.
  PolyMat fwd = PolyMat::identity(c.start.size());
  PolyMat bwd = PolyMat::identity(c.start.size());
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    const SeifertMatrix& before = states[i];
    PolyMat step_f;
    PolyMat step_b;
    if (const auto* en = std::get_if<EnlargeMove>(&c.moves[i])) {
      step_f = enlargement_forward(before.size(), en->kind, en->v);
      step_b = enlargement_section(before.size());
    } else if (const auto* re = std::get_if<ReduceMove>(&c.moves[i])) {
      // before = Pi^-1 * enlarge(after, kind, v*) * Pi^-t for the site
      // permutation Pi; the map form(after) -> form(before) is the
      // enlargement section followed by the congruence isometry of Pi.
      const std::size_t k = before.size();
      const auto sigma = site_permutation(k, re->p, re->q);
      const IntMat pi = permutation_matrix(sigma);
      step_f = to_poly(unimodular_inverse(pi)) * enlargement_section(k - 2);
      std::vector<Int> vstar(k - 2);
      for (std::size_t j = 0; j + 2 < k; ++j)
        vstar[j] = re->kind == 1 ? before.entries().at(re->p, sigma[j])
                                 : before.entries().at(sigma[j], re->p);
      step_b = enlargement_forward(k - 2, re->kind, vstar) * to_poly(pi);
    } else {
      const auto& cg = std::get<CongruenceMove>(c.moves[i]);
      step_f = congruence_forward(cg.p);
      step_b = to_poly(cg.p);
    }
    if (!isometry_respects(forms[i + 1], forms[i], step_f))
      throw InternalCheckError("per-move isometry failed verification");
    fwd = fwd * step_f;
    bwd = step_b * bwd;
  }
  if (!isometry_respects(forms.back(), forms.front(), fwd))
    throw InternalCheckError("composite chain isometry failed verification");
  if (!isometry_respects(forms.front(), forms.back(), bwd))
    throw InternalCheckError("composite chain isometry inverse failed verification");
  return Isometry{std::move(fwd), std::move(bwd)};
}

Verdict Verdict::isometric_map(Isometry iso) {
  Verdict v;
  v.kind = Kind::Isometric;
  v.witness.map = std::move(iso);
  return v;
}

Verdict Verdict::isometric_chain(MoveChain chain) {
  Verdict v;
  v.kind = Kind::Isometric;
  v.witness.chain = std::move(chain);
  return v;
}

Verdict Verdict::distinct(InvariantDiff diff) {
  Verdict v;
  v.kind = Kind::DistinctInvariant;
  v.separating = std::move(diff);
  return v;
}

Verdict Verdict::unknown(std::uint64_t tried) {
  Verdict v;
  v.kind = Kind::Unknown;
  v.candidates_tried = tried;
  return v;
}

namespace {

// Columns of x must lie in the column span of the presentation over
// Z[t,t^-1]; since the presentation is invertible over Q(t) the unique
// solution of M y = x just has to be a Laurent matrix.
bool in_relation_span(const RatMat& pres_inv, const PolyMat& x) {
  const RatMat y = pres_inv * to_rat(x);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (!y.at(i, j).is_laurent()) return false;
  return true;
}

bool congruent_to_identity_mod(const RatMat& pres_inv, const PolyMat& m) {
  PolyMat shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= LaurentPoly(1);
  return in_relation_span(pres_inv, shifted);
}

// Monomial entry values in deterministic search order: 0, then increasing
// coefficient, sign + before -, then increasing |degree|, + before -.
std::vector<LaurentPoly> monomial_values(const IsometryBounds& b) {
  std::vector<LaurentPoly> vals;
  vals.emplace_back();
  for (long c = 1; c <= b.coeff; ++c)
    for (int s = 0; s < 2; ++s) {
      const Int coeff = s == 0 ? Int(c) : Int(-c);
      for (int d = 0; d <= b.deg; ++d) {
        vals.push_back(LaurentPoly::monomial(coeff, d));
        if (d > 0) vals.push_back(LaurentPoly::monomial(coeff, -d));
      }
    }
  return vals;
}

class MapEnumerator {
 public:
  MapEnumerator(std::size_t rows, std::size_t cols, std::size_t num_values)
      : num_values_(num_values), idx_(rows * cols, 0), level_(0) {}

  // Enumerates index vectors ordered by their maximum entry, then
  // lexicographically; each level revisits only vectors that use the new
  // value at least once. Returns false when exhausted. The empty matrix is
  // produced exactly once.
  bool next(std::vector<std::size_t>& out) {
    if (idx_.empty()) {
      if (empty_emitted_) return false;
      empty_emitted_ = true;
      out.clear();
      return true;
    }
    while (level_ < num_values_) {
      if (!started_) {
        started_ = true;
        if (level_ == 0) {
          out = idx_;  // all zeros
          return true;
        }
      }
      while (advance()) {
        if (uses_level()) {
          out = idx_;
          return true;
        }
      }
      ++level_;
      std::fill(idx_.begin(), idx_.end(), 0);
      started_ = false;
    }
    return false;
  }

 private:
  bool advance() {
    for (std::size_t pos = idx_.size(); pos-- > 0;) {
      if (idx_[pos] < level_) {
        ++idx_[pos];
        std::fill(idx_.begin() + static_cast<long>(pos) + 1, idx_.end(), 0);
        return true;
      }
    }
    return false;
  }

  bool uses_level() const {
    for (std::size_t v : idx_)
      if (v == level_) return true;
    return false;
  }

  std::size_t num_values_;
  std::vector<std::size_t> idx_;
  std::size_t level_;
  bool started_ = false;
  bool empty_emitted_ = false;
};

PolyMat build_map(const std::vector<std::size_t>& idx, std::size_t rows, std::size_t cols,
                  const std::vector<LaurentPoly>& values) {
  PolyMat f(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) f.at(i, j) = values[idx[i * cols + j]];
  return f;
}

}  // namespace

Verdict isometry_search(const SeifertMatrix& a, const SeifertMatrix& b,
                        const IsometryBounds& bounds) {
  auto diffs = invariant_diffs(a, b);
  if (!diffs.empty()) return Verdict::distinct(diffs.front());

  const BlanchfieldForm fa(a);
  const BlanchfieldForm fb(b);
  const std::size_t ka = a.size();
  const std::size_t kb = b.size();
  const auto values = monomial_values(bounds);
  std::uint64_t tried = 0;

  // Inverse candidates for a fixed forward map; shares the global budget.
  const auto find_inverse = [&](const PolyMat& f) -> std::optional<PolyMat> {
    MapEnumerator en(ka, kb, values.size());
    std::vector<std::size_t> idx;
    while (en.next(idx)) {
      if (++tried > bounds.candidates) return std::nullopt;
      const PolyMat g = build_map(idx, ka, kb, values);
      if (!in_relation_span(fa.presentation_inverse(), g * fb.presentation())) continue;
      if (!congruent_to_identity_mod(fa.presentation_inverse(), g * f)) continue;
      if (!congruent_to_identity_mod(fb.presentation_inverse(), f * g)) continue;
      if (!isometry_respects(fb, fa, g)) continue;
      return g;
    }
    return std::nullopt;
  };

  MapEnumerator en(kb, ka, values.size());
  std::vector<std::size_t> idx;
  while (en.next(idx)) {
    if (++tried > bounds.candidates) return Verdict::unknown(tried - 1);
    const PolyMat f = build_map(idx, kb, ka, values);
    if (!in_relation_span(fb.presentation_inverse(), f * fa.presentation())) continue;
    if (!isometry_respects(fa, fb, f)) continue;
    auto g = find_inverse(f);
    if (tried > bounds.candidates && !g) return Verdict::unknown(tried);
    if (g) return Verdict::isometric_map(Isometry{f, std::move(g)});
  }
  return Verdict::unknown(tried);
}

bool verify_verdict(const SeifertMatrix& a, const SeifertMatrix& b, const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::DistinctInvariant: {
      auto diffs = invariant_diffs(a, b);
      for (const auto& d : diffs)
        if (d == v.separating) return true;
      return false;
    }
    case Verdict::Kind::Unknown:
      return true;
    case Verdict::Kind::Isometric: {
      if (v.witness.chain) {
        try {
          if (!(apply_chain(*v.witness.chain) == b) || !(v.witness.chain->start == a))
            return false;
          chain_isometry(*v.witness.chain);
          return true;
        } catch (const std::exception&) {
          return false;
        }
      }
      if (!v.witness.map) return false;
      const BlanchfieldForm fa(a);
      const BlanchfieldForm fb(b);
      const PolyMat& f = v.witness.map->forward;
      if (!in_relation_span(fb.presentation_inverse(), f * fa.presentation())) return false;
      if (!isometry_respects(fa, fb, f)) return false;
      if (!v.witness.map->inverse) return false;
      const PolyMat& g = *v.witness.map->inverse;
      if (!in_relation_span(fa.presentation_inverse(), g * fb.presentation())) return false;
      if (!congruent_to_identity_mod(fa.presentation_inverse(), g * f)) return false;
      if (!congruent_to_identity_mod(fb.presentation_inverse(), f * g)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace sequiv
