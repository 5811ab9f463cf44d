#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sequiv/documents.hpp"

namespace py = pybind11;
using namespace sequiv;

namespace pybind11::detail {

// cpp_int <-> Python int, through decimal strings; exactness over speed.
template <>
struct type_caster<Int> {
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Int(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<Int>>;

IntMat rows_to_mat(const Rows& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw DimensionError("matrix rows must form a square matrix");
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Rows mat_to_rows(const IntMat& m) {
  Rows rows(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

std::vector<std::vector<LaurentPoly>> poly_mat_to_rows(const PolyMat& m) {
  std::vector<std::vector<LaurentPoly>> rows(m.rows(), std::vector<LaurentPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

std::vector<std::vector<RatFun>> rat_mat_to_rows(const RatMat& m) {
  std::vector<std::vector<RatFun>> rows(m.rows(), std::vector<RatFun>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

ChainParams chain_params(int enlarge_weight, int reduce_weight, int congruence_weight,
                         long v_bound, int congruence_ops, long congruence_coeff,
                         std::size_t size_cap_slack) {
  ChainParams p;
  p.enlarge_weight = enlarge_weight;
  p.reduce_weight = reduce_weight;
  p.congruence_weight = congruence_weight;
  p.v_bound = v_bound;
  p.congruence_ops = congruence_ops;
  p.congruence_coeff = congruence_coeff;
  p.size_cap_slack = size_cap_slack;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Seifert matrix toolkit: S-equivalence moves, Alexander-module "
            "invariants, and Blanchfield pairings";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "DocumentParseError", PyExc_ValueError);
  py::register_exception<NotSeifertTypeError>(m, "NotSeifertTypeError", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def(py::init<Int>())
      .def_static("monomial", &LaurentPoly::monomial, py::arg("coeff"), py::arg("exp"))
      .def_static("parse", &parse_poly)
      .def("terms", &LaurentPoly::terms)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("min_exp", &LaurentPoly::min_exp)
      .def("max_exp", &LaurentPoly::max_exp)
      .def("at_one", &LaurentPoly::at_one)
      .def("at_minus_one", &LaurentPoly::at_minus_one)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const LaurentPoly& p) { return to_string(p); })
      .def("__repr__",
           [](const LaurentPoly& p) { return "LaurentPoly('" + to_string(p) + "')"; });

  m.def("involute", py::overload_cast<const LaurentPoly&>(&involute));
  m.def("divide_exact", &divide_exact, py::arg("f"), py::arg("g"));
  m.def("normalize_unit", [](const LaurentPoly& p) {
    const auto r = normalize_unit(p);
    return py::make_tuple(r.poly, r.unit);
  });

  py::class_<RatFun>(m, "RatFun")
      .def(py::init<>())
      .def(py::init<LaurentPoly>())
      .def(py::init<const LaurentPoly&, const LaurentPoly&>(), py::arg("num"), py::arg("den"))
      .def("num", &RatFun::num)
      .def("den", &RatFun::den)
      .def("is_zero", &RatFun::is_zero)
      .def("is_laurent", &RatFun::is_laurent)
      .def("as_laurent", &RatFun::as_laurent)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const RatFun& r) { return to_string(r); })
      .def("__repr__", [](const RatFun& r) { return "RatFun('" + to_string(r) + "')"; });

  m.def("involute_rat", py::overload_cast<const RatFun&>(&involute));

  py::class_<TorsionClass>(m, "TorsionClass")
      .def(py::init<>())
      .def(py::init<RatFun>())
      .def("rep", &TorsionClass::rep)
      .def("is_zero_class", &TorsionClass::is_zero_class)
      .def("__eq__", [](const TorsionClass& a, const TorsionClass& b) { return class_eq(a, b); })
      .def("__str__", [](const TorsionClass& c) { return to_string(c); });

  m.def("class_eq", &class_eq);

  py::class_<SeifertMatrix>(m, "SeifertMatrix")
      .def(py::init<>())
      .def_static("validate", [](const Rows& rows) { return SeifertMatrix::validate(rows_to_mat(rows)); })
      .def_static("unknot", &SeifertMatrix::unknot)
      .def("rows", [](const SeifertMatrix& a) { return mat_to_rows(a.entries()); })
      .def("size", &SeifertMatrix::size)
      .def("genus", &SeifertMatrix::genus)
      .def(py::self == py::self)
      .def("__repr__", [](const SeifertMatrix& a) {
        return "SeifertMatrix(size=" + std::to_string(a.size()) + ")";
      });

  m.def("validate", [](const Rows& rows) { return SeifertMatrix::validate(rows_to_mat(rows)); });

  py::class_<EnlargeMove>(m, "EnlargeMove")
      .def(py::init([](int kind, std::vector<Int> v) { return EnlargeMove{kind, std::move(v)}; }),
           py::arg("kind"), py::arg("v"))
      .def_readwrite("kind", &EnlargeMove::kind)
      .def_readwrite("v", &EnlargeMove::v)
      .def(py::self == py::self);

  py::class_<ReduceMove>(m, "ReduceMove")
      .def(py::init([](int kind, std::size_t p, std::size_t q) {
             return ReduceMove{kind, p, q};
           }),
           py::arg("kind"), py::arg("p"), py::arg("q"))
      .def_readwrite("kind", &ReduceMove::kind)
      .def_readwrite("p", &ReduceMove::p)
      .def_readwrite("q", &ReduceMove::q)
      .def(py::self == py::self);

  py::class_<CongruenceMove>(m, "CongruenceMove")
      .def(py::init([](const Rows& rows) { return CongruenceMove{rows_to_mat(rows)}; }),
           py::arg("matrix"))
      .def_property_readonly("matrix", [](const CongruenceMove& c) { return mat_to_rows(c.p); })
      .def(py::self == py::self);

  py::class_<MoveChain>(m, "MoveChain")
      .def(py::init([](SeifertMatrix start, std::vector<Move> moves) {
             return MoveChain{std::move(start), std::move(moves)};
           }),
           py::arg("start"), py::arg("moves") = std::vector<Move>{})
      .def_readwrite("start", &MoveChain::start)
      .def_readwrite("moves", &MoveChain::moves)
      .def("__len__", [](const MoveChain& c) { return c.moves.size(); });

  m.def("enlarge", &enlarge, py::arg("a"), py::arg("kind"), py::arg("v"));
  m.def("find_reductions", &find_reductions);
  m.def("reduce", &reduce, py::arg("a"), py::arg("site"));
  m.def("congruate",
        [](const SeifertMatrix& a, const Rows& p) { return congruate(a, rows_to_mat(p)); });
  m.def("apply_move", &apply_move);
  m.def("apply_chain", &apply_chain);
  m.def("random_seifert", &random_seifert, py::arg("genus"), py::arg("coeff_bound"),
        py::arg("seed"));
  m.def(
      "random_chain",
      [](const SeifertMatrix& a, std::size_t n, std::uint64_t seed, int enlarge_weight,
         int reduce_weight, int congruence_weight, long v_bound, int congruence_ops,
         long congruence_coeff, std::size_t size_cap_slack) {
        return random_chain(a, n,
                            chain_params(enlarge_weight, reduce_weight, congruence_weight,
                                         v_bound, congruence_ops, congruence_coeff,
                                         size_cap_slack),
                            seed);
      },
      py::arg("a"), py::arg("n"), py::arg("seed"), py::arg("enlarge_weight") = 30,
      py::arg("reduce_weight") = 30, py::arg("congruence_weight") = 40, py::arg("v_bound") = 2,
      py::arg("congruence_ops") = 1, py::arg("congruence_coeff") = 2,
      py::arg("size_cap_slack") = 4);

  py::class_<InvariantReport>(m, "InvariantReport")
      .def_readonly("alexander", &InvariantReport::alexander)
      .def_readonly("det_at_minus_one", &InvariantReport::det_at_minus_one)
      .def_readonly("signature", &InvariantReport::signature)
      .def_readonly("alexander_at_one", &InvariantReport::alexander_at_one)
      .def(py::self == py::self);

  py::class_<InvariantDiff>(m, "InvariantDiff")
      .def_readonly("invariant", &InvariantDiff::invariant)
      .def_readonly("left", &InvariantDiff::left)
      .def_readonly("right", &InvariantDiff::right);

  m.def("alexander_poly", &alexander_poly);
  m.def("det_at_minus_one", &det_at_minus_one);
  m.def("signature", &signature);
  m.def("invariant_report", &invariant_report);
  m.def("invariant_diffs", &invariant_diffs);

  py::class_<BlanchfieldForm>(m, "BlanchfieldForm")
      .def(py::init<const SeifertMatrix&>())
      .def("size", &BlanchfieldForm::size)
      .def("presentation",
           [](const BlanchfieldForm& f) { return poly_mat_to_rows(f.presentation()); })
      .def("pairing", [](const BlanchfieldForm& f) { return rat_mat_to_rows(f.pairing()); })
      .def("evaluate",
           [](const BlanchfieldForm& f, const std::vector<LaurentPoly>& v,
              const std::vector<LaurentPoly>& w) { return evaluate(f, v, w); })
      .def("hermitian_check", [](const BlanchfieldForm& f) { return hermitian_check(f); });

  m.def("build_form", &build_form);
  m.def("hermitian_check", &hermitian_check);

  py::class_<Isometry>(m, "Isometry")
      .def_property_readonly("forward",
                             [](const Isometry& i) { return poly_mat_to_rows(i.forward); })
      .def_property_readonly("inverse", [](const Isometry& i) {
        return i.inverse ? std::optional(poly_mat_to_rows(*i.inverse)) : std::nullopt;
      });

  m.def("congruence_isometry", [](const SeifertMatrix& a, const Rows& p) {
    return congruence_isometry(a, rows_to_mat(p));
  });
  m.def("enlargement_isometry", &enlargement_isometry);
  m.def("chain_isometry", &chain_isometry);

  py::class_<Verdict> verdict(m, "Verdict");
  verdict
      .def_property_readonly("kind",
                             [](const Verdict& v) {
                               switch (v.kind) {
                                 case Verdict::Kind::Isometric:
                                   return "isometric";
                                 case Verdict::Kind::DistinctInvariant:
                                   return "distinct_invariant";
                                 default:
                                   return "unknown";
                               }
                             })
      .def_property_readonly("witness_map",
                             [](const Verdict& v) { return v.witness.map; })
      .def_property_readonly("witness_chain",
                             [](const Verdict& v) { return v.witness.chain; })
      .def_property_readonly("separating",
                             [](const Verdict& v) { return v.separating; })
      .def_readonly("candidates_tried", &Verdict::candidates_tried);

  m.def(
      "isometry_search",
      [](const SeifertMatrix& a, const SeifertMatrix& b, long coeff, int deg,
         std::uint64_t candidates) {
        return isometry_search(a, b, IsometryBounds{coeff, deg, candidates});
      },
      py::arg("a"), py::arg("b"), py::arg("coeff") = 2, py::arg("deg") = 1,
      py::arg("candidates") = 1000000);
  m.def("verify_verdict", &verify_verdict);

  m.def(
      "chain_search",
      [](const SeifertMatrix& a, const SeifertMatrix& b, std::size_t depth, std::size_t nodes) {
        return chain_search(a, b, SearchBudget{depth, nodes});
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = 5, py::arg("nodes") = 100000);

  py::class_<CompareReport>(m, "CompareReport")
      .def_readonly("invariant_diffs", &CompareReport::invariant_diffs)
      .def_readonly("pairing_verdict", &CompareReport::pairing_verdict)
      .def_readonly("chain_witness", &CompareReport::chain_witness);

  m.def(
      "compare",
      [](const SeifertMatrix& a, const SeifertMatrix& b, std::size_t depth, std::size_t nodes,
         long coeff, int deg, std::uint64_t candidates) {
        CompareBudget budget;
        budget.search = SearchBudget{depth, nodes};
        budget.isometry = IsometryBounds{coeff, deg, candidates};
        return compare(a, b, budget);
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = 5, py::arg("nodes") = 100000,
      py::arg("coeff") = 2, py::arg("deg") = 1, py::arg("candidates") = 1000000);

  m.def("parse_poly", &parse_poly);
  m.def("poly_str", [](const LaurentPoly& p) { return to_string(p); });
  m.def("ratfun_str", [](const RatFun& r) { return to_string(r); });
}
