// _kakeya: Python bindings for the main operations. Arbitrary-precision
// integers cross the boundary as Python ints (via decimal strings); exact
// rationals as "num/den" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kakeya/acceptance.hpp"
#include "kakeya/compression.hpp"
#include "kakeya/constructions.hpp"
#include "kakeya/covering.hpp"
#include "kakeya/entropy.hpp"
#include "kakeya/erdos_selfridge.hpp"
#include "kakeya/oracle.hpp"
#include "kakeya/planar.hpp"
#include "kakeya/pipeline.hpp"
#include "kakeya/version.hpp"

namespace py = pybind11;
using namespace kakeya;

namespace {

py::int_ to_py(const Int& x) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(x.str()));
}

Int from_py(const py::int_& x) {
  return Int(py::cast<std::string>(py::str(py::handle(x))));
}

std::vector<Int> ints_from(const py::sequence& seq) {
  std::vector<Int> v;
  for (auto item : seq) v.push_back(from_py(py::cast<py::int_>(item)));
  return v;
}

py::list ints_to(const std::vector<Int>& v) {
  py::list out;
  for (const Int& x : v) out.append(to_py(x));
  return out;
}

Slope slope_from(const py::object& r) {
  if (py::isinstance<py::str>(r)) return Slope::parse(py::cast<std::string>(r));
  if (r.is_none()) return Slope::infinity();
  if (py::isinstance<py::tuple>(r)) {
    auto t = py::cast<py::tuple>(r);
    return Slope(from_py(py::cast<py::int_>(t[0])), from_py(py::cast<py::int_>(t[1])));
  }
  return Slope(from_py(py::cast<py::int_>(r)));
}

py::dict cover_to_dict(const CoverResult& c) {
  py::dict entries;
  for (const auto& [d, a] : c.entries) entries[to_py(d)] = to_py(a);
  py::list uncovered;
  for (const Int& d : c.uncovered) uncovered.append(to_py(d));
  py::dict out;
  out["k"] = c.k;
  out["entries"] = entries;
  out["uncovered"] = uncovered;
  out["ok"] = c.ok();
  return out;
}

FpSet fpset_from(uint32_t p, uint32_t n, const py::sequence& pts) {
  FpSpace sp(p, n);
  std::vector<uint64_t> idx;
  for (auto item : pts) {
    std::vector<uint32_t> coords;
    for (auto c : py::cast<py::sequence>(item)) coords.push_back(py::cast<uint32_t>(c));
    idx.push_back(sp.encode(coords));
  }
  return FpSet(sp, std::move(idx));
}

py::list fpset_to(const FpSet& s) {
  py::list out;
  for (uint64_t v : s) {
    py::list coords;
    for (uint32_t c : s.space().decode(v)) coords.append(c);
    out.append(py::tuple(coords));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_kakeya, mod) {
  mod.doc() = "Exact computations for progression covers, projections and entropies";
  mod.attr("__version__") = kVersion;

  mod.def(
      "project",
      [](const py::sequence& pts, const py::object& slope) {
        std::vector<PlanarPoint> pp;
        for (auto item : pts) {
          auto t = py::cast<py::tuple>(item);
          pp.emplace_back(from_py(py::cast<py::int_>(t[0])), from_py(py::cast<py::int_>(t[1])));
        }
        py::list out;
        for (const Rat& v : project(PlanarSet(std::move(pp)), slope_from(slope)))
          out.append(rat_to_string(v));
        return out;
      },
      py::arg("points"), py::arg("slope"),
      "pi_r of a planar set; slope is an int, a (num, den) pair, 'inf', or None for infinity. "
      "Returns the sorted distinct values as exact-rational strings.");

  mod.def(
      "verify_cover",
      [](const py::sequence& elements, int64_t k, const py::sequence& diffs) {
        return cover_to_dict(verify_cover(IntSet(ints_from(elements)), k, ints_from(diffs)));
      },
      py::arg("elements"), py::arg("k"), py::arg("diffs"),
      "Minimal-base k-term progression certificate, or the uncovered differences.");

  mod.def(
      "quadratic_residue_cover",
      [](int64_t k, int64_t m) {
        auto c = quadratic_residue_cover(k, m);
        py::dict out;
        out["Q"] = to_py(c.q);
        out["set"] = ints_to(c.s.elements());
        out["size_bound"] = to_py(c.size_bound);
        out["size_ok"] = c.size_ok;
        out["certificate_ok"] = c.certificate.ok();
        return out;
      },
      py::arg("k"), py::arg("m"));

  mod.def(
      "mockenhaupt_tao",
      [](uint32_t p) { return fpset_to(mockenhaupt_tao(p)); }, py::arg("p"),
      "The plane set {(u+v, uv)} in F_p^2.");

  mod.def(
      "min_full_cover",
      [](int64_t k, int64_t n) {
        auto r = min_full_cover(k, n);
        return py::make_tuple(r.optimum, ints_to(r.witness.elements()), r.exhausted);
      },
      py::arg("k"), py::arg("n"), "Exact F_k(N): (optimum, witness, exhausted).");

  mod.def(
      "min_distinct_cover",
      [](int64_t k, int64_t n) {
        auto r = min_distinct_cover(k, n);
        return py::make_tuple(r.optimum, ints_to(r.witness.elements()), r.exhausted);
      },
      py::arg("k"), py::arg("n"), "Exact F'_k(N) within the declared window.");

  mod.def(
      "min_fp_cover",
      [](int64_t k, uint32_t n, uint32_t p) {
        auto r = min_fp_cover(k, n, p);
        FpSpace sp(p, n);
        py::list witness;
        for (uint64_t v : r.fp_witness) {
          py::list coords;
          for (uint32_t c : sp.decode(v)) coords.append(c);
          witness.append(py::tuple(coords));
        }
        return py::make_tuple(r.optimum, witness, r.exhausted);
      },
      py::arg("k"), py::arg("n"), py::arg("p"), "Exact f_{k,n}(p).");

  mod.def(
      "entropy_mt",
      [](uint32_t p) {
        MtSweep s = mt_sweep(p);
        py::dict out;
        out["h_diff"] = s.h_difference;
        out["closed_form"] = s.closed_form;
        out["sup"] = s.gap.sup;
        out["sup_bound"] = s.sup_bound;
        out["ratio"] = s.gap.ratio;
        return out;
      },
      py::arg("p"), "Entropy sweep of the (a+b, ab) product law.");

  mod.def(
      "entropy",
      [](const py::sequence& weights) {
        std::vector<Rat> w;
        for (auto item : weights) w.push_back(rat_from_string(py::cast<std::string>(item)));
        return entropy_nats(w);
      },
      py::arg("weights"), "Shannon entropy in nats of exact rational weights ('1/3', ...).");

  mod.def("katz_tao_epsilon", [] { return katz_tao_epsilon().epsilon; });

  mod.def(
      "phi_theta",
      [](const py::int_& x, const std::string& theta, const py::int_& n) {
        ThetaMap m(rat_from_string(theta), from_py(n));
        return to_py(phi_theta(from_py(x), m));
      },
      py::arg("x"), py::arg("theta"), py::arg("n"), "floor(N * {theta x}), exact.");

  mod.def(
      "distinct_to_full",
      [](const py::sequence& elements, const py::dict& certificate, int64_t k, int64_t n,
         uint64_t seed) {
        std::map<Int, Int> cert;
        for (auto item : certificate)
          cert[from_py(py::cast<py::int_>(item.first))] =
              from_py(py::cast<py::int_>(item.second));
        auto r = distinct_to_full(IntSet(ints_from(elements)), cert, k, n, seed);
        py::dict out;
        out["ok"] = r.ok;
        out["attempts"] = r.attempts;
        out["theta"] = rat_to_string(r.theta);
        out["output_size"] = r.a1.size();
        out["size_ok"] = r.size_ok;
        out["cover_ok"] = r.cover.ok();
        return out;
      },
      py::arg("elements"), py::arg("certificate"), py::arg("k"), py::arg("n"), py::arg("seed"));

  mod.def(
      "greedy_translate_cover_int",
      [](const py::sequence& s, const py::int_& x) {
        auto r = greedy_translate_cover_int(IntSet(ints_from(s)), from_py(x));
        return py::make_tuple(ints_to(r.translates.elements()), r.bound_ok, r.contraction_ok);
      },
      py::arg("s"), py::arg("x"), "Greedy T with S + T covering {1..X}.");

  mod.def(
      "greedy_translate_cover_fp",
      [](uint32_t p, uint32_t n, const py::sequence& pts) {
        FpSet s = fpset_from(p, n, pts);
        auto r = greedy_translate_cover_fp(s);
        py::list ts;
        for (uint64_t t : r.translates) {
          py::list coords;
          for (uint32_t c : s.space().decode(t)) coords.append(c);
          ts.append(py::tuple(coords));
        }
        return py::make_tuple(ts, r.bound_ok, r.contraction_ok);
      },
      py::arg("p"), py::arg("n"), py::arg("points"));

  mod.def(
      "interval_multiple_count",
      [](const py::sequence& primes, int64_t k, const py::int_& w) {
        ESInstance inst{ints_from(primes), k, from_py(w)};
        return to_py(interval_multiple_count(inst));
      },
      py::arg("primes"), py::arg("k"), py::arg("w"));

  mod.def(
      "min_over_intervals",
      [](const py::sequence& primes, int64_t k) {
        auto r = min_over_intervals(ints_from(primes), k);
        return py::make_tuple(to_py(r.w), to_py(r.count), r.exhaustive);
      },
      py::arg("primes"), py::arg("k"));

  mod.def(
      "replay_pipeline",
      [](uint32_t p, int64_t m, uint64_t seed) {
        auto rep = replay_entropy_pipeline(mt_joint(p), m, seed);
        py::dict out;
        out["completed"] = rep.completed;
        out["typical_count"] = to_py(rep.typical_count);
        out["final_size"] = rep.final_size;
        out["all_directions_ok"] = rep.all_directions_ok;
        return out;
      },
      py::arg("p"), py::arg("m"), py::arg("seed"),
      "Stage-by-stage replay on the product-law preset.");

  mod.def(
      "check_all",
      [](const std::string& level, uint64_t seed) {
        auto run = run_acceptance(level, seed);
        return py::make_tuple(run.all_pass, run.report);
      },
      py::arg("level") = "quick", py::arg("seed") = 2024,
      "Run the verification suite; returns (all_pass, report).");
}
