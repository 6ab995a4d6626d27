// Python bindings for the exact verification toolkit: the verify/probe
// entry points return plain dicts mirroring the report JSON, and the oracle
// and listing helpers return strings, so the module needs no wrapped types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "snfmom/families.hpp"
#include "snfmom/lattice.hpp"
#include "snfmom/moments.hpp"
#include "snfmom/toeplitz.hpp"
#include "snfmom/young.hpp"

namespace py = pybind11;
using namespace snfmom;

namespace {

py::dict to_dict(const VerificationReport& r) {
  py::dict d;
  d["case_id"] = r.case_id;
  d["rows"] = r.rows;
  d["cols"] = r.cols;
  d["claimed"] = r.claimed;
  d["extracted"] = r.extracted;
  d["match"] = r.match;
  d["methods"] = r.methods;
  d["runtime_ms"] = r.runtime_ms;
  d["witness"] = r.witness;
  d["extras"] = r.extras;
  return d;
}

py::dict to_dict(const ProbeReport& p) {
  py::dict d;
  d["case_id"] = p.case_id;
  d["verdict"] = p.verdict;
  d["checked"] = p.checked;
  d["runtime_ms"] = p.runtime_ms;
  d["extras"] = p.extras;
  return d;
}

Family family_arg(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family '" + name + "'");
  return *f;
}

Shift shift_arg(const std::string& s) {
  if (s == "0") return Shift::none;
  if (s == "even") return Shift::even;
  if (s == "odd") return Shift::odd;
  throw std::invalid_argument("shift must be '0', 'even', or 'odd'");
}

ProbeMode mode_arg(const std::string& which) {
  if (which == "J" || which == "j") return ProbeMode::j_general;
  if (which == "Jq" || which == "jq") return ProbeMode::j_q;
  if (which == "Jqq" || which == "jqq") return ProbeMode::j_qq;
  if (which == "lickorish") return ProbeMode::lickorish;
  throw std::invalid_argument("which must be J, Jq, Jqq, or lickorish");
}

}  // namespace

PYBIND11_MODULE(_snfmom, m) {
  m.doc() =
      "exact verification of diagonal factorizations of structured "
      "matrices over integer polynomial rings";

  m.def(
      "list_families",
      [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (Family f : all_families())
          out.emplace_back(family_name(f), family_description(f));
        return out;
      },
      "(id, description) pairs of the built-in weight systems");

  m.def(
      "oracle_moment",
      [](const std::string& family, int n, const std::string& method) {
        RecurrenceSpec spec = family_spec(family_arg(family));
        if (method == "recurrence") {
          MomentFunctional fn(spec);
          return fn.moment(n).to_string();
        }
        if (method == "paths")
          return motzkin_moment_oracle(spec, n).to_string();
        if (method == "closed")
          return closed_form_moment(family_arg(family), spec.ring, n)
              .to_string();
        throw std::invalid_argument(
            "method must be recurrence, paths, or closed");
      },
      py::arg("family"), py::arg("n"), py::arg("method") = "recurrence",
      "n-th moment of a family as a string, by one of three routes");

  m.def(
      "verify_hankel",
      [](const std::string& family, int n, const std::string& shift) {
        Family f = family_arg(family);
        Shift s = shift_arg(shift);
        RecurrenceSpec spec = family_spec(f);
        std::vector<Poly> claimed;
        if (s == Shift::none) {
          claimed = family_claimed_diagonal(f, spec.ring, n);
        } else {
          for (int k = 0; k <= 2 * n + 1; ++k)
            if (!spec.b(k).is_zero())
              throw std::invalid_argument(
                  "even/odd shifts need a flat-free weight system (b = 0)");
          claimed = claimed_shift_diagonal(spec, n, s);
        }
        MomentFunctional fn(spec);
        return to_dict(verify_hankel_snf(fn, n, s, claimed));
      },
      py::arg("family"), py::arg("n"), py::arg("shift") = "0",
      "moment matrix of a named family against its claimed diagonal");

  m.def(
      "verify_hankel_symbolic",
      [](int n) {
        RecurrenceSpec spec = symbolic_spec(2 * n + 2);
        MomentFunctional fn(spec);
        return to_dict(verify_hankel_snf(fn, n, Shift::none,
                                         lambda_products(spec, n)));
      },
      py::arg("n"), "fully symbolic moment matrix, diagonal (1, l1, ...)");

  m.def(
      "verify_toeplitz",
      [](int n, bool symbolic) {
        RecurrenceSpec spec =
            symbolic ? symbolic_laurent_spec(n + 2) : schroeder_spec();
        ToeplitzFunctional fn(spec);
        py::list out;
        out.append(to_dict(verify_toeplitz_snf(fn, n)));
        out.append(to_dict(verify_biorthogonality(fn, n)));
        return out;
      },
      py::arg("n"), py::arg("symbolic") = false,
      "two-sided moment matrix (symbolic weights or the Schroder family)");

  m.def(
      "verify_lattice",
      [](const std::string& kind, int n) {
        py::list out;
        if (kind == "partitions") {
          out.append(to_dict(verify_char_poly_snf(n)));
        } else if (kind == "noncrossing") {
          RankedLattice lat = noncrossing_lattice(n);
          auto ring = Ring::create();
          Poly q = Poly::variable(ring, "q");
          std::vector<Poly> f;
          for (int i = 0; i < lat.size(); ++i)
            f.push_back(q.pow(static_cast<int>(lat.elements[i].size())));
          out.append(
              to_dict(verify_lattice_factorization("block-weights", lat, f)));
        } else if (kind == "lickorish") {
          out.append(to_dict(verify_lickorish_bridge(n)));
          if (n <= 4) out.append(to_dict(verify_dahab_determinants(n)));
        } else {
          throw std::invalid_argument(
              "kind must be partitions, noncrossing, or lickorish");
        }
        return out;
      },
      py::arg("kind"), py::arg("n"),
      "join-weight Gram factorizations over a ranked lattice");

  m.def(
      "verify_young",
      [](const std::vector<int>& rows) {
        return to_dict(verify_udl(YoungShape(rows)));
      },
      py::arg("shape"),
      "cell-variable matrix of a Young diagram against its diagonal");

  m.def(
      "verify_young_rect",
      [](const std::vector<int>& rows, int a, int b) {
        return to_dict(verify_rect_udl(YoungShape(rows), a, b));
      },
      py::arg("shape"), py::arg("a"), py::arg("b"),
      "rectangular variant anchored at border cell (a, b)");

  m.def(
      "verify_young_staircase",
      [](int n, bool odd) { return to_dict(catalan_specialization(n, odd)); },
      py::arg("n"), py::arg("odd") = false,
      "staircase shape with every cell set to q; bridges to the "
      "even/odd-shift moment matrices");

  m.def(
      "verify_vandermonde",
      [](const std::string& variant, int n) {
        auto ring = Ring::create();
        PolyMatrix mat;
        std::vector<Poly> claimed;
        if (variant == "a") {
          mat = vandermonde_binomial(ring, n);
          claimed = vandermonde_claimed_diagonal(ring, n, false);
        } else if (variant == "b") {
          mat = vandermonde_shifted_powers(ring, n);
          claimed = vandermonde_claimed_diagonal(ring, n, true);
        } else {
          throw std::invalid_argument("variant must be 'a' or 'b'");
        }
        return to_dict(
            verify_diagonal_claim("vandermonde-" + variant, mat, claimed));
      },
      py::arg("variant"), py::arg("n"),
      "structured q-Vandermonde matrices against their diagonals");

  m.def(
      "probe_conjecture",
      [](const std::string& which, int n) {
        return to_dict(probe_conjecture(n, mode_arg(which)));
      },
      py::arg("which"), py::arg("n"),
      "evidence for the conjectured diagonal of a join-count matrix");
}
