// Batch-verification command line tool: builds the structured matrices
// (moment Hankel, two-sided Toeplitz, lattice Gram, cell-variable Young,
// structured Vandermonde), checks their claimed diagonal factorizations
// exactly, and probes the conjectured diagonal forms of the join-count
// matrices.
//
// Exit codes: 0 all selected checks pass, 1 usage error, 2 mismatch
// (including a refuted probe), 3 budget exhaustion (including an
// inconclusive probe).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "snfmom/families.hpp"
#include "snfmom/lattice.hpp"
#include "snfmom/moments.hpp"
#include "snfmom/polymat.hpp"
#include "snfmom/report.hpp"
#include "snfmom/toeplitz.hpp"
#include "snfmom/young.hpp"

namespace {

using namespace snfmom;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliState {
  std::string format = "text";
  unsigned seed = 20260819;  // default documented in README
  long long max_minors = 2000000;
  int max_enum = 14;

  std::vector<VerificationReport> reports;
  std::vector<ProbeReport> probes;
  // Free-form payloads (family listing, oracle values): text line + json.
  std::vector<std::pair<std::string, std::string>> payloads;

  VerifyOptions options() const {
    VerifyOptions opts;
    opts.minor_budget = max_minors;
    return opts;
  }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Shift parse_shift(const std::string& s) {
  if (s == "0") return Shift::none;
  if (s == "1") return Shift::one;
  if (s == "even") return Shift::even;
  if (s == "odd") return Shift::odd;
  throw UsageError("unknown shift '" + s + "' (expected 0, 1, even, odd)");
}

// Symbolic weights l1, l2, ... with every level weight b_n = 0; the setting
// in which the even/odd interleaving claims hold.
RecurrenceSpec flat_symbolic_spec() {
  RecurrenceSpec spec;
  spec.ring = Ring::create();
  spec.name = "symbolic-flat";
  RingPtr ring = spec.ring;
  spec.b = [ring](int) { return Poly::zero(ring); };
  spec.lambda = [ring](int k) {
    return Poly::variable(ring, "l" + std::to_string(k));
  };
  return spec;
}

void run_hankel(CliState& st, const std::string& family, bool symbolic,
                int n, const std::string& shift_str) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  Shift s = parse_shift(shift_str);
  if (s == Shift::one)
    throw UsageError(
        "shift 1 indexes entries by i+j+1, which carries no claimed "
        "diagonal; use 0, even, or odd");
  if (symbolic == !family.empty())
    throw UsageError("give exactly one of --family or --symbolic");

  RecurrenceSpec spec;
  std::vector<Poly> claimed;
  if (symbolic) {
    spec = s == Shift::none ? symbolic_spec(2 * n + 2) : flat_symbolic_spec();
    claimed = claimed_shift_diagonal(spec, n, s);
  } else {
    auto f = family_from_name(family);
    if (!f) throw UsageError("unknown family '" + family +
                             "'; see `snfmom list families`");
    spec = family_spec(*f);
    if (s != Shift::none) {
      for (int k = 0; k <= 2 * n + 1; ++k)
        if (!spec.b(k).is_zero())
          throw UsageError(
              "even/odd shifts need a flat-free weight system (b = 0); "
              "family '" + family + "' has nonzero level weights");
      claimed = claimed_shift_diagonal(spec, n, s);
    } else {
      claimed = family_claimed_diagonal(*f, spec.ring, n);
    }
  }
  MomentFunctional fn(spec);
  st.reports.push_back(verify_hankel_snf(fn, n, s, claimed, st.options()));
}

void run_toeplitz(CliState& st, const std::string& family, bool symbolic,
                  int n) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (symbolic == !family.empty())
    throw UsageError("give exactly one of --family schroeder or --symbolic");
  RecurrenceSpec spec;
  if (symbolic) {
    spec = symbolic_laurent_spec(n + 2);
  } else if (family == "schroeder") {
    spec = schroeder_spec();
  } else {
    throw UsageError("the two-sided moment verifier knows family "
                     "'schroeder' only");
  }
  ToeplitzFunctional fn(spec);
  st.reports.push_back(verify_toeplitz_snf(fn, n, st.options()));
  st.reports.push_back(verify_biorthogonality(fn, n));
}

void run_lattice(CliState& st, const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos)
    throw UsageError("lattice id must look like partitions:4, "
                     "noncrossing:3, or lickorish:3");
  std::string kind = id.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(id.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad size in lattice id '" + id + "'");
  }
  if (kind == "partitions") {
    st.reports.push_back(verify_char_poly_snf(n));
  } else if (kind == "noncrossing") {
    RankedLattice lat = noncrossing_lattice(n);
    auto ring = Ring::create();
    Poly q = Poly::variable(ring, "q");
    std::vector<Poly> f;
    for (int i = 0; i < lat.size(); ++i)
      f.push_back(q.pow(static_cast<int>(lat.elements[i].size())));
    st.reports.push_back(
        verify_lattice_factorization("block-weights", lat, f));
  } else if (kind == "lickorish") {
    st.reports.push_back(verify_lickorish_bridge(n));
    if (n <= 4) st.reports.push_back(verify_dahab_determinants(n));
  } else {
    throw UsageError("unknown lattice kind '" + kind + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

void run_young(CliState& st, const std::string& shape_str,
               const std::string& anchor_str,
               const std::string& specialize) {
  std::vector<int> rows = parse_int_list(shape_str, "shape");
  YoungShape shape(rows);
  if (!anchor_str.empty() && !specialize.empty())
    throw UsageError("--anchor and --specialize are mutually exclusive");
  if (!anchor_str.empty()) {
    std::vector<int> ab = parse_int_list(anchor_str, "anchor");
    if (ab.size() != 2) throw UsageError("--anchor wants two numbers: a,b");
    st.reports.push_back(verify_rect_udl(shape, ab[0], ab[1]));
    return;
  }
  if (!specialize.empty()) {
    if (specialize != "q")
      throw UsageError("the only supported specialization is q");
    int top = shape.row_count() ? shape.rows()[0] : 0;
    bool staircase = top == shape.row_count();
    for (int i = 0; i < shape.row_count() && staircase; ++i)
      staircase = shape.rows()[i] == top - i;
    if (!staircase || top == 0)
      throw UsageError(
          "the uniform-variable diagonal claim applies to staircase shapes "
          "(t, t-1, ..., 1) only");
    bool odd = top % 2 == 0;
    int n = odd ? top / 2 : (top + 1) / 2;
    st.reports.push_back(catalan_specialization(n, odd));
    return;
  }
  st.reports.push_back(verify_udl(shape));
}

void run_vandermonde(CliState& st, const std::string& variant, int n) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  auto ring = Ring::create();
  PolyMatrix m;
  std::vector<Poly> claimed;
  if (variant == "a") {
    m = vandermonde_binomial(ring, n);
    claimed = vandermonde_claimed_diagonal(ring, n, false);
  } else if (variant == "b") {
    m = vandermonde_shifted_powers(ring, n);
    claimed = vandermonde_claimed_diagonal(ring, n, true);
  } else {
    throw UsageError("--variant must be a or b");
  }
  st.reports.push_back(verify_diagonal_claim("vandermonde-" + variant, m,
                                             claimed, st.options()));
}

void run_probe(CliState& st, const std::string& which, int n) {
  std::string w = which;
  std::transform(w.begin(), w.end(), w.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  ProbeMode mode;
  if (w == "j")
    mode = ProbeMode::j_general;
  else if (w == "jq")
    mode = ProbeMode::j_q;
  else if (w == "jqq")
    mode = ProbeMode::j_qq;
  else if (w == "lickorish")
    mode = ProbeMode::lickorish;
  else
    throw UsageError("--which must be one of J, Jq, Jqq, lickorish");
  st.probes.push_back(probe_conjecture(n, mode));
}

void run_list_families(CliState& st) {
  for (Family f : all_families()) {
    std::string id = family_name(f);
    std::string desc = family_description(f);
    char line[256];
    std::snprintf(line, sizeof(line), "%-18s %s", id.c_str(), desc.c_str());
    st.payloads.emplace_back(
        line, "{\"id\": \"" + json_escape(id) + "\", \"description\": \"" +
                  json_escape(desc) + "\"}");
  }
}

void run_oracle_moment(CliState& st, const std::string& family, int n,
                       const std::string& method) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  auto f = family_from_name(family);
  if (!f) throw UsageError("unknown family '" + family +
                           "'; see `snfmom list families`");
  RecurrenceSpec spec = family_spec(*f);
  Poly value;
  if (method == "recurrence") {
    MomentFunctional fn(spec);
    value = fn.moment(n);
  } else if (method == "paths") {
    if (n > st.max_enum)
      throw BudgetExceeded("path enumeration capped at --max-enum = " +
                           std::to_string(st.max_enum));
    value = motzkin_moment_oracle(spec, n);
  } else if (method == "closed") {
    try {
      value = closed_form_moment(*f, spec.ring, n);
    } catch (const NoClosedForm& e) {
      throw UsageError(e.what());
    }
  } else {
    throw UsageError("--method must be recurrence, paths, or closed");
  }
  std::string text = value.to_string();
  st.payloads.emplace_back(
      text, "{\"family\": \"" + json_escape(family_name(*f)) +
                "\", \"n\": " + std::to_string(n) + ", \"method\": \"" +
                method + "\", \"value\": \"" + json_escape(text) + "\"}");
}

int finish(CliState& st) {
  std::sort(st.reports.begin(), st.reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return a.case_id < b.case_id;
            });
  std::sort(st.probes.begin(), st.probes.end(),
            [](const ProbeReport& a, const ProbeReport& b) {
              return a.case_id < b.case_id;
            });
  if (st.format == "json") {
    std::string out = "[";
    bool first = true;
    for (const auto& r : st.reports) {
      out += (first ? "" : ",\n ") + r.to_json();
      first = false;
    }
    for (const auto& p : st.probes) {
      out += (first ? "" : ",\n ") + p.to_json();
      first = false;
    }
    for (const auto& [text, json] : st.payloads) {
      out += (first ? "" : ",\n ") + json;
      first = false;
    }
    out += "]";
    std::cout << out << "\n";
  } else {
    for (const auto& r : st.reports) std::cout << r.to_text() << "\n";
    for (const auto& p : st.probes) std::cout << p.to_text() << "\n";
    for (const auto& [text, json] : st.payloads) std::cout << text << "\n";
  }
  bool mismatch = false, budget = false;
  for (const auto& r : st.reports) mismatch |= !r.match;
  for (const auto& p : st.probes) {
    mismatch |= p.verdict == "refuted";
    budget |= p.verdict == "inconclusive";
  }
  if (mismatch) return 2;
  if (budget) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification of diagonal factorizations of structured "
      "matrices over integer polynomial rings"};
  app.require_subcommand(1);
  app.fallthrough();

  CliState st;
  app.add_option("--format", st.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", st.seed,
                 "seed for randomized campaigns (default 20260819)");
  app.add_option("--max-minors", st.max_minors,
                 "work budget for the minor-gcd cross-checks");
  app.add_option("--max-enum", st.max_enum,
                 "largest index for enumeration oracles");

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a claimed diagonal");
  verify->require_subcommand(1);
  verify->fallthrough();

  struct {
    std::string family, shift = "0";
    bool symbolic = false;
    int n = 0;
  } hk;
  auto* hankel = verify->add_subcommand(
      "hankel", "moment matrix of a three-term recurrence");
  hankel->fallthrough();
  hankel->add_option("--family", hk.family, "family id (see list families)");
  hankel->add_flag("--symbolic", hk.symbolic, "fully symbolic weights");
  hankel->add_option("--n", hk.n, "matrix has rows 0..n")->required();
  hankel->add_option("--shift", hk.shift, "index scheme: 0, 1, even, odd")
      ->check(CLI::IsMember({"0", "1", "even", "odd"}));
  hankel->callback(
      [&] { run_hankel(st, hk.family, hk.symbolic, hk.n, hk.shift); });

  struct {
    std::string family;
    bool symbolic = false;
    int n = 0;
  } tp;
  auto* toeplitz = verify->add_subcommand(
      "toeplitz", "two-sided moment matrix of a Laurent recurrence");
  toeplitz->fallthrough();
  toeplitz->add_option("--family", tp.family, "family id (schroeder)");
  toeplitz->add_flag("--symbolic", tp.symbolic, "fully symbolic weights");
  toeplitz->add_option("--n", tp.n, "matrix has rows 0..n")->required();
  toeplitz->callback([&] { run_toeplitz(st, tp.family, tp.symbolic, tp.n); });

  std::string lattice_id;
  auto* lattice = verify->add_subcommand(
      "lattice", "join-weight Gram matrix of a ranked lattice");
  lattice->fallthrough();
  lattice
      ->add_option("--lattice", lattice_id,
                   "partitions:<n>, noncrossing:<n>, or lickorish:<n>")
      ->required();
  lattice->callback([&] { run_lattice(st, lattice_id); });

  struct {
    std::string shape, anchor, specialize;
  } yg;
  auto* young = verify->add_subcommand(
      "young", "cell-variable matrix of a Young diagram");
  young->fallthrough();
  young->add_option("--shape", yg.shape, "row lengths, e.g. 3,2,1")
      ->required();
  young->add_option("--anchor", yg.anchor,
                    "border anchor a,b for the rectangular variant");
  young->add_option("--specialize", yg.specialize,
                    "set every cell variable to this (only q; staircases)");
  young->callback(
      [&] { run_young(st, yg.shape, yg.anchor, yg.specialize); });

  struct {
    std::string variant;
    int n = 0;
  } vd;
  auto* vandermonde = verify->add_subcommand(
      "vandermonde", "structured q-Vandermonde matrices");
  vandermonde->fallthrough();
  vandermonde
      ->add_option("--variant", vd.variant,
                   "a: rows (1+a[j]_q)^i; b: rows [j+1]_q^i")
      ->required();
  vandermonde->add_option("--n", vd.n, "matrix has rows 0..n")->required();
  vandermonde->callback([&] { run_vandermonde(st, vd.variant, vd.n); });

  // probe --------------------------------------------------------------
  auto* probe = app.add_subcommand("probe", "gather conjecture evidence");
  probe->require_subcommand(1);
  probe->fallthrough();
  struct {
    std::string which;
    int n = 0;
  } pb;
  auto* conjecture = probe->add_subcommand(
      "conjecture", "diagonal form of the join-count matrices");
  conjecture->fallthrough();
  conjecture
      ->add_option("--which", pb.which, "J, Jq, Jqq, or lickorish")
      ->required();
  conjecture->add_option("--n", pb.n, "ground set size")->required();
  conjecture->callback([&] { run_probe(st, pb.which, pb.n); });

  // list ---------------------------------------------------------------
  auto* list = app.add_subcommand("list", "enumerate known inputs");
  list->require_subcommand(1);
  list->fallthrough();
  auto* families = list->add_subcommand("families", "weight-system ids");
  families->callback([&] { run_list_families(st); });

  // oracle -------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "print a single exact value");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  struct {
    std::string family, method = "recurrence";
    int n = 0;
  } om;
  auto* moment = oracle->add_subcommand("moment", "n-th moment of a family");
  moment->fallthrough();
  moment->add_option("--family", om.family, "family id")->required();
  moment->add_option("--n", om.n, "moment index")->required();
  moment->add_option("--method", om.method, "recurrence, paths, or closed")
      ->check(CLI::IsMember({"recurrence", "paths", "closed"}));
  moment->callback([&] { run_oracle_moment(st, om.family, om.n, om.method); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const PolyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return finish(st);
}
