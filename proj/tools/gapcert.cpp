// gapcert: command-line front end for the genus-gap certification library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "gapcert/cases.hpp"
#include "gapcert/gapmap.hpp"
#include "gapcert/picard.hpp"
#include "gapcert/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

namespace {

using namespace gapcert;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

enum class Format { Table, Json, Csv };

struct Style {
  bool color = false;
  std::string paint(std::string_view text, const char* code) const {
    if (!color) return std::string(text);
    return std::string("\033[") + code + "m" + std::string(text) + "\033[0m";
  }
  std::string verdict(Verdict v) const {
    switch (v) {
      case Verdict::ProvedGap: return paint(to_string(v), "31");
      case Verdict::CertifiedNonGap: return paint(to_string(v), "32");
      case Verdict::Unknown: break;
    }
    return paint(to_string(v), "33");
  }
  std::string pass(bool ok) const { return ok ? paint("PASS", "32") : paint("FAIL", "31"); }
};

Style make_style(Format f) {
  Style s;
  s.color = f == Format::Table && std::getenv("NO_COLOR") == nullptr && ::isatty(::fileno(stdout));
  return s;
}

Integer arg_integer(const std::string& text, const char* what) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(what) + " must be a decimal integer, got '" + text + "'");
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

std::string interval_text(const Interval& i) { return "[" + to_string(i.lo()) + "," + to_string(i.hi()) + "]"; }

std::string set_text(const IntervalSet& s, const char* sep = ", ") {
  if (s.empty()) return "-";
  std::string out;
  for (const auto& p : s.parts()) {
    if (!out.empty()) out += sep;
    out += interval_text(p);
  }
  return out;
}

std::string set_cell(const IntervalSet& s) {
  std::string out;
  for (const auto& p : s.parts()) {
    if (!out.empty()) out += ' ';
    out += to_string(p.lo()) + "-" + to_string(p.hi());
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_status(const std::string& d_arg, const std::string& g_arg, Format fmt) {
  Integer d = arg_integer(d_arg, "d"), g = arg_integer(g_arg, "g");
  require(d >= 1, "status: d must be >= 1");
  require(g >= 0, "status: g must be >= 0");
  StatusReport r{d, g, status(d, g)};
  const auto& cert = r.status.certificate;
  switch (fmt) {
    case Format::Json: print_json(envelope("status", to_json(r))); break;
    case Format::Csv:
      std::cout << "d,g,verdict,source,n,delta\n"
                << to_string(d) << ',' << to_string(g) << ',' << to_string(r.status.verdict) << ','
                << to_string(r.status.source) << ',' << (cert ? to_string(cert->n) : "") << ','
                << (cert ? to_string(cert->delta) : "") << '\n';
      break;
    case Format::Table: {
      Style st = make_style(fmt);
      std::cout << "d        " << to_string(d) << "\n"
                << "g        " << to_string(g) << "\n"
                << "verdict  " << st.verdict(r.status.verdict) << "\n"
                << "source   " << to_string(r.status.source) << "\n";
      if (cert)
        std::cout << "witness  nodal X.F_" << to_string(cert->n) << " with " << to_string(cert->delta) << " nodes (n = "
                  << to_string(cert->n) << ", delta = " << to_string(cert->delta) << ")\n";
      break;
    }
  }
  return kOk;
}

int cmd_certify(const std::string& d_arg, const std::string& g_arg, Format fmt) {
  Integer d = arg_integer(d_arg, "d"), g = arg_integer(g_arg, "g");
  require(d >= 4, "certify: d must be >= 4");
  require(g >= 0, "certify: g must be >= 0");
  auto cert = certify_nongap(d, g);
  switch (fmt) {
    case Format::Json: {
      json c = cert ? json{{"n", integer_to_json(cert->n)}, {"delta", integer_to_json(cert->delta)}} : json(nullptr);
      print_json(envelope("certificate", {{"d", integer_to_json(d)}, {"g", integer_to_json(g)}, {"certificate", c}}));
      break;
    }
    case Format::Csv:
      std::cout << "d,g,n,delta\n"
                << to_string(d) << ',' << to_string(g) << ',' << (cert ? to_string(cert->n) : "") << ','
                << (cert ? to_string(cert->delta) : "") << '\n';
      break;
    case Format::Table:
      if (cert)
        std::cout << "g = " << to_string(g) << " lies in J_" << to_string(cert->n) << "(" << to_string(d)
                  << "): n = " << to_string(cert->n) << ", delta = " << to_string(cert->delta) << "\n";
      else
        std::cout << "g = " << to_string(g) << " lies in no J_n(" << to_string(d) << ")\n";
      break;
  }
  return kOk;
}

void decomposition_table(const GapDecomposition& r) {
  std::string proved;
  for (const auto& p : r.proved_parts) {
    if (!proved.empty()) proved += ", ";
    proved += interval_text(p.interval) + " " + std::string(to_string(p.source));
  }
  std::cout << "degree " << to_string(r.d) << "\n"
            << "  horizon    " << to_string(r.horizon) << "\n"
            << "  proved     " << (proved.empty() ? "-" : proved) << "\n"
            << "  unknown    " << set_text(r.unknown_candidates) << "\n"
            << "  certified  " << set_text(r.nongap_certified) << "\n";
}

void decomposition_csv_rows(const GapDecomposition& r) {
  struct Row {
    Integer lo, hi;
    std::string kind, source;
  };
  std::vector<Row> rows;
  for (const auto& p : r.proved_parts) rows.push_back({p.interval.lo(), p.interval.hi(), "proved", std::string(to_string(p.source))});
  for (const auto& p : r.unknown_candidates.parts()) rows.push_back({p.lo(), p.hi(), "unknown", ""});
  for (const auto& p : r.nongap_certified.parts()) rows.push_back({p.lo(), p.hi(), "certified", "SeveriInterval"});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.lo < b.lo; });
  for (const auto& row : rows)
    std::cout << to_string(r.d) << ',' << row.kind << ',' << to_string(row.lo) << ',' << to_string(row.hi) << ','
              << row.source << '\n';
}

int cmd_decompose(const std::string& d_arg, Format fmt) {
  Integer d = arg_integer(d_arg, "d");
  require(d >= 4, "decompose: d must be >= 4 (surfaces of degree at most 3 have no genus gaps)");
  GapDecomposition r = decompose(d);
  switch (fmt) {
    case Format::Json: print_json(envelope("decomposition", to_json(r))); break;
    case Format::Csv:
      std::cout << "d,kind,lo,hi,source\n";
      decomposition_csv_rows(r);
      break;
    case Format::Table: decomposition_table(r); break;
  }
  return kOk;
}

int cmd_bounds(const std::string& d_arg, Format fmt) {
  Integer d = arg_integer(d_arg, "d");
  require(d >= 4, "bounds: d must be >= 4");
  BoundsReport r = bounds(d);
  switch (fmt) {
    case Format::Json: print_json(envelope("bounds", to_json(r))); break;
    case Format::Csv:
      std::cout << "d,coarse,coarse_exact,refined,first_contiguous_degree\n"
                << to_string(r.d) << ',' << to_string(r.coarse) << ',' << to_string(r.coarse_exact) << ','
                << to_string(r.refined) << ',' << to_string(r.first_contiguous) << '\n';
      break;
    case Format::Table:
      std::cout << "d                        " << to_string(r.d) << "\n"
                << "coarse horizon           " << to_string(r.coarse) << "\n"
                << "coarse horizon (exact)   " << to_string(r.coarse_exact) << "\n"
                << "refined horizon          " << to_string(r.refined) << "\n"
                << "first contiguous degree  " << to_string(r.first_contiguous) << "\n";
      break;
  }
  return kOk;
}

std::vector<GapDecomposition> decompose_range(const Integer& lo, const Integer& hi, unsigned jobs) {
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<GapDecomposition> out(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 256))));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) out[i] = decompose(lo + Integer(i));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

int cmd_table(const std::string& lo_arg, const std::string& hi_arg, unsigned jobs, Format fmt) {
  Integer lo = arg_integer(lo_arg, "d_min"), hi = arg_integer(hi_arg, "d_max");
  require(lo >= 4, "table: d_min must be >= 4");
  require(lo <= hi, "table: d_min must not exceed d_max");
  require(hi - lo < 100000, "table: at most 100000 degrees per call");
  std::vector<GapDecomposition> rows = decompose_range(lo, hi, jobs);
  switch (fmt) {
    case Format::Json: {
      json a = json::array();
      for (const auto& r : rows) a.push_back(to_json(r));
      print_json(envelope("table", {{"decompositions", std::move(a)}}));
      break;
    }
    case Format::Csv:
      std::cout << "d,horizon,proved,unknown\n";
      for (const auto& r : rows)
        std::cout << to_string(r.d) << ',' << to_string(r.horizon) << ',' << set_cell(r.proved_gaps) << ','
                  << set_cell(r.unknown_candidates) << '\n';
      break;
    case Format::Table:
      std::cout << std::left << std::setw(6) << "d" << std::setw(10) << "horizon" << std::setw(32) << "proved gaps"
                << "unknown\n";
      for (const auto& r : rows)
        std::cout << std::setw(6) << to_string(r.d) << std::setw(10) << to_string(r.horizon) << std::setw(32)
                  << set_text(r.proved_gaps, " ") << set_text(r.unknown_candidates, " ") << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& scope, const std::string& table_path, Format fmt) {
  std::vector<cases::CaseRecord> table = table_path.empty() ? cases::builtin_cases() : cases::load_case_table(table_path);
  const bool do_cases = scope == "cases" || scope == "all";
  const bool do_kappa = scope == "kappa" || scope == "all";

  std::optional<cases::VerificationReport> rep;
  std::vector<cases::Check> checks;
  bool passed = true;
  if (do_cases) {
    rep = cases::verify_all(table);
    passed = passed && rep->passed;
  }
  if (do_kappa) {
    checks = cases::verify_kappa(table);
    for (const auto& c : checks) passed = passed && c.passed;
  }

  switch (fmt) {
    case Format::Json: {
      json payload{{"scope", scope}, {"passed", passed}};
      payload["cases"] = rep ? cases::to_json(*rep) : json(nullptr);
      if (do_kappa) {
        json a = json::array();
        for (const auto& c : checks) a.push_back(cases::to_json(c));
        payload["kappa"] = std::move(a);
      } else {
        payload["kappa"] = nullptr;
      }
      print_json(envelope("verification", std::move(payload)));
      break;
    }
    case Format::Csv:
      std::cout << "kind,id,d,n,g,mode,family_dim,max_neg_kappa,v0,lhs,phi,passed,detail\n";
      if (rep)
        for (const auto& r : rep->rows)
          std::cout << "elimination," << r.case_id << ',' << r.triple.d << ',' << r.triple.n << ',' << r.triple.g << ','
                    << to_string(r.mode) << ',' << r.family_dim << ',' << r.max_neg_kappa << ',' << to_string(r.v0)
                    << ',' << to_string(r.lhs) << ',' << to_string(r.phi) << ',' << (r.passed ? "true" : "false") << ','
                    << (r.delegated ? "delegated" : "") << '\n';
      for (const auto& c : checks)
        std::cout << "check," << c.name << ",,,,,,,,,," << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
      break;
    case Format::Table: {
      Style st = make_style(fmt);
      if (rep) {
        std::cout << "restricted triples (d,n,g):";
        for (const auto& t : rep->triples) std::cout << " (" << t.d << ',' << t.n << ',' << t.g << ')';
        std::cout << "\n\n"
                  << std::left << std::setw(28) << "case" << std::setw(12) << "d n g" << std::setw(10) << "mode"
                  << std::setw(8) << "dimF" << std::setw(8) << "-kappa" << std::setw(6) << "v0" << std::setw(6) << "lhs"
                  << std::setw(6) << "phi" << "result\n";
        for (const auto& r : rep->rows) {
          std::ostringstream t;
          t << r.triple.d << ' ' << r.triple.n << ' ' << r.triple.g;
          std::cout << std::setw(28) << r.case_id << std::setw(12) << t.str() << std::setw(10) << to_string(r.mode)
                    << std::setw(8) << r.family_dim << std::setw(8) << r.max_neg_kappa << std::setw(6)
                    << to_string(r.v0) << std::setw(6) << to_string(r.lhs) << std::setw(6) << to_string(r.phi)
                    << st.pass(r.passed) << (r.delegated ? " (delegated to the nodal cone)" : "") << '\n';
        }
        std::cout << "\ncases: " << st.pass(rep->passed) << " (" << rep->triples.size() << " triples, "
                  << rep->rows.size() << " checks)\n";
      }
      if (do_kappa) {
        if (rep) std::cout << '\n';
        std::size_t ok = 0;
        for (const auto& c : checks) {
          ok += c.passed;
          std::cout << st.pass(c.passed) << "  " << std::setw(36) << c.name << c.detail << '\n';
        }
        std::cout << "\nkappa: " << st.pass(ok == checks.size()) << " (" << ok << "/" << checks.size() << " checks)\n";
      }
      break;
    }
  }
  return passed ? kOk : kFailed;
}

int cmd_lattices(const std::string& name, Format fmt) {
  std::vector<picard::PicardLattice> lattices;
  if (name.empty())
    for (const auto& n : picard::builtin_names()) lattices.push_back(picard::builtin(n));
  else
    lattices.push_back(picard::builtin(name));

  switch (fmt) {
    case Format::Json: {
      json a = json::array();
      for (const auto& L : lattices) a.push_back(picard::to_json(L));
      print_json(envelope("lattices", {{"lattices", std::move(a)}}));
      break;
    }
    case Format::Csv:
      std::cout << "name,rank,k_squared,model\n";
      for (const auto& L : lattices)
        std::cout << L.name() << ',' << L.rank() << ',' << picard::self_intersection(L, L.canonical()) << ','
                  << picard::to_string(L.info().model) << '\n';
      break;
    case Format::Table:
      for (const auto& L : lattices) {
        std::cout << L.name() << "  (rank " << L.rank() << ", K^2 = " << picard::self_intersection(L, L.canonical())
                  << ", " << picard::to_string(L.info().model) << ")\n  " << L.info().citation << "\n  basis:";
        for (const auto& b : L.basis()) std::cout << ' ' << b;
        std::cout << "\n  gram:";
        for (const auto& row : L.gram()) {
          std::cout << " [";
          for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
          std::cout << ']';
        }
        auto vec = [](const picard::DivisorClass& c) {
          std::string s = "(";
          for (std::size_t j = 0; j < c.rank(); ++j) s += (j ? " " : "") + std::to_string(c[j]);
          return s + ")";
        };
        std::cout << "\n  K = " << vec(L.canonical()) << '\n';
        for (const auto& [label, c] : L.named()) std::cout << "  " << label << " = " << vec(c) << '\n';
        std::cout << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_cases(Format fmt) {
  auto table = cases::builtin_cases();
  if (fmt == Format::Json) {
    std::cout << cases::case_table_to_json(table).dump(2) << '\n';
    return kOk;
  }
  if (fmt == Format::Csv) std::cout << "id,n,variants,family_dim,mode,expected_neg_kappa\n";
  for (const auto& c : table) {
    std::string variants;
    for (const auto& v : c.variants) variants += (variants.empty() ? "" : " ") + v.lattice;
    std::string expected = (c.expected.relation == cases::Relation::Equal ? "= " : "<= ") +
                           (c.expected.slope ? std::to_string(c.expected.slope) + "d + " : "") +
                           std::to_string(c.expected.offset);
    if (fmt == Format::Csv)
      std::cout << c.id << ',' << c.n << ',' << variants << ',' << c.family_dim << ',' << to_string(c.mode) << ",\""
                << expected << "\"\n";
    else
      std::cout << std::left << std::setw(28) << c.id << "n=" << c.n << "  dimF=" << std::setw(4) << c.family_dim
                << std::setw(10) << to_string(c.mode) << "-kappa " << std::setw(12) << expected << variants << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified genus gaps of curves on very general surfaces in P^3"};
  app.name("gapcert");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  std::string d_arg, g_arg, lo_arg, hi_arg, scope, table_path, lattice_name;
  unsigned jobs = 1;

  auto* status_cmd = app.add_subcommand("status", "Classify genus g on a degree-d surface");
  status_cmd->add_option("d", d_arg, "surface degree (>= 1)")->required();
  status_cmd->add_option("g", g_arg, "geometric genus (>= 0)")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Find a nodal complete-intersection witness for genus g");
  certify_cmd->add_option("d", d_arg, "surface degree (>= 4)")->required();
  certify_cmd->add_option("g", g_arg, "geometric genus (>= 0)")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Proved gaps, unknown candidates and horizon for degree d");
  decompose_cmd->add_option("d", d_arg, "surface degree (>= 4)")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Coarse and refined certification horizons");
  bounds_cmd->add_option("d", d_arg, "surface degree (>= 4)")->required();

  auto* table_cmd = app.add_subcommand("table", "Decompositions for a range of degrees");
  table_cmd->add_option("d_min", lo_arg, "first degree (>= 4)")->required();
  table_cmd->add_option("d_max", hi_arg, "last degree")->required();
  table_cmd->add_option("--jobs,-j", jobs, "worker threads; output order does not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Re-run the case elimination and lattice checks");
  verify_cmd->add_option("scope", scope, "cases, kappa or all")->required()->check(CLI::IsMember({"cases", "kappa", "all"}));
  verify_cmd->add_option("--table", table_path, "case table JSON file (default: built-in table)");

  auto* lattices_cmd = app.add_subcommand("lattices", "Print the built-in Picard lattices");
  lattices_cmd->add_option("name", lattice_name, "a single lattice, e.g. hirzebruch(3)");

  auto* cases_cmd = app.add_subcommand("cases", "Print the built-in case table (JSON is loadable by verify --table)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return kOk;
    }
    std::cerr << "gapcert: " << e.what() << "\n";
    return kUsage;
  }

  const Format fmt = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Table;

  try {
    if (*status_cmd) return cmd_status(d_arg, g_arg, fmt);
    if (*certify_cmd) return cmd_certify(d_arg, g_arg, fmt);
    if (*decompose_cmd) return cmd_decompose(d_arg, fmt);
    if (*bounds_cmd) return cmd_bounds(d_arg, fmt);
    if (*table_cmd) return cmd_table(lo_arg, hi_arg, jobs, fmt);
    if (*verify_cmd) return cmd_verify(scope, table_path, fmt);
    if (*lattices_cmd) return cmd_lattices(lattice_name, fmt);
    if (*cases_cmd) return cmd_cases(fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "gapcert: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "gapcert: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "gapcert: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
