#include "ulrich/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ulrich/catalog.hpp"
#include "ulrich/classify.hpp"
#include "ulrich/conditions.hpp"
#include "ulrich/document.hpp"
#include "ulrich/enumerate.hpp"

namespace ulrich::cli {

using nlohmann::ordered_json;

namespace {

enum class Format { Table, Json };

struct Options {
  std::string builtin;
  std::string surface_file;
  std::string format = "table";
  std::string divisor;
  int rank = 2;
  std::string c1;
  std::string c2;
  std::optional<long long> bound;
  std::string catalog_action;
  int a = 0;
  int m = 0;
};

// ---------------------------------------------------------------- rendering

bool is_scalar(const ordered_json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_array(const ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (!is_scalar(x) && !is_flat_array(x)) return false;
  return true;
}

std::string inline_text(const ordered_json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + inline_text(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      s += (first ? "" : ", ") + it.key() + ": " + inline_text(it.value());
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

void render_rows(std::ostream& os, const ordered_json& rows, int indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end())
        columns.push_back(it.key());
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? inline_text(row[columns[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  const std::string pad(indent, ' ');
  auto emit = [&](const std::vector<std::string>& line) {
    os << pad;
    for (std::size_t c = 0; c < line.size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c])) << line[c]
         << (c + 1 < line.size() ? "  " : "");
    os << "\n";
  };
  emit(columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
}

void render_table(std::ostream& os, const ordered_json& v, int indent = 0) {
  const std::string pad(indent, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const auto& value = it.value();
    if (is_scalar(value) || is_flat_array(value)) {
      os << pad << it.key() << ": " << inline_text(value) << "\n";
    } else if (value.is_object()) {
      os << pad << it.key() << ":\n";
      render_table(os, value, indent + 2);
    } else if (value.empty()) {
      os << pad << it.key() << ": -\n";
    } else {
      os << pad << it.key() << ":\n";
      render_rows(os, value, indent + 2);
    }
  }
}

// Two-space indentation with arrays of scalars kept on one line.
void write_json(std::ostream& os, const ordered_json& v, int indent) {
  const std::string pad(indent + 2, ' ');
  const bool scalar_array =
      v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& x) { return is_scalar(x); });
  if (is_scalar(v) || v.empty() || scalar_array) {
    if (!scalar_array) {
      os << v.dump();
      return;
    }
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
    os << "]";
    return;
  }
  os << (v.is_object() ? "{\n" : "[\n");
  std::size_t i = 0;
  for (auto it = v.begin(); it != v.end(); ++it, ++i) {
    os << pad;
    if (v.is_object()) os << ordered_json(it.key()).dump() << ": ";
    write_json(os, it.value(), indent + 2);
    os << (i + 1 < v.size() ? ",\n" : "\n");
  }
  os << std::string(indent, ' ') << (v.is_object() ? "}" : "]");
}

void emit(std::ostream& out, Format format, const ordered_json& result) {
  if (format == Format::Json) {
    write_json(out, result, 0);
    out << "\n";
  }
  else
    render_table(out, result);
}

// ---------------------------------------------------------------- json views

ordered_json integers(const DivisorClass& d) {
  ordered_json a = ordered_json::array();
  for (const auto& c : d) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      a.push_back(c.convert_to<std::int64_t>());
    else
      a.push_back(c.str());
  }
  return a;
}

ordered_json number(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

ordered_json number(const std::optional<Integer>& n) { return n ? number(*n) : ordered_json(); }

ordered_json tristate(TriState t) { return std::string(to_string(t)); }

ordered_json check_json(const UlrichCheckReport& r) {
  return {{"linear_ok", r.linear_ok},
          {"required_linear", to_string(r.required_linear)},
          {"actual_linear", number(r.actual_linear)},
          {"quadratic_term", r.quadratic_term},
          {"quadratic_ok", r.quadratic_ok},
          {"required_quadratic", to_string(r.required_quadratic)},
          {"actual_quadratic", number(r.actual_quadratic)},
          {"passed", r.passed()},
          {"disclaimer", std::string(r.disclaimer())}};
}

ordered_json chern_json(const PolarizedSurface& s, const ChernData& f) {
  return {{"rank", f.rank},
          {"c1", integers(f.c1)},
          {"c1_class", s.lattice().format(f.c1)},
          {"c2", number(f.c2)}};
}

ordered_json verdict_trace(const Verdict& v) {
  ordered_json a = ordered_json::array();
  for (const auto& t : v.trace) a.push_back(t);
  return a;
}

// ---------------------------------------------------------------- parsing

std::vector<Integer> parse_integers(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    std::size_t start = (!item.empty() && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
    if (item.size() == start || item.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error(ErrorCode::ValidationError,
                  what + ": '" + item + "' is not an integer", what);
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  if (out.empty()) throw Error(ErrorCode::ValidationError, what + ": no values given", what);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot read surface file " + path, "surface");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolarizedSurface load_surface(const Options& o) {
  const bool has_builtin = !o.builtin.empty();
  const bool has_file = !o.surface_file.empty();
  if (has_builtin == has_file)
    throw Error(ErrorCode::ValidationError,
                "give exactly one surface source: --builtin NAME or --surface FILE", "surface");
  if (has_builtin) return builtin(o.builtin);
  return parse_surface(read_file(o.surface_file));
}

void forbid_surface(const Options& o, const std::string& command) {
  if (!o.builtin.empty() || !o.surface_file.empty())
    throw Error(ErrorCode::ValidationError, command + " does not take a surface", "surface");
}

// ---------------------------------------------------------------- commands

struct Outcome {
  ordered_json result;
  int code = kSuccess;
};

Outcome cmd_info(const PolarizedSurface& s) {
  const auto inv = derived_invariants(s);
  ordered_json sanity;
  try {
    const auto report = embedding_sanity(s);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"clause", c.clause}, {"applicable", c.applicable}, {"passed", c.passed}});
    sanity = {{"status", report.all_passed() ? "pass" : "fail"}, {"checks", checks}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingHypothesis) throw;
    sanity = {{"status", "unavailable"}, {"reason", e.what()}};
  }
  ordered_json invariants = {{"h2", number(inv.h2)},     {"hK", number(inv.hK)},
                             {"K2", number(inv.K2)},     {"chi", number(inv.chi)},
                             {"pi", number(inv.pi)},     {"N", number(inv.N)},
                             {"h0_h", number(inv.h0_h)}, {"degZ", number(inv.degZ)},
                             {"h0_h_plus_K", number(inv.h0_h_plus_K)}};
  ordered_json flags = {
      {"very_ample", tristate(s.effective_flags().very_ample)},
      {"non_special", tristate(s.effective_flags().non_special)},
      {"h0_2K_minus_h_zero", tristate(s.effective_flags().h0_2K_minus_h_zero)},
      {"h0_h_minus_K_zero", tristate(s.effective_flags().h0_h_minus_K_zero)}};
  return {{{"surface", surface_to_json(s)},
           {"h_class", s.lattice().format(s.h())},
           {"K_class", s.lattice().format(s.canonical())},
           {"invariants", invariants},
           {"effective_flags", flags},
           {"embedding_sanity", sanity}}};
}

Outcome cmd_check_line(const PolarizedSurface& s, const Options& o) {
  DivisorClass d(parse_integers(o.divisor, "divisor"));
  s.lattice().require_member(d, "divisor");
  const auto r = line_numeric_check(s, d);
  return {{{"surface", surface_to_json(s)},
           {"divisor", integers(d)},
           {"divisor_class", s.lattice().format(d)},
           {"dual", integers(line_dual(s, d))},
           {"check", check_json(r)}}};
}

Outcome cmd_check_rank(const PolarizedSurface& s, const Options& o) {
  ChernData f;
  f.rank = o.rank;
  f.c1 = DivisorClass(parse_integers(o.c1, "c1"));
  const auto c2 = parse_integers(o.c2, "c2");
  if (c2.size() != 1) throw Error(ErrorCode::ValidationError, "c2 is a single integer", "c2");
  f.c2 = c2.front();
  const auto r = rank_numeric_check(s, f);
  return {{{"surface", surface_to_json(s)},
           {"chern", chern_json(s, f)},
           {"check", check_json(r)},
           {"chi_vanishing", chi_vanishing_check(s, f)},
           {"dual_twist", chern_json(s, dual_twist(s, f))}}};
}

Outcome cmd_enumerate(const PolarizedSurface& s, const Options& o) {
  std::vector<DivisorClass> found;
  std::string method;
  if (o.bound) {
    found = enumerate_bounded(s, *o.bound);
    method = "bounded";
  } else {
    if (s.lattice().rank() > 2)
      throw Error(ErrorCode::RankTooHigh,
                  "exact enumeration needs rank <= 2; pass --bound B for a box search", "bound");
    found = enumerate_rank2_exact(s);
    method = "exact";
  }
  std::string status = "numerical candidates (cohomological vanishings not checked)";
  if (const auto* hz = std::get_if<kind::Hirzebruch>(&s.kind()); hz && hz->e == 0)
    status = "Ulrich line bundles (vanishings known for P^1 x P^1)";
  ordered_json rows = ordered_json::array();
  for (const auto& d : found)
    rows.push_back({{"class", integers(d)}, {"divisor", s.lattice().format(d)}});
  return {{{"surface", surface_to_json(s)},
           {"method", method},
           {"bound", o.bound ? ordered_json(*o.bound) : ordered_json()},
           {"count", found.size()},
           {"status", status},
           {"candidates", rows}}};
}

Outcome cmd_special_chern(const PolarizedSurface& s) {
  const auto f = special_rank2_chern(s);
  return {{{"surface", surface_to_json(s)},
           {"chern", chern_json(s, f)},
           {"check", check_json(rank_numeric_check(s, f))},
           {"chi_vanishing", chi_vanishing_check(s, f)},
           {"dual_twist_fixed", dual_twist(s, f) == f}}};
}

Outcome cmd_classify(const PolarizedSurface& s) {
  const auto r = classify(s);
  ordered_json notes = ordered_json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return {{{"surface", surface_to_json(s)},
           {"special_rank2_exists", tristate(r.special_rank2_exists.value)},
           {"stable_special_exists", tristate(r.stable_special_exists.value)},
           {"ulrich_wild", tristate(r.ulrich_wild.value)},
           {"wild_via_lemma", r.wild_via_lemma},
           {"moduli_dim_lower_chern", number(r.moduli_dim_lower_chern)},
           {"moduli_dim_lower_injective", number(r.moduli_dim_lower_injective)},
           {"moduli_dim_smooth", number(r.moduli_dim_smooth)},
           {"minimal_degree", r.minimal_degree},
           {"trace",
            {{"special_rank2_exists", verdict_trace(r.special_rank2_exists)},
             {"stable_special_exists", verdict_trace(r.stable_special_exists)},
             {"ulrich_wild", verdict_trace(r.ulrich_wild)}}},
           {"notes", notes}}};
}

ordered_json table1_row_json(const Table1RowCheck& row) {
  return {{"row", row.name},
          {"h2", row.actual.degree},
          {"hK", row.actual.hK},
          {"K2", row.actual.K2},
          {"N", row.actual.N},
          {"status", row.passed() ? "pass" : "FAIL"},
          {"diff", row.diff()}};
}

Outcome cmd_catalog(const Options& o) {
  if (o.catalog_action == "list") {
    ordered_json families = ordered_json::array();
    for (const auto& e : builtin_catalog())
      families.push_back({{"pattern", e.pattern}, {"description", e.description}});
    ordered_json examples = ordered_json::array();
    for (const auto& name : builtin_examples()) {
      const auto s = builtin(name);
      examples.push_back({{"name", name},
                          {"kind", to_string(s.kind())},
                          {"h", s.lattice().format(s.h())}});
    }
    return {{{"families", families}, {"examples", examples}}};
  }
  const auto report = verify_table1(table1(), table1_expectations());
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) rows.push_back(table1_row_json(r));

  // The printed row 2 must not verify; it lives in P^5.
  auto printed_expect = std::vector<Table1Expectation>{table1_expectations().at(1)};
  const auto printed = verify_table1({table1_printed_row2()}, printed_expect).rows.front();
  const bool printed_rejected = !printed.passed() && printed.actual.N == 5;
  ordered_json printed_json = table1_row_json(printed);
  printed_json["status"] = printed_rejected ? "rejected as expected" : "NOT REJECTED";

  const bool ok = report.passed() && printed_rejected;
  return {{{"rows", rows}, {"printed_row2", printed_json}, {"passed", ok}},
          ok ? kSuccess : kVerificationFailed};
}

Outcome cmd_clifford(const Options& o) {
  const auto r = clifford_report(o.a, o.m);
  return {{{"a", r.a},
           {"m", r.m},
           {"pi", number(r.pi)},
           {"g", number(r.g)},
           {"deg_L", number(r.deg_L)},
           {"h0_L", number(r.h0_L)},
           {"cliff_L", number(r.cliff_L)},
           {"pencil_bound", number(r.pencil_bound)},
           {"kim_hypothesis_plausible", r.kim_hypothesis_plausible}}};
}

void report_error(std::ostream& err, Format format, std::string_view code, const std::string& path,
                  const std::string& message) {
  if (format == Format::Json) {
    ordered_json e = {{"error", {{"code", code}, {"path", path}, {"message", message}}}};
    err << e.dump() << "\n";
  } else {
    err << "error [" << code << "]" << (path.empty() ? "" : " at " + path) << ": " << message
        << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical Ulrich-bundle conditions on polarized surfaces", "ulrich"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--builtin", o.builtin, "Built-in surface name (see `catalog list`)");
  app.add_option("--surface", o.surface_file, "SurfaceDocument JSON file");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  auto* info = app.add_subcommand("info", "Derived invariants and embedding checks");
  auto* check_line = app.add_subcommand("check-line", "Numerical Ulrich check for a line bundle");
  check_line->add_option("--divisor", o.divisor, "Coefficients u,v,... in the lattice basis")
      ->required();
  auto* check_rank = app.add_subcommand("check-rank", "Numerical Ulrich check for Chern data");
  check_rank->add_option("--rank", o.rank, "Rank")->check(CLI::PositiveNumber);
  check_rank->add_option("--c1", o.c1, "c1 coefficients")->required();
  check_rank->add_option("--c2", o.c2, "c2")->required()->allow_extra_args(false);
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate numerical Ulrich line classes");
  enumerate->add_option("--bound", o.bound, "Search the box [-B, B]^rank instead")
      ->check(CLI::PositiveNumber);
  auto* special = app.add_subcommand("special-chern", "Chern classes of special rank-2 bundles");
  auto* classify_cmd = app.add_subcommand("classify", "Existence, stability, wildness, moduli");
  auto* catalog = app.add_subcommand("catalog", "Built-in surfaces");
  catalog->add_option("action", o.catalog_action, "list | verify")
      ->required()
      ->check(CLI::IsMember({"list", "verify"}));
  auto* clifford = app.add_subcommand("clifford", "Clifford-index report for kim-A-M");
  clifford->add_option("--a", o.a, "Degree a of h = a l - sum e_i")->required();
  clifford->add_option("--m", o.m, "Number of blown-up points")->required();
  auto* convert = app.add_subcommand("convert", "Print the canonical SurfaceDocument");

  std::vector<std::string> argv_storage{"ulrich"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const Format format = o.format == "json" ? Format::Json : Format::Table;
  try {
    Outcome outcome;
    if (info->parsed()) {
      outcome = cmd_info(load_surface(o));
    } else if (check_line->parsed()) {
      outcome = cmd_check_line(load_surface(o), o);
    } else if (check_rank->parsed()) {
      outcome = cmd_check_rank(load_surface(o), o);
    } else if (enumerate->parsed()) {
      outcome = cmd_enumerate(load_surface(o), o);
    } else if (special->parsed()) {
      outcome = cmd_special_chern(load_surface(o));
    } else if (classify_cmd->parsed()) {
      outcome = cmd_classify(load_surface(o));
    } else if (catalog->parsed()) {
      forbid_surface(o, "catalog");
      outcome = cmd_catalog(o);
    } else if (clifford->parsed()) {
      forbid_surface(o, "clifford");
      outcome = cmd_clifford(o);
    } else if (convert->parsed()) {
      out << serialize_surface(load_surface(o));
      return kSuccess;
    }
    emit(out, format, outcome.result);
    return outcome.code;
  } catch (const Error& e) {
    report_error(err, format, to_string(e.code()), e.path(), e.what());
    if (e.code() == ErrorCode::VerificationFailure) return kVerificationFailed;
    return e.is_internal() ? kInternalError : kUsageError;
  } catch (const std::exception& e) {
    report_error(err, format, "InternalError", "", e.what());
    return kInternalError;
  }
}

}  // namespace ulrich::cli
