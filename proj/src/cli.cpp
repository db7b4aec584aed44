#include "lacm/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "lacm/bracket.hpp"
#include "lacm/entropy.hpp"
#include "lacm/hall.hpp"
#include "lacm/series.hpp"
#include "lacm/trees.hpp"
#include "lacm/verify.hpp"

namespace lacm {
namespace {

using Json = nlohmann::ordered_json;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

/* Highest degree that can occur at a given order (both in the quotient
 * algebra and in the tree algebra): 2 at order 1, order-1 beyond. */
int max_degree_at(int order) { return order == 1 ? 2 : order - 1; }

int cmd_hall(std::ostream& out, int max_order, bool quotient_only, const std::string& format) {
  std::vector<HallElement> rows = build_hall_set(max_order);
  std::stable_sort(rows.begin(), rows.end(), [](const HallElement& a, const HallElement& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return compare(a.expr, b.expr) < 0;
  });
  if (quotient_only) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const HallElement& h) { return h.cls == HallClass::ideal; }),
               rows.end());
  }
  auto class_name = [](const HallElement& h) {
    return h.cls == HallClass::ideal ? "ideal" : "basis";
  };
  if (format == "json") {
    Json doc;
    doc["table"] = "hall";
    doc["max_order"] = max_order;
    doc["quotient"] = quotient_only;
    doc["rows"] = Json::array();
    for (const auto& h : rows) {
      Json row;
      row["order"] = h.order();
      row["degree"] = h.degree();
      row["expr"] = h.expr.str();
      row["class"] = class_name(h);
      doc["rows"].push_back(row);
    }
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "order,degree,class,expr\n";
    for (const auto& h : rows)
      out << h.order() << "," << h.degree() << "," << class_name(h) << ","
          << csv_quote(h.expr.str()) << "\n";
  } else {
    out << "order  degree  class  element\n";
    for (const auto& h : rows)
      out << std::setw(5) << h.order() << "  " << std::setw(6) << h.degree() << "  "
          << std::setw(5) << class_name(h) << "  " << h.expr.str() << "\n";
    out << "(" << rows.size() << " elements)\n";
  }
  return 0;
}

int cmd_dims_plain(std::ostream& out, const std::string& algebra, int max_order,
                   const std::string& format) {
  std::vector<long long> dims(max_order + 1, 0);
  if (algebra == "free") {
    std::map<int, Int> gens;
    gens[1] = 2;
    std::vector<Int> d = witt_dims(gens, max_order);
    for (int n = 1; n <= max_order; ++n) dims[n] = to_ll(d[n]);
  } else if (algebra == "lacm") {
    std::vector<Int> d = lacm_dims(max_order);
    for (int n = 1; n <= max_order; ++n) dims[n] = to_ll(d[n]);
  } else {
    auto cells = tree_dims(max_order);
    for (const auto& [key, v] : cells) dims[key.first] += v;
  }
  const std::string table = algebra + "_dims";
  if (format == "json") {
    Json doc;
    doc["table"] = table;
    doc["max_order"] = max_order;
    doc["rows"] = Json::array();
    for (int n = 1; n <= max_order; ++n) {
      Json row;
      row["n"] = n;
      row["dim"] = dims[n];
      doc["rows"].push_back(row);
    }
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "n,dim\n";
    for (int n = 1; n <= max_order; ++n) out << n << "," << dims[n] << "\n";
  } else {
    size_t width = 3;
    for (int n = 1; n <= max_order; ++n)
      width = std::max(width, std::to_string(dims[n]).size());
    out << std::setw(3) << "n" << "  " << std::setw(static_cast<int>(width)) << "dim" << "\n";
    for (int n = 1; n <= max_order; ++n)
      out << std::setw(3) << n << "  " << std::setw(static_cast<int>(width)) << dims[n] << "\n";
  }
  return 0;
}

int cmd_dims_bigraded(std::ostream& out, const std::string& algebra, int max_order,
                      const std::string& format) {
  /* cells[(order, degree)], zero-filled over 0..max_degree_at(order) */
  std::map<std::pair<int, int>, long long> cells;
  for (int n = 1; n <= max_order; ++n)
    for (int k = 0; k <= max_degree_at(n); ++k) cells[{n, k}] = 0;
  if (algebra == "lacm") {
    for (const auto& [key, v] : lacm_dims_bigraded(max_order)) cells[key] = to_ll(v);
  } else {
    for (const auto& [key, v] : tree_dims(max_order)) cells[key] = v;
  }
  const std::string table = algebra + "_bigraded";
  if (format == "json") {
    Json doc;
    doc["table"] = table;
    doc["max_order"] = max_order;
    doc["rows"] = Json::array();
    for (const auto& [key, v] : cells) {
      Json row;
      row["order"] = key.first;
      row["degree"] = key.second;
      row["dim"] = v;
      doc["rows"].push_back(row);
    }
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "order,degree,dim\n";
    for (const auto& [key, v] : cells)
      out << key.first << "," << key.second << "," << v << "\n";
  } else {
    out << "order  dim by degree (0, 1, 2, ...)\n";
    for (int n = 1; n <= max_order; ++n) {
      out << std::setw(5) << n << " ";
      for (int k = 0; k <= max_degree_at(n); ++k) out << " " << cells[{n, k}];
      out << "\n";
    }
  }
  return 0;
}

int cmd_entropy(std::ostream& out, const std::string& constant, int digits,
                const std::string& format) {
  std::string value, reciprocal, value_label, reciprocal_label;
  int levels = 0, n_max = 0;
  if (constant == "r" || constant == "alpha") {
    RootLimit lim = constant == "r" ? radius_r(digits) : entropy_alpha(digits);
    value = lim.value;
    reciprocal = lim.reciprocal;
    levels = lim.levels_used;
    value_label = constant;
    reciprocal_label = "1/" + constant;
  } else if (constant == "abelian") {
    value = abelian_entropy(digits);
    value_label = "r^(-1/2)";
  } else {  // eta
    n_max = 10000;
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << eta_estimate(n_max);
    value = os.str();
    value_label = "eta";
  }
  if (format == "json") {
    Json doc;
    doc["constant"] = constant;
    if (constant == "eta")
      doc["n_max"] = n_max;
    else
      doc["digits"] = digits;
    doc["value"] = value;
    if (!reciprocal.empty()) {
      doc["reciprocal"] = reciprocal;
      doc["levels"] = levels;
    }
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "constant,digits,value,reciprocal\n";
    out << constant << "," << (constant == "eta" ? n_max : digits) << "," << value << ","
        << reciprocal << "\n";
  } else {
    out << value_label << " = " << value << "\n";
    if (!reciprocal.empty()) out << reciprocal_label << " = " << reciprocal << "\n";
  }
  return 0;
}

int cmd_verify(std::ostream& out, const std::string& suite, int max_order, unsigned seed,
               const std::string& format) {
  std::vector<SuiteResult> results = run_suites(suite, max_order, seed);
  int total = 0, passed = 0;
  for (const auto& r : results)
    for (const auto& c : r.checks) {
      ++total;
      if (c.pass) ++passed;
    }
  bool all_pass = (passed == total);
  if (format == "json") {
    Json doc;
    doc["report"] = "verify";
    doc["suite"] = suite;
    doc["max_order"] = max_order;
    doc["seed"] = seed;
    doc["pass"] = all_pass;
    doc["suites"] = Json::array();
    for (const auto& r : results) {
      Json s;
      s["suite"] = r.suite;
      s["pass"] = r.pass;
      s["checks"] = Json::array();
      for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        s["checks"].push_back(cj);
      }
      doc["suites"].push_back(s);
    }
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "suite,check,pass,detail\n";
    for (const auto& r : results)
      for (const auto& c : r.checks)
        out << r.suite << "," << csv_quote(c.name) << "," << (c.pass ? "true" : "false") << ","
            << csv_quote(c.detail) << "\n";
  } else {
    for (const auto& r : results) {
      out << "suite " << r.suite << " (seed " << r.seed << ")\n";
      for (const auto& c : r.checks)
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "  (" << c.detail << ")\n";
    }
    out << "verify: " << passed << "/" << total << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_trees(std::ostream& out, int max_order, const std::string& format) {
  auto by_key = enumerate_trees(max_order);
  struct Row {
    int order, degree;
    std::string encoding;
  };
  std::vector<Row> rows;
  for (const auto& [key, list] : by_key)
    for (const auto& t : list) rows.push_back(Row{key.first, key.second, t.encoding()});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.encoding < b.encoding;
  });
  if (format == "json") {
    Json doc;
    doc["table"] = "trees";
    doc["max_order"] = max_order;
    doc["rows"] = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["order"] = r.order;
      row["degree"] = r.degree;
      row["encoding"] = r.encoding;
      doc["rows"].push_back(row);
    }
    emit_json(out, doc);
  } else if (format == "csv") {
    out << "order,degree,encoding\n";
    for (const auto& r : rows)
      out << r.order << "," << r.degree << "," << csv_quote(r.encoding) << "\n";
  } else {
    out << "order  degree  tree\n";
    for (const auto& r : rows)
      out << std::setw(5) << r.order << "  " << std::setw(6) << r.degree << "  " << r.encoding
          << "\n";
    out << "(" << rows.size() << " trees)\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie algebra of classical mechanics: bases, dimensions, growth constants, checks"};
  app.name("lacm");
  app.require_subcommand(1);

  std::string format = "text";
  const auto format_check = CLI::IsMember({"text", "csv", "json"});

  auto* hall = app.add_subcommand("hall", "List the generalized Hall basis with quotient classes");
  int hall_order = 6;
  bool quotient_only = false;
  hall->add_option("--max-order", hall_order, "Largest order to list (1..14)")
      ->check(CLI::Range(1, 14));
  hall->add_flag("--quotient", quotient_only, "Omit elements of the kinetic ideal");
  hall->add_option("--format", format, "Output format")->check(format_check);

  auto* dims = app.add_subcommand("dims", "Graded dimension tables");
  std::string algebra = "lacm";
  bool bigraded = false;
  int dims_order = 0;
  dims->add_option("--algebra", algebra, "Which algebra to measure")
      ->check(CLI::IsMember({"free", "lacm", "trees"}));
  dims->add_flag("--bigraded", bigraded, "Split each order by polynomial degree");
  dims->add_option("--max-order", dims_order, "Largest order (free/lacm: 64, trees: 18)")
      ->check(CLI::Range(1, 64));
  dims->add_option("--format", format, "Output format")->check(format_check);

  auto* entropy = app.add_subcommand("entropy", "Growth constants of the graded dimensions");
  std::string constant = "r";
  int digits = 20;
  entropy->add_option("--constant", constant, "Which constant")
      ->check(CLI::IsMember({"r", "alpha", "eta", "abelian"}));
  entropy->add_option("--digits", digits, "Significant digits (1..1000; ignored for eta)")
      ->check(CLI::Range(1, 1000));
  entropy->add_option("--format", format, "Output format")->check(format_check);

  auto* verify = app.add_subcommand("verify", "Symbolic verification suites");
  std::string suite = "all";
  int verify_order = 0;
  unsigned seed = 1;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-order", verify_order, "Scale override (0 = per-suite default)")
      ->check(CLI::Range(0, 14));
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--format", format, "Output format")->check(format_check);

  auto* trees = app.add_subcommand("trees", "List colored trees in canonical encoding");
  int trees_order = 8;
  trees->add_option("--max-order", trees_order, "Largest order to list (1..18)")
      ->check(CLI::Range(1, 18));
  trees->add_option("--format", format, "Output format")->check(format_check);

  std::vector<std::string> argv_store;
  argv_store.push_back("lacm");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hall->parsed()) return cmd_hall(out, hall_order, quotient_only, format);
    if (dims->parsed()) {
      if (dims_order == 0) dims_order = (algebra == "trees") ? 18 : 20;
      if (algebra == "trees" && dims_order > 18) {
        err << "error: --max-order for trees is limited to 18\n";
        return 2;
      }
      if (bigraded && algebra == "free") {
        err << "error: --bigraded is supported for lacm and trees\n";
        return 2;
      }
      return bigraded ? cmd_dims_bigraded(out, algebra, dims_order, format)
                      : cmd_dims_plain(out, algebra, dims_order, format);
    }
    if (entropy->parsed()) return cmd_entropy(out, constant, digits, format);
    if (verify->parsed()) return cmd_verify(out, suite, verify_order, seed, format);
    if (trees->parsed()) return cmd_trees(out, trees_order, format);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace lacm
