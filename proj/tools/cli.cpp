#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "alexq/classify.hpp"
#include "alexq/error.hpp"
#include "alexq/formats.hpp"
#include "alexq/linearq.hpp"
#include "alexq/quandle.hpp"

namespace alexq::cli {

namespace {

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

// A module spec, or failing that a Cayley table file.
CayleyTable resolve_table(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_table_file(arg);
  return alexander_table(parse_module_spec(arg));
}

std::string witness_to_string(const std::vector<std::size_t>& f) {
  std::string s;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (a) s += ' ';
    s += std::to_string(a) + "->" + std::to_string(f[a]);
  }
  return s;
}

struct ClassifyArgs {
  std::size_t order = 0;
  std::string format = "text";
  bool connected_only = false;
  unsigned threads = 1;
  bool no_cache = false;
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
  ClassifyOptions options;
  options.threads = a.threads;
  std::optional<FileCarrierCache> cache;
  if (!a.no_cache) {
    cache.emplace(default_cache_directory());
    options.cache = &*cache;
  }
  const auto report = classify_order(a.order, options);
  if (a.format == "json") {
    if (a.connected_only) {
      auto filtered = report;
      std::erase_if(filtered.classes, [](const QuandleClass& c) { return !c.connected; });
      out << report_to_json(filtered);
    } else {
      out << report_to_json(report);
    }
  } else if (a.format == "csv") {
    out << report_to_csv(report, a.connected_only);
  } else {
    out << report_to_text(report, a.connected_only);
  }
  return kOk;
}

int do_linear(int n, std::ostream& out) {
  out << "units mod " << n << ":\n";
  for (int a = 0; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    const auto module = build_linear(LinearQuandleSpec(n, a));
    out << "  Λ" << n << "/t-" << a << "  N=" << capital_n(n, a)
        << "  (1-t)M = " << canonical_label(image_one_minus_t(module)).text << "\n";
  }
  const auto classes = classify_linear(n);
  out << "classes:";
  for (const auto& cls : classes) {
    out << " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
    out << "}";
  }
  out << "\n" << classes.size() << " classes\n";
  return kOk;
}

int do_cayley(const std::string& spec, const std::string& path, std::ostream& out) {
  const auto text = format_table(alexander_table(parse_module_spec(spec)));
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write " + path);
  file << text;
  return kOk;
}

int do_check(const std::string& path, std::ostream& out) {
  const auto table = read_table_file(path);
  const auto verdict = check_axioms(table);
  if (!verdict.ok) {
    out << "not a quandle: axiom " << verdict.axiom << ": " << verdict.message << "\n";
    return kNegative;
  }
  out << "quandle of order " << table.size() << ", " << orbits(table).size() << " orbit(s)\n";
  return kOk;
}

int do_iso(const std::string& a, const std::string& b, std::ostream& out) {
  const auto qa = resolve_table(a);
  const auto qb = resolve_table(b);
  for (const auto* q : {&qa, &qb})
    if (const auto v = check_axioms(*q); !v.ok) throw InvalidArgument("input is not a quandle: " + v.message);
  if (const auto f = brute_force_isomorphic(qa, qb)) {
    out << "isomorphic\nwitness: " << witness_to_string(*f) << "\n";
    return kOk;
  }
  out << "not isomorphic\n";
  return kNegative;
}

int do_image(const std::string& spec, std::ostream& out) {
  const auto module = parse_module_spec(spec);
  const auto image = image_one_minus_t(module);
  out << "module: " << module.to_string() << "\n";
  out << "label: " << canonical_label(image).text << "\n";
  out << "image: " << image.to_string() << "\n";
  out << "connected: " << (is_connected(module) ? "yes" : "no") << "\n";
  return kOk;
}

int do_cross_validate(std::size_t order, std::ostream& out) {
  const auto result = cross_validate(order);
  for (const auto& [spec, phi] : result.matches) out << "  " << spec.label() << "  <->  " << phi.to_string() << "\n";
  out << (result.ok ? "ok: " : "mismatch: ") << result.message << "\n";
  return result.ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification of finite Alexander quandles", "alexq"};
  app.require_subcommand(1, 1);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Classify all Alexander quandles of an order");
  classify->add_option("--order", classify_args.order, "Quandle order")->required()->check(CLI::PositiveNumber);
  classify->add_option("--format", classify_args.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  classify->add_flag("--connected-only", classify_args.connected_only, "List connected classes only");
  classify->add_option("--threads", classify_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_flag("--no-cache", classify_args.no_cache, "Ignore the carrier cache ($ALEXQ_CACHE)");

  int linear_n = 0;
  auto* linear = app.add_subcommand("linear", "Classify the linear quandles Λn/(t−a)");
  linear->add_option("--n", linear_n, "Modulus")->required()->check(CLI::PositiveNumber);

  std::string cayley_module;
  std::string cayley_out;
  auto* cayley = app.add_subcommand("cayley", "Print the Cayley table of a module's Alexander quandle");
  cayley->add_option("--module", cayley_module, "Module spec (L16/3 or 4,4|0,1;3,2)")->required();
  cayley->add_option("--out", cayley_out, "Write to FILE instead of stdout");

  std::string check_table;
  auto* check = app.add_subcommand("check", "Check the quandle axioms of a Cayley table file");
  check->add_option("--table", check_table, "Table file")->required();

  std::string iso_a;
  std::string iso_b;
  auto* iso = app.add_subcommand("iso", "Decide quandle isomorphism by exhaustive search");
  iso->add_option("--a", iso_a, "Module spec or table file")->required();
  iso->add_option("--b", iso_b, "Module spec or table file")->required();

  std::string image_module;
  auto* image = app.add_subcommand("image", "Compute Im(1-t) and its label");
  image->add_option("--module", image_module, "Module spec")->required();

  std::size_t cv_order = 0;
  auto* cross = app.add_subcommand("cross-validate", "Match polynomial chains against conjugacy classes over (Z_p)^k");
  cross->add_option("--order", cv_order, "Prime power order")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"alexq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  try {
    if (*classify) return do_classify(classify_args, out);
    if (*linear) return do_linear(linear_n, out);
    if (*cayley) return do_cayley(cayley_module, cayley_out, out);
    if (*check) return do_check(check_table, out);
    if (*iso) return do_iso(iso_a, iso_b, out);
    if (*image) return do_image(image_module, out);
    if (*cross) return do_cross_validate(cv_order, out);
  } catch (const BudgetError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace alexq::cli
