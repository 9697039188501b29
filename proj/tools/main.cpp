#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bkn/center.hpp"
#include "bkn/conjugacy.hpp"
#include "bkn/error.hpp"
#include "bkn/selfcheck.hpp"
#include "bkn/wreath.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  int k = 1;
  int n = -1;  // -1: not given
  std::string perm, a, b, type, x, y, z, ns;
  std::int64_t budget = bkn::Budget{}.visits;
  bool pretty = false;
  bool json_errors = false;
};

bkn::Budget budget_of(const Options& opt) { return bkn::Budget{opt.budget}; }

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      bkn::fail(bkn::errc::parse_error, "bad sample list entry '" + item + "'");
    }
  }
  if (out.empty()) bkn::fail(bkn::errc::parse_error, "empty sample list");
  return out;
}

int run_type(const Options& opt) {
  const auto g = bkn::BlockPermutation::parse(opt.k, opt.perm);
  std::cout << bkn::type_of(g).to_string() << "\n";
  return 0;
}

int run_psi(const Options& opt) {
  const bkn::WreathElement w = bkn::psi(bkn::BlockPermutation::parse(opt.k, opt.perm));
  if (opt.pretty) {
    std::cout << w.cycle_form() << "\n";
    return 0;
  }
  ordered_json out;
  out["k"] = w.k();
  out["n"] = w.n();
  ordered_json locals = ordered_json::array();
  for (const bkn::Perm& s : w.locals()) locals.push_back(s.one_line());
  out["locals"] = std::move(locals);
  out["outer"] = w.outer().one_line();
  std::cout << out.dump() << "\n";
  return 0;
}

int run_multiply(const Options& opt) {
  const auto a = bkn::BlockPermutation::parse(opt.k, opt.a);
  const auto b = bkn::BlockPermutation::parse(opt.k, opt.b);
  const auto c = bkn::compose(a, b);
  std::cout << (opt.pretty ? c.perm().cycle_string() : c.one_line()) << "\n";
  return 0;
}

int run_class_size(const Options& opt) {
  const bkn::ClassType t = bkn::ClassType::parse(opt.k, opt.type);
  const bkn::BigInt size = opt.n < 0
                               ? bkn::class_size(t)
                               : bkn::extended_class_size(bkn::ProperClassFamily(t), opt.n);
  std::cout << size.str() << "\n";
  return 0;
}

int run_classes(const Options& opt) {
  const auto types = bkn::enumerate_class_types(opt.k, opt.n);
  if (opt.pretty) {
    size_t width = 0;
    for (const bkn::ClassType& t : types) width = std::max(width, t.to_string().size());
    for (const bkn::ClassType& t : types)
      std::cout << std::left << std::setw(static_cast<int>(width) + 2)
                << t.to_string() << bkn::class_size(t).str() << "\n";
    return 0;
  }
  ordered_json out = ordered_json::array();
  for (const bkn::ClassType& t : types) out.push_back(bkn::class_record_json(t));
  std::cout << out.dump() << "\n";
  return 0;
}

int run_product(const Options& opt) {
  const bkn::ClassType x = bkn::ClassType::parse(opt.k, opt.x);
  const bkn::ClassType y = bkn::ClassType::parse(opt.k, opt.y);
  const bkn::ClassExpansion e = bkn::class_product(x, y, budget_of(opt));
  if (opt.pretty) {
    for (const auto& [zt, c] : e.terms)
      std::cout << c.str() << "  " << zt.to_string() << "\n";
    return 0;
  }
  std::cout << bkn::expansion_json(e).dump() << "\n";
  return 0;
}

int run_coeff(const Options& opt) {
  if (opt.n < 0) {
    const bkn::ClassType x = bkn::ClassType::parse(opt.k, opt.x);
    const bkn::ClassType y = bkn::ClassType::parse(opt.k, opt.y);
    const bkn::ClassType z = bkn::ClassType::parse(opt.k, opt.z);
    std::cout << bkn::structure_coefficient(x, y, z, budget_of(opt)).str() << "\n";
    return 0;
  }
  const bkn::ProperClassFamily x{bkn::ClassType::parse(opt.k, opt.x)};
  const bkn::ProperClassFamily y{bkn::ClassType::parse(opt.k, opt.y)};
  const bkn::ProperClassFamily h{bkn::ClassType::parse(opt.k, opt.z)};
  const bkn::ProperCoefficient c = bkn::proper_coefficient(x, y, h, opt.n, budget_of(opt));
  if (c.boundary)
    std::cerr << "warning: n equals the largest class size; the polynomial "
                 "behaviour is only guaranteed above it\n";
  std::cout << c.value.str() << "\n";
  return 0;
}

int run_polyfit(const Options& opt) {
  const bkn::ProperClassFamily x{bkn::ClassType::parse(opt.k, opt.x)};
  const bkn::ProperClassFamily y{bkn::ClassType::parse(opt.k, opt.y)};
  const bkn::ProperClassFamily h{bkn::ClassType::parse(opt.k, opt.z)};
  const std::vector<int> ns =
      opt.ns.empty() ? bkn::default_sample_range(x, y, h) : parse_n_list(opt.ns);
  const bkn::PolynomialityReport r =
      bkn::polynomiality_report(x, y, h, ns, budget_of(opt));
  if (!opt.pretty) {
    std::cout << bkn::report_json(r).dump() << "\n";
    return 0;
  }
  std::cout << "points:";
  for (const auto& [n, c] : r.points) std::cout << " (" << n << ", " << c.str() << ")";
  std::cout << "\nfitted: " << r.fitted.to_string() << "\n"
            << "degree: " << r.fitted.degree() << " (bound " << r.degree_bound << ")\n"
            << "holdout exact: " << (r.holdout_exact ? "yes" : "no") << "\n"
            << "nonnegative in the falling-factorial basis: "
            << (r.nonnegative ? "yes" : "no") << "\n"
            << "within bound: " << (r.weak_bound ? "yes" : "no")
            << " (strictly below: " << (r.strict_bound ? "yes" : "no") << ")\n";
  return 0;
}

int run_verify(const Options& opt) {
  const auto checks = bkn::reference_checks(budget_of(opt));
  int failed = 0;
  for (const bkn::CheckResult& c : checks) {
    if (c.passed) {
      std::cout << "ok      " << c.name << "\n";
    } else {
      std::cout << "FAILED  " << c.name << ": " << c.detail << "\n";
      ++failed;
    }
  }
  if (failed == 0)
    std::cout << "all " << checks.size() << " golden identities passed\n";
  else
    std::cout << failed << " of " << checks.size() << " golden identities failed\n";
  return failed == 0 ? 0 : 1;
}

int run_enumerate(const Options& opt) {
  bkn::enumerate_group(
      opt.k, opt.n,
      [](const bkn::BlockPermutation& g) {
        std::cout << g.one_line() << "\n";
        return true;
      },
      budget_of(opt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conjugacy classes and central products for block permutation groups"};
  app.require_subcommand(1);
  Options opt;

  auto* cmd_type = app.add_subcommand("type", "conjugacy type of a block permutation");
  cmd_type->add_option("--k", opt.k, "block size")->required();
  cmd_type->add_option("--perm", opt.perm, "one-line permutation")->required();

  auto* cmd_psi = app.add_subcommand("psi", "wreath coordinates of a block permutation");
  cmd_psi->add_option("--k", opt.k, "block size")->required();
  cmd_psi->add_option("--perm", opt.perm, "one-line permutation")->required();

  auto* cmd_multiply = app.add_subcommand("multiply", "compose two block permutations");
  cmd_multiply->add_option("--k", opt.k, "block size")->required();
  cmd_multiply->add_option("--a", opt.a, "left factor, one-line")->required();
  cmd_multiply->add_option("--b", opt.b, "right factor, one-line")->required();

  auto* cmd_class_size = app.add_subcommand("class-size", "conjugacy class size");
  cmd_class_size->add_option("--k", opt.k, "block size")->required();
  cmd_class_size->add_option("--type", opt.type, "class type")->required();
  cmd_class_size->add_option(
      "--n", opt.n, "blocks to pad a proper type to before sizing");

  auto* cmd_classes = app.add_subcommand("classes", "list all conjugacy classes");
  cmd_classes->add_option("--k", opt.k, "block size")->required();
  cmd_classes->add_option("--n", opt.n, "number of blocks")->required();

  auto* cmd_product = app.add_subcommand("product", "expand a product of class sums");
  cmd_product->add_option("--k", opt.k, "block size")->required();
  cmd_product->add_option("--x", opt.x, "left class type")->required();
  cmd_product->add_option("--y", opt.y, "right class type")->required();

  auto* cmd_coeff = app.add_subcommand("coeff", "one structure coefficient");
  cmd_coeff->add_option("--k", opt.k, "block size")->required();
  cmd_coeff->add_option("--x", opt.x, "left class type")->required();
  cmd_coeff->add_option("--y", opt.y, "right class type")->required();
  cmd_coeff->add_option("--z", opt.z, "target class type")->required();
  cmd_coeff->add_option(
      "--n", opt.n, "blocks to pad proper types to before counting");

  auto* cmd_polyfit = app.add_subcommand(
      "polyfit", "fit the coefficient of proper families as a polynomial in n");
  cmd_polyfit->add_option("--k", opt.k, "block size")->required();
  cmd_polyfit->add_option("--x", opt.x, "left proper class type")->required();
  cmd_polyfit->add_option("--y", opt.y, "right proper class type")->required();
  cmd_polyfit->add_option("--z", opt.z, "target proper class type")->required();
  cmd_polyfit->add_option("--ns", opt.ns, "comma-separated sample values of n");

  auto* cmd_verify = app.add_subcommand("verify-paper",
                                        "run the built-in golden identity suite");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list a whole group");
  cmd_enumerate->add_option("--k", opt.k, "block size")->required();
  cmd_enumerate->add_option("--n", opt.n, "number of blocks")->required();

  for (CLI::App* sub : {cmd_type, cmd_psi, cmd_multiply, cmd_class_size, cmd_classes,
                        cmd_product, cmd_coeff, cmd_polyfit, cmd_verify, cmd_enumerate}) {
    sub->add_flag("--pretty", opt.pretty, "human-readable output");
    sub->add_flag("--json-errors", opt.json_errors, "report domain errors as JSON");
    sub->add_option("--budget", opt.budget, "cap on enumeration visits");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the help text or the usage error
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_type->parsed()) return run_type(opt);
    if (cmd_psi->parsed()) return run_psi(opt);
    if (cmd_multiply->parsed()) return run_multiply(opt);
    if (cmd_class_size->parsed()) return run_class_size(opt);
    if (cmd_classes->parsed()) return run_classes(opt);
    if (cmd_product->parsed()) return run_product(opt);
    if (cmd_coeff->parsed()) return run_coeff(opt);
    if (cmd_polyfit->parsed()) return run_polyfit(opt);
    if (cmd_verify->parsed()) return run_verify(opt);
    if (cmd_enumerate->parsed()) return run_enumerate(opt);
  } catch (const bkn::Error& e) {
    if (opt.json_errors) {
      ordered_json inner;
      inner["code"] = bkn::errc_name(e.code());
      inner["message"] = e.what();
      inner["detail"] = e.detail();
      ordered_json out;
      out["error"] = std::move(inner);
      std::cout << out.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: a subcommand is required
}
