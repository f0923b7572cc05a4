// liecc: command-line front end over the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecc/liecc.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInput = 1, kInternal = 2 };

struct Failure {
  int code;
  std::string message;
};

void check(liecc_status s) {
  if (s != LIECC_OK) throw Failure{static_cast<int>(s), liecc_last_error()};
}

struct AlgebraFree {
  void operator()(liecc_algebra* a) const { liecc_algebra_free(a); }
};
struct MatrixFree {
  void operator()(liecc_matrix* m) const { liecc_matrix_free(m); }
};
using AlgebraPtr = std::unique_ptr<liecc_algebra, AlgebraFree>;
using MatrixPtr = std::unique_ptr<liecc_matrix, MatrixFree>;

// Takes ownership of a C string from the library and parses it.
json take_json(char* raw) {
  std::string s(raw);
  liecc_string_free(raw);
  return json::parse(s);
}

std::string take_string(char* raw) {
  std::string s(raw);
  liecc_string_free(raw);
  return s;
}

// A file path, "-" for stdin, or inline JSON.
std::string read_input(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ostringstream ss;
  if (arg == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) throw Failure{kInput, "cannot read '" + arg + "'"};
  ss << in.rdbuf();
  return ss.str();
}

struct Globals {
  std::string field;   // empty: take it from the input
  std::string format = "text";
};

liecc_field field_or(const Globals& g, liecc_field fallback) {
  if (g.field.empty()) return fallback;
  return g.field == "complex" ? LIECC_FIELD_COMPLEX : LIECC_FIELD_REAL;
}

AlgebraPtr load_algebra(const Globals& g, const std::string& arg) {
  liecc_algebra* raw = nullptr;
  check(liecc_algebra_from_json(read_input(arg).c_str(), &raw));
  AlgebraPtr a(raw);
  liecc_field want = field_or(g, liecc_algebra_field(a.get()));
  if (want != liecc_algebra_field(a.get())) {
    check(liecc_algebra_with_field(a.get(), want, &raw));
    a.reset(raw);
  }
  return a;
}

MatrixPtr load_matrix(const std::string& arg) {
  liecc_matrix* raw = nullptr;
  check(liecc_matrix_from_json(read_input(arg).c_str(), &raw));
  return MatrixPtr(raw);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const json& arr, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

void print_matrix(const json& m, const std::string& indent) {
  for (const auto& row : m) std::cout << indent << "[" << join(row, ", ") << "]\n";
}

void render_check(const json& j) {
  std::cout << "field: " << j["field"].get<std::string>() << "\n";
  std::cout << "dim: " << j["dim"] << "\n";
  if (j.contains("complete")) {
    const json& c = j["complete"];
    std::cout << "complete: " << yes_no(c["complete"]) << "\n"
              << "  center dim: " << c["center_dim"] << "\n"
              << "  dim Der: " << c["dim_der"] << "\n"
              << "  dim ad: " << c["dim_ad"] << "\n";
  }
  if (j.contains("cocomplete")) {
    const json& c = j["cocomplete"];
    std::cout << "cocomplete: " << yes_no(c["cocomplete"]) << "\n"
              << "  dim Z2: " << c["dim_z2"] << "\n"
              << "  dim B2: " << c["dim_b2"] << "\n"
              << "  b2: " << c["b2"] << "\n";
  }
  std::cout << "betti: " << join(j["betti"]) << "\n";
}

void render_betti(const json& j) {
  std::cout << "field: " << j["field"].get<std::string>() << "\n";
  std::cout << " p  C^p  Z^p  B^p  b_p\n";
  for (std::size_t p = 0; p < j["betti"].size(); ++p) {
    char line[64];
    std::snprintf(line, sizeof line, "%2zu %4zu %4zu %4zu %4zu\n", p, j["cochain_dims"][p].get<std::size_t>(),
                  j["cocycle_dims"][p].get<std::size_t>(), j["coboundary_dims"][p].get<std::size_t>(),
                  j["betti"][p].get<std::size_t>());
    std::cout << line;
  }
}

void render_forms(const char* title, const json& forms) {
  std::cout << title << " (" << forms.size() << "):\n";
  for (const auto& f : forms) std::cout << "  " << f["form"].get<std::string>() << "\n";
}

void render_cohomology(const json& j) {
  const auto p = j["degree"].get<std::size_t>();
  std::cout << "degree " << p << ", field " << j["field"].get<std::string>() << "\n";
  render_forms(("Z^" + std::to_string(p)).c_str(), j["cocycles"]);
  render_forms(("B^" + std::to_string(p)).c_str(), j["coboundaries"]);
  render_forms(("H^" + std::to_string(p) + " representatives").c_str(), j["representatives"]);
}

void render_almost_abelian(const json& j) {
  const json& t = j["eigenvalue_test"];
  std::cout << "D (" << j["n"] << "x" << j["n"] << "), field " << j["field"].get<std::string>() << ":\n";
  print_matrix(j["D"], "  ");
  std::cout << "char poly: " << t["char_poly"]["text"].get<std::string>() << "\n"
            << "invertible: " << yes_no(t["invertible"]) << "\n"
            << "gcd(q(x), q(-x)): " << t["pair_gcd"]["text"].get<std::string>() << "\n"
            << "opposite eigenvalue pair: " << yes_no(t["eigen_pair_obstruction"]) << "\n"
            << "cocomplete: " << yes_no(t["cocomplete"]) << "\n"
            << "b2 via D action: " << j["b2_via_wedge_action"] << "\n";
  if (j.contains("cohomology")) std::cout << "b2 via cochains: " << j["cohomology"]["b2"] << "\n";
}

void render_propsim(const json& j) {
  if (!j["equivalent"].get<bool>()) {
    std::cout << "not equivalent (field " << j["field"].get<std::string>() << ")\n";
    return;
  }
  const json& w = j["witness"];
  std::cout << "alpha = " << w["alpha"].get<std::string>() << " (field " << j["field"].get<std::string>() << ")\n"
            << "invariant factors: " << join(w["invariants_first"], "; ") << "\n";
}

void render_classify(const json& j) {
  std::cout << "field: " << j["field"].get<std::string>() << ", " << j["family_count"] << " families\n";
  for (const auto& f : j["families"]) {
    std::cout << "\n" << f["name"].get<std::string>() << ": " << f["brackets"].get<std::string>() << "\n";
    if (!f["constraint"].get<std::string>().empty())
      std::cout << "  constraint: " << f["constraint"].get<std::string>() << "\n";
    std::cout << "  D = " << f["representative"].get<std::string>() << "\n";
    std::cout << "  cocomplete samples:";
    for (const auto& s : f["samples"]) std::cout << " " << s["label"].get<std::string>();
    std::cout << "\n";
    if (!f["rejected"].empty()) {
      std::cout << "  rejected:";
      for (const auto& s : f["rejected"]) std::cout << " " << s["label"].get<std::string>();
      std::cout << "\n";
    }
    for (const auto& id : f["identifications"])
      std::cout << "  " << id["first"].get<std::string>() << " ≅ " << id["second"].get<std::string>()
                << " (alpha = " << id["alpha"].get<std::string>() << ")\n";
  }
  for (const auto& id : j["absorbed"])
    std::cout << "\nabsorbed: " << id["first"].get<std::string>() << " ≅ " << id["second"].get<std::string>()
              << " (alpha = " << id["alpha"].get<std::string>() << ")";
  if (!j["absorbed"].empty()) std::cout << "\n";
  std::cout << "cross-family identifications: " << j["cross_family"].size() << "\n";
}

void render_catalog_list(const json& j) {
  for (const auto& e : j["entries"]) {
    std::string params = e["parameters"].empty() ? "" : "(" + join(e["parameters"], ", ") + ")";
    std::cout << e["name"].get<std::string>() << params << "  dim " << e["dim"];
    if (e["real_only"].get<bool>()) std::cout << "  real only";
    std::cout << "  complete " << yes_no(e["expect_complete"]) << ", cocomplete " << yes_no(e["expect_cocomplete"]);
    if (!e["constraint"].get<std::string>().empty()) std::cout << "  [" << e["constraint"].get<std::string>() << "]";
    std::cout << "\n";
  }
}

void render_catalog_verify(const json& j) {
  for (const auto& c : j["checks"]) {
    std::string params = c["params"].empty() ? "" : "(" + join(c["params"], ", ") + ")";
    bool ok = c["complete_ok"].get<bool>() && c["cocomplete_ok"].get<bool>();
    std::cout << (ok ? "pass " : "FAIL ") << c["name"].get<std::string>() << params << " ["
              << c["field"].get<std::string>() << "] complete=" << yes_no(c["complete"])
              << (c["complete_ok"].get<bool>() ? "" : " (expected otherwise)") << " cocomplete=" << yes_no(c["cocomplete"])
              << (c["cocomplete_ok"].get<bool>() ? "" : " (expected otherwise)") << "\n";
  }
  std::cout << j["checks"].size() << " checks, " << j["failures"] << " mismatches\n";
}

void output(const Globals& g, const json& j, void (*render)(const json&)) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    render(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completeness, cocompleteness and cohomology of Lie algebras given by structure constants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Ground field (default: from the input, real for matrices)")
      ->check(CLI::IsMember({"real", "complex"}));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string input, input2, subject = "both", filter = "all", name;
  std::size_t degree = 0;
  std::vector<std::string> params;

  auto* check_cmd = app.add_subcommand("check", "Decide completeness and/or cocompleteness");
  check_cmd->add_option("input", input, "Algebra document (path, - or inline JSON)")->required();
  check_cmd->add_option("--subject", subject)->check(CLI::IsMember({"complete", "cocomplete", "both"}));

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers b_0..b_n");
  betti_cmd->add_option("input", input)->required();

  auto* coh_cmd = app.add_subcommand("cohomology", "Explicit Z^p, B^p and H^p bases");
  coh_cmd->add_option("input", input)->required();
  coh_cmd->add_option("degree", degree, "Degree p")->required();

  auto* aa_cmd = app.add_subcommand("almost-abelian", "Cocompleteness of K^n + K e0 with [e0, v] = D v");
  aa_cmd->add_option("matrix", input, "Square matrix as a row list of fraction strings")->required();

  auto* ps_cmd = app.add_subcommand("propsim", "Find alpha with alpha D2 similar to D1");
  ps_cmd->add_option("first", input)->required();
  ps_cmd->add_option("second", input2)->required();

  auto* cls_cmd = app.add_subcommand("classify3", "Cocomplete 3-dimensional almost abelian families");

  auto* cat_cmd = app.add_subcommand("catalog", "Built-in algebras");
  cat_cmd->require_subcommand(1);
  cat_cmd->fallthrough();
  auto* cat_list = cat_cmd->add_subcommand("list", "List entries");
  cat_list->add_option("--filter", filter)->check(CLI::IsMember({"all", "complete", "cocomplete", "almost_abelian"}));
  auto* cat_show = cat_cmd->add_subcommand("show", "Export an entry as an algebra document");
  cat_show->add_option("name", name)->required();
  cat_show->add_option("--param", params, "Parameter values in order");
  auto* cat_verify = cat_cmd->add_subcommand("verify", "Check every sampled entry against its expected verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    char* raw = nullptr;
    if (*check_cmd) {
      auto a = load_algebra(g, input);
      check(liecc_check_json(a.get(), subject.c_str(), &raw));
      output(g, take_json(raw), render_check);
    } else if (*betti_cmd) {
      auto a = load_algebra(g, input);
      check(liecc_betti_json(a.get(), &raw));
      output(g, take_json(raw), render_betti);
    } else if (*coh_cmd) {
      auto a = load_algebra(g, input);
      check(liecc_cohomology_json(a.get(), degree, &raw));
      output(g, take_json(raw), render_cohomology);
    } else if (*aa_cmd) {
      auto d = load_matrix(input);
      check(liecc_almost_abelian_json(d.get(), field_or(g, LIECC_FIELD_REAL), &raw));
      output(g, take_json(raw), render_almost_abelian);
    } else if (*ps_cmd) {
      auto d1 = load_matrix(input);
      auto d2 = load_matrix(input2);
      check(liecc_propsim_json(d1.get(), d2.get(), field_or(g, LIECC_FIELD_REAL), &raw));
      output(g, take_json(raw), render_propsim);
    } else if (*cls_cmd) {
      check(liecc_classify3_json(field_or(g, LIECC_FIELD_REAL), &raw));
      output(g, take_json(raw), render_classify);
    } else if (*cat_list) {
      check(liecc_catalog_list(filter.c_str(), &raw));
      output(g, take_json(raw), render_catalog_list);
    } else if (*cat_show) {
      check(liecc_catalog_describe(name.c_str(), &raw));
      json entry = take_json(raw);
      if (params.empty() && !entry["parameters"].empty()) {
        for (const auto& s : entry["samples"][0]) params.push_back(s.get<std::string>());
        std::cerr << "note: no --param given, using sample (" << join(json(params), ", ") << ")\n";
      }
      std::vector<const char*> cparams;
      for (const auto& p : params) cparams.push_back(p.c_str());
      liecc_algebra* a = nullptr;
      check(liecc_catalog_instantiate(name.c_str(), cparams.data(), cparams.size(),
                                      field_or(g, LIECC_FIELD_REAL), &a));
      AlgebraPtr owned(a);
      check(liecc_algebra_to_json(owned.get(), &raw));
      std::cout << take_string(raw) << "\n";
    } else if (*cat_verify) {
      check(liecc_catalog_verify(&raw));
      output(g, take_json(raw), render_catalog_verify);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
