#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bkcodes.h"

namespace {

// exit codes: 0 success, 1 property failure, 2 input error, 3 cap exceeded
int exit_code_for(bk_status s) {
  switch (s) {
    case BK_OK:
      return 0;
    case BK_EPROPERTY:
    case BK_ENON_INTEGRAL:
      return 1;
    case BK_ETOO_LARGE:
    case BK_EMATRIX_TOO_LARGE:
    case BK_ECAP:
      return 3;
    default:
      return 2;
  }
}

int report_error(bk_status s) {
  std::cerr << "error: " << bk_status_name(s);
  const std::string detail = bk_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << "\n";
  return exit_code_for(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << doc;
  return 0;
}

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { bk_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear codes over B_k = F_{p^r}[v_1..v_k]/(v_i^2=v_i)"};
  app.require_subcommand(1);

  std::string spec_path, out_path, suite, predicate, metric = "hamming";
  std::uint32_t p = 2, r = 1, k = 1, n = 2, shift_index = 0;
  std::uint64_t seed = 0, cap = 0;
  bool inject_fault = false;

  auto* analyze = app.add_subcommand("analyze", "analyze one code spec");
  analyze->add_option("--spec", spec_path, "code spec document (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--out", out_path, "write the report here");
  analyze->add_option("--cap", cap, "enumeration cap override");
  analyze->add_option("--shift-index", shift_index, "shift index override");
  analyze->add_option("--metric", metric, "distance shown in the summary")
      ->check(CLI::IsMember({"hamming", "lee"}));

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite, "macwilliams|crt|duality|bounds|cyclic")
      ->required();
  verify->add_option("--p", p, "field characteristic");
  verify->add_option("--r", r, "field extension degree");
  verify->add_option("--k", k, "number of ring variables");
  verify->add_option("--n", n, "maximum code length");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--cap", cap, "enumeration cap");
  verify->add_flag("--inject-fault", inject_fault,
                   "corrupt one dual on purpose (negative-path test hook)");
  verify->add_option("--out", out_path, "write the report here");

  auto* search = app.add_subcommand("search", "search a parameter space");
  search
      ->add_option("--predicate", predicate,
                   "self_dual_euclid|self_dual_herm|mds|mdr|mlds|mldr")
      ->required();
  search->add_option("--p", p, "field characteristic");
  search->add_option("--r", r, "field extension degree");
  search->add_option("--k", k, "number of ring variables");
  search->add_option("--n", n, "code length");
  search->add_option("--seed", seed, "random seed");
  search->add_option("--cap", cap, "candidate budget");
  search->add_option("--out", out_path, "write the witness list here");

  auto* table = app.add_subcommand("ring-table", "dump the B_k element table");
  table->add_option("--p", p, "field characteristic");
  table->add_option("--r", r, "field extension degree");
  table->add_option("--k", k, "number of ring variables");
  table->add_option("--out", out_path, "write the table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (analyze->parsed()) {
    std::string spec_text;
    if (!read_file(spec_path, spec_text)) {
      std::cerr << "error: cannot read " << spec_path << "\n";
      return 2;
    }
    // flag overrides live in the options block of the document
    if (cap != 0 || shift_index != 0) {
      nlohmann::json j = nlohmann::json::parse(spec_text, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        std::cerr << "error: parse error: spec is not a JSON object\n";
        return 2;
      }
      if (cap != 0) j["options"]["cap"] = cap;
      if (shift_index != 0) j["options"]["shift_index"] = shift_index;
      spec_text = j.dump();
    }
    OwnedString doc;
    const bk_status s = bk_analyze_json(spec_text.c_str(), &doc.s);
    if (s != BK_OK) return report_error(s);
    const int rc = emit(doc.str(), out_path);
    if (rc != 0) return rc;
    nlohmann::json rep = nlohmann::json::parse(doc.str());
    std::ostringstream sum;
    sum << "analyze: |C| = " << rep["structure"]["cardinality"]
            .get<std::string>()
        << ", rank " << rep["structure"]["rank"].get<std::uint32_t>();
    if (rep.contains("bounds")) {
      const auto& d = rep["bounds"][metric == "lee" ? "d_lee" : "d_hamming"];
      sum << ", d_" << metric << " = ";
      if (d.is_null())
        sum << "infinity";
      else
        sum << d.get<std::uint32_t>();
    }
    std::cerr << sum.str() << "\n";
    return 0;
  }

  if (verify->parsed()) {
    nlohmann::json params{{"suite", suite}, {"p", p},       {"r", r},
                          {"k", k},         {"n", n},       {"seed", seed},
                          {"inject_fault", inject_fault}};
    if (cap != 0) params["cap"] = cap;
    OwnedString doc;
    const bk_status s = bk_verify_json(params.dump().c_str(), &doc.s);
    if (s != BK_OK && s != BK_EPROPERTY) return report_error(s);
    const int rc = emit(doc.str(), out_path);
    if (rc != 0) return rc;
    nlohmann::json rep = nlohmann::json::parse(doc.str());
    std::cerr << "verify " << suite << ": "
              << (s == BK_OK ? "PASS" : "FAIL") << " ("
              << rep["checks"].get<std::uint64_t>() << " checks, "
              << rep["failures"].size() << " failures)\n";
    return s == BK_OK ? 0 : 1;
  }

  if (search->parsed()) {
    nlohmann::json params{{"predicate", predicate}, {"p", p}, {"r", r},
                          {"k", k},                 {"n", n}, {"seed", seed}};
    if (cap != 0) params["budget"] = cap;
    OwnedString doc;
    const bk_status s = bk_search_json(params.dump().c_str(), &doc.s);
    if (s != BK_OK) return report_error(s);
    const int rc = emit(doc.str(), out_path);
    if (rc != 0) return rc;
    nlohmann::json rep = nlohmann::json::parse(doc.str());
    std::cerr << "search " << predicate << ": "
              << rep["witness_count"].get<std::uint64_t>()
              << " witnesses among "
              << rep["candidates_examined"].get<std::uint64_t>()
              << " candidates\n";
    return 0;
  }

  OwnedString doc;
  const bk_status s = bk_ring_table_json(p, r, k, &doc.s);
  if (s != BK_OK) return report_error(s);
  const int rc = emit(doc.str(), out_path);
  if (rc != 0) return rc;
  nlohmann::json rep = nlohmann::json::parse(doc.str());
  std::cerr << "ring-table: |B_" << k << "| = "
            << rep["order"].get<std::string>() << " over F_" << p;
  if (r > 1) std::cerr << "^" << r;
  std::cerr << "\n";
  return 0;
}
