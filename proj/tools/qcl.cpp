// qcl: command-line front end over the C interface of libqcluster.
//
// Exit codes: 0 pass, 1 counterexample / failed check, 2 input error,
// 3 integrity failure, 4 exploration cut short by the node budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcluster/qcluster.h"

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;
constexpr int kIntegrity = 3;

struct SeedDeleter {
  void operator()(qcl_seed* s) const { qcl_seed_free(s); }
};
struct ReportDeleter {
  void operator()(qcl_report* r) const { qcl_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { qcl_string_free(s); }
};
using SeedPtr = std::unique_ptr<qcl_seed, SeedDeleter>;
using ReportPtr = std::unique_ptr<qcl_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(qcl_status status) {
  switch (status) {
    case QCL_OK: return kPass;
    case QCL_ERR_NOT_DIVISIBLE:
    case QCL_ERR_DIVISION_BY_ZERO:
    case QCL_ERR_NOT_Q_COMMUTING:
    case QCL_ERR_NON_INTEGER_EXPONENT:
    case QCL_ERR_INTEGRITY:
    case QCL_ERR_OVERFLOW:
    case QCL_ERR_INTERNAL:
      return kIntegrity;
    default:
      return kInputError;
  }
}

int report_error(qcl_status status, int code) {
  nlohmann::ordered_json err{{"error", qcl_status_name(status)}, {"message", qcl_last_error()}};
  std::cerr << err.dump() << '\n';
  return code;
}

int report_error(qcl_status status) { return report_error(status, exit_code_for(status)); }

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    nlohmann::ordered_json err{{"error", "IoError"}, {"message", "cannot read " + path}};
    std::cerr << err.dump() << '\n';
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text << '\n';
  if (!out) {
    nlohmann::ordered_json err{{"error", "IoError"}, {"message", "cannot write " + path}};
    std::cerr << err.dump() << '\n';
    return false;
  }
  return true;
}

std::string diag_text(const std::string& json_array) {
  std::string inner;
  for (char ch : json_array)
    if (ch != '[' && ch != ']' && ch != ' ') inner += ch;
  return "diag(" + inner + ")";
}

int load_seed(const std::string& path, SeedPtr& seed) {
  std::string text;
  if (!read_file(path, text)) return kInputError;
  qcl_seed* raw = nullptr;
  if (qcl_status st = qcl_seed_from_json(text.c_str(), &raw); st != QCL_OK) return report_error(st, kInputError);
  seed.reset(raw);
  return kPass;
}

int print_variables(const qcl_seed* seed) {
  char* text = nullptr;
  if (qcl_status st = qcl_seed_variables_text(seed, &text); st != QCL_OK) return report_error(st);
  StringPtr guard(text);
  std::cout << text;
  return kPass;
}

int save_seed(const qcl_seed* seed, const std::string& path) {
  char* json = nullptr;
  if (qcl_status st = qcl_seed_to_json(seed, &json); st != QCL_OK) return report_error(st);
  StringPtr guard(json);
  return write_file(path, json) ? kPass : kInputError;
}

int cmd_check_compat(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return kInputError;
  char* d = nullptr;
  const qcl_status st = qcl_check_compatible_json(text.c_str(), &d);
  if (st == QCL_ERR_NOT_BLOCK_DIAGONAL || st == QCL_ERR_NON_POSITIVE_D) return report_error(st, kCounterexample);
  if (st != QCL_OK) return report_error(st, kInputError);
  StringPtr guard(d);
  std::cout << "D = " << diag_text(d) << '\n';
  return kPass;
}

int cmd_mutate(const std::string& path, const std::string& word, const std::string& out_path) {
  SeedPtr seed;
  if (int rc = load_seed(path, seed)) return rc;
  qcl_seed* raw = nullptr;
  if (qcl_status st = qcl_seed_mutate_word(seed.get(), word.c_str(), &raw); st != QCL_OK) return report_error(st);
  SeedPtr mutated(raw);
  if (int rc = print_variables(mutated.get())) return rc;
  if (!out_path.empty()) return save_seed(mutated.get(), out_path);
  return kPass;
}

struct ExploreArgs {
  std::string path;
  unsigned depth = 1;
  bool matrix_only = false;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  bool up_to_permutation = false;
  std::string report_path;
};

int cmd_explore(const ExploreArgs& args) {
  qcl_explore_options options{};
  options.depth = args.depth;
  options.budget = args.budget;
  if (options.budget == 0) {
    if (const char* env = std::getenv("QCL_BUDGET")) {
      try {
        options.budget = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << R"({"error":"InvalidArgument","message":"QCL_BUDGET is not a number"})" << '\n';
        return kInputError;
      }
    }
  }
  options.jobs = args.jobs;
  options.count_up_to_permutation = args.up_to_permutation ? 1 : 0;

  qcl_report* raw = nullptr;
  if (args.matrix_only) {
    std::string text;
    if (!read_file(args.path, text)) return kInputError;
    if (qcl_status st = qcl_explore_matrix_json(text.c_str(), &options, &raw); st != QCL_OK) {
      return report_error(st, kInputError);
    }
  } else {
    SeedPtr seed;
    if (int rc = load_seed(args.path, seed)) return rc;
    if (qcl_status st = qcl_explore(seed.get(), &options, &raw); st != QCL_OK) {
      return report_error(st, st == QCL_ERR_INVALID_ARGUMENT ? kInputError : kIntegrity);
    }
  }
  ReportPtr report(raw);
  char* json = nullptr;
  if (qcl_status st = qcl_report_to_json(report.get(), &json); st != QCL_OK) return report_error(st);
  StringPtr guard(json);
  std::cout << json << '\n';
  if (!args.report_path.empty() && !write_file(args.report_path, json)) return kInputError;
  return qcl_report_exit_code(report.get());
}

int cmd_duplicate(const std::string& path, const std::string& out_path) {
  SeedPtr seed;
  if (int rc = load_seed(path, seed)) return rc;
  qcl_seed* raw = nullptr;
  if (qcl_status st = qcl_seed_duplicate(seed.get(), &raw); st != QCL_OK) return report_error(st);
  SeedPtr dup(raw);
  if (int rc = print_variables(dup.get())) return rc;
  if (!out_path.empty()) return save_seed(dup.get(), out_path);
  return kPass;
}

int cmd_lambda_from_bcd(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return kInputError;
  char* out = nullptr;
  if (qcl_status st = qcl_lambda_from_bcd_json(text.c_str(), &out); st != QCL_OK) return report_error(st, kInputError);
  StringPtr guard(out);
  std::cout << out << '\n';
  return kPass;
}

int cmd_periodicity(const std::string& path, const std::string& word) {
  SeedPtr seed;
  if (int rc = load_seed(path, seed)) return rc;
  char* out = nullptr;
  if (qcl_status st = qcl_periodicity_scan(seed.get(), word.c_str(), &out); st != QCL_OK) return report_error(st);
  StringPtr guard(out);
  std::cout << out << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cluster seeds: mutation, compatibility and integrability checks"};
  app.require_subcommand(1);

  std::string path, word, out_path;

  auto* check = app.add_subcommand("check-compat", "Print D with B^T Lambda = (D 0)");
  check->add_option("seed", path, "Seed JSON file")->required();

  auto* mutate = app.add_subcommand("mutate", "Apply a mutation word and print the new cluster");
  mutate->add_option("seed", path, "Seed JSON file")->required();
  mutate->add_option("--word,-w", word, "Comma-separated 1-based indices, e.g. 1,2,1");
  mutate->add_option("--out,-o", out_path, "Write the mutated seed here");

  ExploreArgs ex;
  auto* explore = app.add_subcommand("explore", "Breadth-first check of the mutation class");
  explore->add_option("seed", ex.path, "Seed JSON file")->required();
  explore->add_option("--depth,-d", ex.depth, "Maximum word length")->check(CLI::PositiveNumber);
  explore->add_flag("--matrix-only", ex.matrix_only, "Explore exchange matrices only (sign-coherence)");
  explore->add_option("--budget", ex.budget, "Node budget (default: $QCL_BUDGET or 100000)");
  explore->add_option("--jobs,-j", ex.jobs, "Worker threads")->check(CLI::PositiveNumber);
  explore->add_flag("--count-up-to-permutation", ex.up_to_permutation, "Also count seeds modulo relabelling");
  explore->add_option("--report", ex.report_path, "Write the JSON report here");

  auto* duplicate = app.add_subcommand("duplicate", "Build the duplicated principal seed");
  duplicate->add_option("seed", path, "Seed JSON file")->required();
  duplicate->add_option("--out,-o", out_path, "Write the duplicated seed here");

  auto* bcd = app.add_subcommand("lambda-from-bcd", "Solve for the block Lambda from B, C, D");
  bcd->add_option("input", path, "JSON file with B, C, D")->required();

  auto* period = app.add_subcommand("periodicity", "Compare a mutated seed with its start");
  period->add_option("seed", path, "Seed JSON file")->required();
  period->add_option("--word,-w", word, "Comma-separated 1-based indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  if (*check) return cmd_check_compat(path);
  if (*mutate) return cmd_mutate(path, word, out_path);
  if (*explore) return cmd_explore(ex);
  if (*duplicate) return cmd_duplicate(path, out_path);
  if (*bcd) return cmd_lambda_from_bcd(path);
  if (*period) return cmd_periodicity(path, word);
  return kInputError;
}
