#include "qcluster/explorer.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "qcluster/serialize.hpp"

namespace qcl {

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word word;
  std::string token;
  auto flush = [&](bool allow_empty) {
    if (token.empty()) {
      if (!allow_empty) fail(ErrorCode::Parse, "empty entry in mutation word '" + text + "'");
      return;
    }
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size() || v == 0 || token[0] == '-' || token[0] == '+') {
      fail(ErrorCode::Parse, "'" + token + "' is not a positive mutation index");
    }
    word.push_back(static_cast<std::size_t>(v - 1));
    token.clear();
  };
  bool any = false;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    any = true;
    if (ch == ',') {
      flush(false);
    } else {
      token += ch;
    }
  }
  if (any) flush(false);
  return word;
}

namespace {

struct Finding {
  std::string property;
  std::string detail;
};

template <typename Value>
struct Outcome {
  std::optional<Value> child;
  std::vector<Finding> edge_findings;  // apply to every edge
  std::vector<Finding> node_findings;  // apply once, when the child is new
  bool involution_checked = false;
  bool compatibility_checked = false;
  bool child_integrable = true;
  bool child_sign_coherent = true;
};

std::string coherence_detail(const SignCoherence& sc) {
  const auto& v = *sc.violation;
  return "column " + std::to_string(v.column + 1) + " has +ve row " + std::to_string(v.positive_row + 1) +
         " and -ve row " + std::to_string(v.negative_row + 1);
}

std::string property_for(const Error& e) {
  return e.code() == ErrorCode::NotDivisible ? "laurent" : "integrity";
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_matrix(const IntMatrix& m) {
  std::size_t h = m.rows() * 31 + m.cols();
  for (auto x : m.data()) hash_combine(h, std::hash<std::int64_t>{}(x));
  return h;
}

struct SeedPolicy {
  using Value = QuantumSeed;
  const Diagonal& root_d;

  static std::size_t rank(const Value& v) { return v.n(); }

  static std::size_t hash(const Value& s) {
    std::size_t h = hash_matrix(s.B());
    hash_combine(h, hash_matrix(s.Lambda()));
    for (const auto& var : s.vars()) {
      for (const auto& [a, c] : var.terms()) {
        for (auto x : a) hash_combine(h, std::hash<std::int64_t>{}(x));
        for (const auto& [e, v] : c.terms()) {
          hash_combine(h, std::hash<std::int64_t>{}(e));
          hash_combine(h, static_cast<std::size_t>(mpz_get_si(v.get_mpz_t())));
        }
      }
    }
    return h;
  }

  static std::vector<Finding> node_findings(const Value& s, bool& integrable, bool& coherent) {
    std::vector<Finding> out;
    try {
      integrable = is_integrable(s);
      if (!integrable) out.push_back({"integrable", "some Lambda_ij != 0 with i, j <= n"});
    } catch (const Error& e) {
      integrable = false;
      out.push_back({"integrable", e.what()});
    }
    const SignCoherence sc = is_sign_coherent(s.B());
    coherent = sc.coherent();
    if (!coherent) out.push_back({"sign-coherent", coherence_detail(sc)});
    return out;
  }

  std::vector<Finding> root_findings(const Value& s, bool& integrable, bool& coherent) const {
    std::vector<Finding> out;
    try {
      if (!(recover_lambda(s.vars()) == s.Lambda())) out.push_back({"lambda-consistency", "recovered Lambda differs"});
    } catch (const Error& e) {
      out.push_back({"lambda-consistency", e.what()});
    }
    auto more = node_findings(s, integrable, coherent);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }

  static Value mutate(const Value& s, std::size_t j) { return mutate_seed(s, j); }

  Outcome<Value> expand(const Value& parent, std::size_t j) const {
    Outcome<Value> out;
    try {
      Value child = mutate_seed(parent, j);
      out.involution_checked = true;
      if (!(mutate_seed(child, j) == parent)) out.edge_findings.push_back({"involution", "mu_j(mu_j(S)) != S"});
      out.compatibility_checked = true;
      try {
        if (check_compatible(child.B(), child.Lambda()) != root_d) {
          out.edge_findings.push_back({"compatibility", "D differs from the root"});
        }
      } catch (const Error& e) {
        out.edge_findings.push_back({"compatibility", e.what()});
      }
      out.node_findings = node_findings(child, out.child_integrable, out.child_sign_coherent);
      out.child = std::move(child);
    } catch (const Error& e) {
      out.edge_findings.push_back({property_for(e), e.what()});
    }
    return out;
  }
};

struct MatrixPolicy {
  using Value = IntMatrix;

  static std::size_t rank(const Value& v) { return v.cols(); }
  static std::size_t hash(const Value& m) { return hash_matrix(m); }

  static std::vector<Finding> node_findings(const Value& B, bool& coherent) {
    const SignCoherence sc = is_sign_coherent(B);
    coherent = sc.coherent();
    if (coherent) return {};
    return {{"sign-coherent", coherence_detail(sc)}};
  }

  std::vector<Finding> root_findings(const Value& B, bool& integrable, bool& coherent) const {
    integrable = true;
    return node_findings(B, coherent);
  }

  static Value mutate(const Value& B, std::size_t j) { return mutate_matrix(B, j); }

  Outcome<Value> expand(const Value& parent, std::size_t j) const {
    Outcome<Value> out;
    try {
      Value child = mutate_matrix(parent, j);
      out.involution_checked = true;
      if (!(mutate_matrix(child, j) == parent)) out.edge_findings.push_back({"involution", "mu_j(mu_j(B)) != B"});
      out.node_findings = node_findings(child, out.child_sign_coherent);
      out.child = std::move(child);
    } catch (const Error& e) {
      out.edge_findings.push_back({"integrity", e.what()});
    }
    return out;
  }
};

template <typename Policy>
class Bfs {
 public:
  using Value = typename Policy::Value;

  Bfs(Policy policy, const ExploreOptions& options, ExplorationReport& report)
      : policy_(std::move(policy)), options_(options), report_(report) {}

  void run(const Value& root) {
    bool integrable = true, coherent = true;
    auto findings = policy_.root_findings(root, integrable, coherent);
    note_node(integrable, coherent);
    record({}, findings);
    insert(Word{}, root);
    report_.nodes_visited = 1;

    std::vector<std::size_t> frontier{0};
    report_.closed = false;
    for (unsigned level = 1; level <= options_.depth; ++level) {
      std::vector<std::pair<std::size_t, std::size_t>> tasks;
      for (std::size_t idx : frontier) {
        const Word& w = nodes_[idx].first;
        for (std::size_t j = 0; j < Policy::rank(nodes_[idx].second); ++j) {
          if (!w.empty() && w.back() == j) continue;
          tasks.emplace_back(idx, j);
        }
      }
      if (tasks.empty()) {
        report_.closed = true;
        return;
      }
      const std::uint64_t remaining = options_.budget > report_.nodes_visited ? options_.budget - report_.nodes_visited : 0;
      if (tasks.size() > remaining) {
        tasks.resize(static_cast<std::size_t>(remaining));
        report_.complete = false;
      }
      auto outcomes = expand_all(tasks);

      std::vector<std::size_t> next;
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        auto& out = outcomes[t];
        Word word = nodes_[tasks[t].first].first;
        word.push_back(tasks[t].second);
        ++report_.nodes_visited;
        if (out.involution_checked) ++report_.edge_checks.involution;
        if (out.compatibility_checked) ++report_.edge_checks.compatibility;
        record(word, out.edge_findings);
        if (!out.child) continue;
        if (find(*out.child)) continue;
        note_node(out.child_integrable, out.child_sign_coherent);
        record(word, out.node_findings);
        next.push_back(insert(std::move(word), std::move(*out.child)));
      }
      if (!report_.complete) return;
      if (next.empty()) {
        report_.closed = true;
        return;
      }
      frontier = std::move(next);
    }
    report_.closed = probe_closure(frontier);
  }

  const std::vector<std::pair<Word, Value>>& nodes() const { return nodes_; }

 private:
  void note_node(bool integrable, bool coherent) {
    if (!integrable && report_.all_integrable.has_value()) report_.all_integrable = false;
    if (!coherent) report_.all_sign_coherent = false;
  }

  void record(const Word& word, const std::vector<Finding>& findings) {
    for (const auto& f : findings) {
      report_.counterexamples.push_back({word, f.property, f.detail});
      if (f.property == "integrable" && report_.all_integrable.has_value()) report_.all_integrable = false;
      if (f.property == "sign-coherent") report_.all_sign_coherent = false;
    }
  }

  bool find(const Value& v) const {
    auto it = index_.find(Policy::hash(v));
    if (it == index_.end()) return false;
    for (std::size_t idx : it->second)
      if (nodes_[idx].second == v) return true;
    return false;
  }

  std::size_t insert(Word word, Value v) {
    const std::size_t idx = nodes_.size();
    index_[Policy::hash(v)].push_back(idx);
    if constexpr (std::is_same_v<Value, QuantumSeed>) {
      if (options_.visitor) options_.visitor(word, v);
    }
    nodes_.emplace_back(std::move(word), std::move(v));
    ++report_.distinct_seeds;
    return idx;
  }

  std::vector<Outcome<Value>> expand_all(const std::vector<std::pair<std::size_t, std::size_t>>& tasks) {
    std::vector<Outcome<Value>> outcomes(tasks.size());
    const unsigned jobs = std::max(1u, options_.jobs);
    if (jobs == 1 || tasks.size() < 2) {
      for (std::size_t t = 0; t < tasks.size(); ++t)
        outcomes[t] = policy_.expand(nodes_[tasks[t].first].second, tasks[t].second);
      return outcomes;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < std::min<std::size_t>(jobs, tasks.size()); ++w) {
        workers.emplace_back([&] {
          for (std::size_t t = next++; t < tasks.size(); t = next++) {
            try {
              outcomes[t] = policy_.expand(nodes_[tasks[t].first].second, tasks[t].second);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
    return outcomes;
  }

  bool probe_closure(const std::vector<std::size_t>& frontier) const {
    try {
      for (std::size_t idx : frontier) {
        const auto& [word, value] = nodes_[idx];
        for (std::size_t j = 0; j < Policy::rank(value); ++j) {
          if (!word.empty() && word.back() == j) continue;
          if (!find(Policy::mutate(value, j))) return false;
        }
      }
    } catch (const Error&) {
      return false;
    }
    return true;
  }

  Policy policy_;
  const ExploreOptions& options_;
  ExplorationReport& report_;
  std::vector<std::pair<Word, Value>> nodes_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
};

void check_options(const ExploreOptions& options) {
  if (options.depth < 1) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  if (options.budget < 1) fail(ErrorCode::InvalidArgument, "node budget must be positive");
}

}  // namespace

int ExplorationReport::exit_code() const {
  if (!counterexamples.empty()) return 1;
  if (!complete) return 4;
  return 0;
}

std::string ExplorationReport::to_json() const {
  Json j = Json::object();
  j["mode"] = mode;
  j["rootDigest"] = root_digest;
  j["depth"] = depth;
  j["budget"] = budget;
  j["nodesVisited"] = nodes_visited;
  j["distinctSeeds"] = distinct_seeds;
  if (distinct_up_to_permutation) j["distinctUpToPermutation"] = *distinct_up_to_permutation;
  j["allIntegrable"] = all_integrable ? Json(*all_integrable) : Json(nullptr);
  j["allSignCoherent"] = all_sign_coherent;
  j["complete"] = complete;
  j["closed"] = closed;
  j["edgeChecks"] = Json{{"involution", edge_checks.involution}, {"compatibility", edge_checks.compatibility}};
  Json ces = Json::array();
  for (const auto& c : counterexamples) {
    ces.push_back(Json{{"word", word_to_string(c.word)}, {"property", c.property}, {"detail", c.detail}});
  }
  j["counterexamples"] = std::move(ces);
  return j.dump(2);
}

ExplorationReport explore(const QuantumSeed& root, const ExploreOptions& options) {
  check_options(options);
  ExplorationReport report;
  report.mode = "seed";
  report.root_digest = seed_digest(root);
  report.depth = options.depth;
  report.budget = options.budget;
  report.all_integrable = true;
  Bfs<SeedPolicy> bfs(SeedPolicy{root.D()}, options, report);
  bfs.run(root);
  if (options.count_up_to_permutation) {
    std::vector<const QuantumSeed*> reps;
    for (const auto& [word, seed] : bfs.nodes()) {
      bool seen = false;
      for (const auto* r : reps) {
        if (equal_up_to_permutation(seed, *r)) {
          seen = true;
          break;
        }
      }
      if (!seen) reps.push_back(&seed);
    }
    report.distinct_up_to_permutation = reps.size();
  }
  return report;
}

ExplorationReport check_total_sign_coherence(const IntMatrix& B, const ExploreOptions& options) {
  check_options(options);
  if (B.cols() == 0 || B.cols() > B.rows()) fail(ErrorCode::DimensionMismatch, "B must be m x n with 1 <= n <= m");
  ExplorationReport report;
  report.mode = "matrix";
  report.root_digest = matrix_digest(B);
  report.depth = options.depth;
  report.budget = options.budget;
  Bfs<MatrixPolicy> bfs(MatrixPolicy{}, options, report);
  bfs.run(B);
  return report;
}

PeriodicityResult periodicity_scan(const QuantumSeed& seed, const Word& word) {
  const QuantumSeed result = mutate_word(seed, word);
  PeriodicityResult out;
  out.returns_to_start = result == seed;
  if (auto sigma = equal_up_to_permutation(result, seed)) {
    out.up_to_permutation = true;
    out.permutation = std::move(*sigma);
  }
  return out;
}

}  // namespace qcl
