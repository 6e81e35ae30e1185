#include "semicomm/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "semicomm/algebra.hpp"
#include "semicomm/constructions.hpp"
#include "semicomm/json_io.hpp"
#include "semicomm/order.hpp"
#include "semicomm/search.hpp"
#include "semicomm/verifier.hpp"

namespace semicomm {

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Re-throws semantic input errors with the source file attached, so messages
// read "in pair.json: matrix \"A\": entry (1,2): ...".
template <typename Fn>
auto parsed_from(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("in " + path + ": " + e.what());
  }
}

// Generators for `dim`: a JSON array of matrices, or a pair object.
std::vector<QMatrix> generators_from_json(const json& j) {
  std::vector<QMatrix> gens;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      gens.push_back(matrix_from_json(j[i], "[" + std::to_string(i) + "]"));
    return gens;
  }
  if (j.is_object()) {
    for (const char* key : {"A", "B", "E", "F"})
      if (j.contains(key)) gens.push_back(matrix_from_json(j[key], key));
    if (!gens.empty()) return gens;
  }
  throw std::invalid_argument(
      "expected a JSON array of matrices or an object with keys A/B (or E/F)");
}

int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
  const json j = load_json_file(path);
  const MatrixPair pair = parsed_from(path, [&] { return pair_from_json(j); });
  const QMatrix& a = pair.a;
  const QMatrix& b = pair.b;
  require_same_square(a, b, "analyze");
  const QMatrix sum = a + b;

  const SignClass sa = sign_class(a), sb = sign_class(b);
  const SignClass sc = commutator_sign(a, b);
  const bool a_pos = is_positive_matrix(a), b_pos = is_positive_matrix(b);
  const bool sum_pos = a_pos && b_pos;

  json report;
  report["n"] = a.rows();
  report["A_sign"] = to_string(sa);
  report["B_sign"] = to_string(sb);
  report["commutator_sign"] = to_string(sc);
  report["semi_commuting"] = (sc != SignClass::Mixed);
  report["A_ideal_irreducible"] = a_pos ? json(is_ideal_irreducible(a)) : json(nullptr);
  report["B_ideal_irreducible"] = b_pos ? json(is_ideal_irreducible(b)) : json(nullptr);
  if (sum_pos) {
    const IdealChain chain = invariant_ideal_chain(sum);
    json blocks = json::array();
    for (Index s : chain.block_sizes) blocks.push_back(s);
    report["sum_ideal_irreducible"] = is_ideal_irreducible(sum);
    report["chain_block_sizes"] = blocks;
    report["refined_bound"] = refined_bound(a, b);
  } else {
    report["sum_ideal_irreducible"] = nullptr;
    report["chain_block_sizes"] = nullptr;
    report["refined_bound"] = nullptr;
  }
  report["gauss_bound"] = a.rows() * (a.rows() + 1) / 2;

  if (as_json) {
    out << dump(report);
    return kOk;
  }
  out << "A: " << a.rows() << "x" << a.cols() << "  sign=" << to_string(sa)
      << "  ideal-irreducible="
      << (a_pos ? (report["A_ideal_irreducible"].get<bool>() ? "yes" : "no") : "n/a") << "\n";
  out << "B: " << b.rows() << "x" << b.cols() << "  sign=" << to_string(sb)
      << "  ideal-irreducible="
      << (b_pos ? (report["B_ideal_irreducible"].get<bool>() ? "yes" : "no") : "n/a") << "\n";
  out << "[A,B]: sign=" << to_string(sc)
      << (sc == SignClass::Mixed ? "  (not semi-commuting)" : "  (semi-commuting)") << "\n";
  if (sum_pos) {
    out << "A+B: ideal-irreducible=" << (report["sum_ideal_irreducible"].get<bool>() ? "yes" : "no")
        << "  chain-blocks=[";
    const auto& blocks = report["chain_block_sizes"];
    for (std::size_t i = 0; i < blocks.size(); ++i)
      out << (i ? ", " : "") << blocks[i].get<long>();
    out << "]\n";
    out << "refined dimension bound: " << report["refined_bound"].get<long>()
        << "   (n(n+1)/2 = " << report["gauss_bound"].get<long>() << ")\n";
  } else {
    out << "A+B: not entrywise nonnegative; chain and refined bound n/a\n";
  }
  return kOk;
}

int cmd_dim(const std::string& path, bool with_basis, bool as_json, std::ostream& out) {
  const json j = load_json_file(path);
  const std::vector<QMatrix> gens = parsed_from(path, [&] { return generators_from_json(j); });
  const AlgebraBasis basis = unital_algebra_basis(gens);

  if (as_json) {
    json words = json::array();
    for (const Word& w : basis.basis_words) words.push_back(word_label(w));
    json report{{"n", basis.n}, {"dim", basis.dim}, {"basis_words", words}};
    if (with_basis) {
      json mats = json::array();
      for (const QMatrix& m : basis.basis_matrices) mats.push_back(matrix_to_json(m));
      report["basis"] = mats;
    }
    out << dump(report);
    return kOk;
  }
  out << "dim = " << basis.dim << "\n";
  out << "basis words:";
  for (const Word& w : basis.basis_words) out << " " << word_label(w);
  out << "\n";
  if (with_basis) {
    json mats = json::array();
    for (const QMatrix& m : basis.basis_matrices) mats.push_back(matrix_to_json(m));
    out << dump(mats);
  }
  return kOk;
}

struct ConstructArgs {
  std::string name;
  long n = 0;
  bool has_n = false;
  std::vector<std::string> coeffs;
  std::vector<long> sizes;
  long m = 0;
  bool has_m = false;
  std::string family = "diag_dominated";
  std::uint64_t seed = 0;
  bool has_seed = false;
};

int cmd_construct(const ConstructArgs& args, bool as_json, std::ostream& out,
                  std::ostream& err) {
  (void)as_json;  // construct always emits JSON
  const auto need_n = [&]() {
    if (!args.has_n) throw std::invalid_argument("construct " + args.name + " requires --n");
    return static_cast<Index>(args.n);
  };
  const auto pair_json = [](const QMatrix& a, const QMatrix& b) {
    return pair_to_json(MatrixPair{a, b});
  };

  json output;
  if (args.name == "jordan") {
    output = matrix_to_json(jordan_block(need_n()));
  } else if (args.name == "cycle") {
    output = matrix_to_json(cycle(need_n()));
  } else if (args.name == "companion") {
    if (args.coeffs.empty())
      throw std::invalid_argument("construct companion requires --coeffs a0 a1 ...");
    CompanionSpec spec;
    for (const std::string& c : args.coeffs) spec.coefficients.push_back(rational_from_string(c));
    output = matrix_to_json(companion(spec));
  } else if (args.name == "permutation") {
    if (args.sizes.empty())
      throw std::invalid_argument("construct permutation requires --sizes n1 n2 ...");
    std::vector<Index> sizes(args.sizes.begin(), args.sizes.end());
    output = matrix_to_json(permutation_from_cycle_type(sizes));
  } else if (args.name == "gerstenhaber") {
    const auto [a, b] = gerstenhaber_witness(need_n());
    output = pair_json(a, b);
  } else if (args.name == "intertwiners") {
    if (!args.has_m) throw std::invalid_argument("construct intertwiners requires --m and --n");
    json list = json::array();
    for (const QMatrix& u : intertwiner_basis(static_cast<Index>(args.m), need_n()))
      list.push_back(matrix_to_json(u));
    output = list;
  } else if (args.name == "idem7") {
    const IdempotentPair p = idempotent_pair_7x7();
    output = pair_json(p.e, p.f);
  } else if (args.name == "idem3") {
    const IdempotentPair p = idempotent_pair_3x3();
    output = pair_json(p.e, p.f);
  } else if (args.name == "catalan") {
    const IdempotentPair p = catalan_idempotent_pair(need_n());
    output = pair_json(p.e, p.f);
  } else if (args.name == "random-pair") {
    if (!args.has_seed)
      throw std::invalid_argument("construct random-pair requires an explicit --seed");
    const auto family = pair_family_from_string(args.family);
    if (!family) throw std::invalid_argument("unknown family: " + args.family);
    const auto [a, b] = random_semicommuting_pair(need_n(), *family, args.seed);
    output = pair_json(a, b);
  } else {
    err << "unknown construction: " << args.name << "\n";
    return kUsage;
  }
  out << dump(output);
  return kOk;
}

void print_report_text(const TheoremReport& report, std::ostream& out) {
  out << report.theorem_id << ": " << to_string(report.outcome) << "\n";
  for (const auto& [key, value] : report.details) out << "  " << key << " = " << value << "\n";
}

json report_to_json(const TheoremReport& report) {
  json details = json::object();
  for (const auto& [key, value] : report.details) details[key] = value;
  return json{{"theorem", report.theorem_id},
              {"instance_digest", report.instance_digest},
              {"outcome", to_string(report.outcome)},
              {"details", details}};
}

int cmd_verify_instance(const std::string& theorem, const std::string& path, bool as_json,
                        std::ostream& out) {
  const Instance inst = parsed_from(path, [&] { return Instance::from_json(load_json_file(path)); });
  const TheoremReport report = check(theorem, inst);
  if (as_json)
    out << dump(report_to_json(report));
  else
    print_report_text(report, out);
  return report.outcome == Outcome::Violated ? kViolated : kOk;
}

int cmd_verify_suite(Index n_max, long trials, std::uint64_t seed, int jobs,
                     const std::optional<std::string>& only, bool as_json, std::ostream& out) {
  const SuiteResult result = run_suite(n_max, trials, seed, jobs, only);
  if (as_json) {
    out << dump(result.to_json());
  } else {
    out << "theorem      holds  not-applicable  violated\n";
    for (const auto& row : result.rows) {
      out << row.theorem_id;
      for (std::size_t pad = row.theorem_id.size(); pad < 13; ++pad) out << ' ';
      std::ostringstream line;
      line.width(5);
      line << row.holds;
      line << "  ";
      line.width(14);
      line << row.not_applicable;
      line << "  ";
      line.width(8);
      line << row.violated;
      out << line.str() << "\n";
    }
    out << "total instances: " << result.total_instances
        << "   violations: " << result.total_violated() << "\n";
    for (const auto& v : result.violations) print_report_text(v, out);
  }
  return result.total_violated() > 0 ? kViolated : kOk;
}

void write_witness_files(const std::vector<Witness>& witnesses, const std::string& out_dir,
                         std::ostream& out) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  for (const Witness& w : witnesses) {
    const std::string path =
        (std::filesystem::path(out_dir) / ("witness-" + std::to_string(w.dim) + ".json"))
            .string();
    std::ofstream f(path);
    f << w.to_json().dump(2) << "\n";
    out << "wrote " << path << "\n";
  }
}

int cmd_search_dims(Index n, long trials, std::uint64_t seed,
                    const std::vector<std::string>& family_names, const std::string& out_dir,
                    int jobs, bool as_json, std::ostream& out) {
  std::vector<PairFamily> families;
  if (family_names.empty()) {
    families = all_pair_families();
  } else {
    for (const std::string& name : family_names) {
      const auto f = pair_family_from_string(name);
      if (!f) throw std::invalid_argument("unknown family: " + name);
      families.push_back(*f);
    }
  }
  const DimSearchResult result = search_dims(n, families, trials, seed, jobs);
  if (as_json) {
    out << dump(result.to_json());
  } else {
    out << "n = " << result.n << ", trials = " << result.trials << ", seed = " << seed << "\n";
    out << "attained dimensions:";
    for (Index d : result.attained) out << " " << d;
    out << "\n";
    for (const Witness& w : result.witnesses)
      out << "  dim " << w.dim << ": family=" << w.family << " trial=" << w.trial_index << "\n";
    for (Index k = n; k <= n * (n + 1) / 2; ++k)
      if (!result.attained.count(k))
        out << "  dim " << k << ": not found in " << trials << " trials\n";
  }
  write_witness_files(result.witnesses, out_dir, out);
  return kOk;
}

int cmd_search_idem_even(Index n, long trials, std::uint64_t seed, const std::string& out_dir,
                         int jobs, bool as_json, std::ostream& out) {
  const IdemSearchResult result = search_idempotent_even(n, trials, seed, jobs);
  if (as_json) {
    out << dump(result.to_json());
  } else {
    out << "n = " << result.n << ", trials = " << result.trials << ", seed = " << seed
        << ", accepted = " << result.accepted << "\n";
    out << "max dimension found: " << result.max_dim_found << "   (parity bound " << 2 * n
        << "; whether it is attained stays open)\n";
    out << "attained dimensions:";
    for (Index d : result.attained) out << " " << d;
    out << "\n";
  }
  write_witness_files(result.witnesses, out_dir, out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for algebras generated by semi-commuting positive "
               "matrix pairs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  // analyze
  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand("analyze", "order-theoretic report for a pair");
  analyze->add_option("pair", analyze_path, "pair JSON file")->required();

  // dim
  std::string dim_path;
  bool dim_basis = false;
  CLI::App* dim = app.add_subcommand("dim", "dimension and word basis of the generated algebra");
  dim->add_option("matrices", dim_path, "matrix list or pair JSON file")->required();
  dim->add_flag("--basis", dim_basis, "dump basis matrices");

  // construct
  ConstructArgs cargs;
  CLI::App* construct = app.add_subcommand("construct", "emit a named matrix family");
  construct->add_option("name", cargs.name,
                        "jordan|cycle|companion|permutation|gerstenhaber|intertwiners|"
                        "idem7|idem3|catalan|random-pair")
      ->required();
  CLI::Option* n_opt = construct->add_option("--n", cargs.n, "size parameter");
  CLI::Option* m_opt = construct->add_option("--m", cargs.m, "row-size parameter (intertwiners)");
  construct->add_option("--coeffs", cargs.coeffs, "companion coefficients a0 a1 ...");
  construct->add_option("--sizes", cargs.sizes, "cycle type sizes n1 n2 ...");
  construct->add_option("--family", cargs.family, "random-pair family");
  CLI::Option* seed_opt = construct->add_option("--seed", cargs.seed, "random-pair seed");

  // verify
  std::string verify_theorem, verify_instance;
  long verify_nmax = 4, verify_trials = 25;
  std::uint64_t verify_seed = 0;
  int verify_jobs = 1;
  bool verify_seed_given = false;
  CLI::App* verify = app.add_subcommand("verify", "run theorem predicates");
  verify->add_option("--theorem", verify_theorem, "predicate id (e.g. THM_3_2)");
  verify->add_option("--instance", verify_instance, "instance JSON file");
  verify->add_option("--n-max", verify_nmax, "max size for the random suite");
  verify->add_option("--trials", verify_trials, "random trials per predicate and size");
  verify->add_option("--seed", verify_seed, "suite seed")
      ->each([&](const std::string&) { verify_seed_given = true; });
  verify->add_option("--jobs", verify_jobs, "worker threads");

  // search
  CLI::App* search = app.add_subcommand("search", "explore attainable dimensions");
  search->require_subcommand(1);
  long sd_n = 0, sd_trials = 0;
  std::uint64_t sd_seed = 0;
  std::vector<std::string> sd_families;
  std::string sd_out;
  int sd_jobs = 1;
  CLI::App* sdims = search->add_subcommand("dims", "dimensions attained by positive "
                                                   "semi-commuting pairs");
  sdims->add_option("--n", sd_n, "matrix size")->required();
  sdims->add_option("--trials", sd_trials, "number of samples")->required();
  sdims->add_option("--seed", sd_seed, "seed")->required();
  sdims->add_option("--families", sd_families, "generator families");
  sdims->add_option("--out", sd_out, "directory for witness JSON files");
  sdims->add_option("--jobs", sd_jobs, "worker threads");

  long si_n = 0, si_trials = 0;
  std::uint64_t si_seed = 0;
  std::string si_out;
  int si_jobs = 1;
  CLI::App* sidem = search->add_subcommand("idem-even", "max dimension for positive idempotent "
                                                        "pairs at even n");
  sidem->add_option("--n", si_n, "matrix size (even)")->required();
  sidem->add_option("--trials", si_trials, "number of samples")->required();
  sidem->add_option("--seed", si_seed, "seed")->required();
  sidem->add_option("--out", si_out, "directory for witness JSON files");
  sidem->add_option("--jobs", si_jobs, "worker threads");

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("semicomm");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, as_json, out);
    if (*dim) return cmd_dim(dim_path, dim_basis, as_json, out);
    if (*construct) {
      cargs.has_n = n_opt->count() > 0;
      cargs.has_m = m_opt->count() > 0;
      cargs.has_seed = seed_opt->count() > 0;
      return cmd_construct(cargs, as_json, out, err);
    }
    if (*verify) {
      if (!verify_instance.empty()) {
        if (verify_theorem.empty()) {
          err << "verify --instance requires --theorem\n";
          return kUsage;
        }
        if (!is_theorem_id(verify_theorem)) {
          err << "unknown theorem id: " << verify_theorem << "\n";
          return kUsage;
        }
        return cmd_verify_instance(verify_theorem, verify_instance, as_json, out);
      }
      if (!verify_seed_given) {
        err << "verify suite mode requires an explicit --seed\n";
        return kUsage;
      }
      std::optional<std::string> only;
      if (!verify_theorem.empty()) {
        if (!is_theorem_id(verify_theorem)) {
          err << "unknown theorem id: " << verify_theorem << "\n";
          return kUsage;
        }
        only = verify_theorem;
      }
      return cmd_verify_suite(static_cast<Index>(verify_nmax), verify_trials, verify_seed,
                              verify_jobs, only, as_json, out);
    }
    if (*search) {
      if (*sdims)
        return cmd_search_dims(static_cast<Index>(sd_n), sd_trials, sd_seed, sd_families,
                               sd_out, sd_jobs, as_json, out);
      if (*sidem)
        return cmd_search_idem_even(static_cast<Index>(si_n), si_trials, si_seed, si_out,
                                    si_jobs, as_json, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kViolated;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kViolated;
  }
  err << "no command executed\n";
  return kUsage;
}

}  // namespace semicomm
