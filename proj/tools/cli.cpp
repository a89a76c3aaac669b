#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matvol/descent.hpp"
#include "matvol/errors.hpp"
#include "matvol/matroid.hpp"
#include "matvol/matroid_json.hpp"
#include "matvol/oracle.hpp"
#include "matvol/volume.hpp"

namespace matvol::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  bool human = false;
  bool approx = false;
  int threads = 1;
  bool trace = false;
  int budget = -1;
  std::string bits;
  int n = -1;
  int d = -1;
  int alpha = -1;
  std::string hyperplanes;
  std::string hyperplane;
  bool random = false;
  std::int64_t seed = -1;
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json elements_json(Subset s) { return elements_of(s); }

Json volume_json(const ExactVolume& v, int dimension, bool approx) {
  Json out;
  out["numerator"] = big(v.numerator());
  out["denominator"] = big(v.denominator());
  out["normalized_numerator"] = big(v.scaled(dimension));
  out["dimension"] = dimension;
  if (approx) out["approx"] = v.value.convert_to<double>();
  return out;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Matroid load_matroid(const std::string& input) {
  if (input.empty()) {
    throw InvalidInput("a matroid document (path, '-' or inline JSON) is required");
  }
  std::string text;
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') {
    text = input;
  } else if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream file(input);
    if (!file) throw InvalidInput("cannot open " + input);
    text = read_all(file);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  return matroid_from_json(doc);
}

// Accepts "0,1,2", "[0,1,2]" or "0 1 2".
Subset parse_element_list(const std::string& text) {
  std::string cleaned = text;
  std::replace_if(
      cleaned.begin(), cleaned.end(),
      [](char c) { return c == ',' || c == '[' || c == ']'; }, ' ');
  std::istringstream in(cleaned);
  std::vector<int> elems;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      elems.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InvalidInput("not an element list: " + text);
    }
  }
  const Subset s = subset_of(elems);
  if (cardinality(s) != static_cast<int>(elems.size())) {
    throw InvalidInput("element listed twice: " + text);
  }
  return s;
}

std::vector<Subset> parse_hyperplane_family(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("--hyperplanes must be a JSON list: ") +
                       e.what());
  }
  if (!doc.is_array()) throw InvalidInput("--hyperplanes must be a JSON list");
  std::vector<Subset> out;
  for (const auto& h : doc) out.push_back(parse_element_list(h.dump()));
  return out;
}

int oracle_budget(const Options& opt) {
  if (opt.budget >= 0) return opt.budget;
  if (const char* env = std::getenv("VOLUME_ORACLE_BUDGET")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidInput("VOLUME_ORACLE_BUDGET must be an integer");
    }
  }
  return kDefaultOracleBudget;
}

Json ledger_json(const VolumeLedger& ledger) {
  Json rows = Json::array();
  for (const auto& row : ledger.rows) {
    Json chain = Json::array();
    for (Subset f : row.chain.proper_flats) chain.push_back(elements_json(f));
    Json r;
    r["chain"] = std::move(chain);
    r["b_F"] = row.sequence.str();
    r["mobius"] = big(row.mobius);
    r["delta_leq"] = big(row.delta_leq);
    rows.push_back(std::move(r));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["weighted_sum"] = big(ledger.weighted_sum);
  return out;
}

Json cmd_volume(const Options& opt) {
  const Matroid m = load_matroid(opt.input);
  Json out = volume_json(volume(m), polytope_dimension(m), opt.approx);
  if (!opt.trace) return out;
  const Matroid loopless = deletion(m, loops(m)).matroid;
  const auto labels = deletion(m, loops(m)).labels;
  Json components = Json::array();
  for (Subset c : connected_components(loopless)) {
    Json comp;
    Json elems = Json::array();
    for (int e : elements_of(c)) elems.push_back(labels[e]);
    comp["elements"] = std::move(elems);
    if (cardinality(c) == 1) {
      comp["coloop"] = true;
    } else {
      comp["trace"] = ledger_json(volume_ledger(restriction(loopless, c).matroid));
    }
    components.push_back(std::move(comp));
  }
  if (components.size() == 1 && components[0].contains("trace")) {
    out["trace"] = components[0]["trace"];
  } else {
    out["components"] = std::move(components);
  }
  return out;
}

Json cmd_oracle(const Options& opt) {
  const Matroid m = load_matroid(opt.input);
  const auto result = oracle_volume(m, oracle_budget(opt), opt.threads);
  Json out = volume_json(result.volume, result.dimension, opt.approx);
  Json counts = Json::array();
  for (auto c : result.counts) counts.push_back(c);
  out["ehrhart_counts"] = std::move(counts);
  return out;
}

Json cmd_cyclic_flats(const Options& opt) {
  const Matroid m = load_matroid(opt.input);
  Json flats = Json::array();
  for (const auto& cf : cyclic_flats(m)) {
    Json f;
    f["elements"] = elements_json(cf.elements);
    f["rank"] = cf.rank;
    flats.push_back(std::move(f));
  }
  Json out;
  out["cyclic_flats"] = std::move(flats);
  return out;
}

Json cmd_chains(const Options& opt) {
  const Matroid m = load_matroid(opt.input);
  const ChainPoset poset = build_chain_poset(m);
  Json chains = Json::array();
  BigInt total = 0;
  for (std::size_t i = 0; i < poset.chains.size(); ++i) {
    Json chain = Json::array();
    for (Subset f : poset.chains[i].proper_flats) {
      chain.push_back(elements_json(f));
    }
    Json row;
    row["chain"] = std::move(chain);
    row["b_F"] = chain_to_sequence(m, poset.chains[i]).str();
    row["mobius"] = big(poset.mobius[i]);
    chains.push_back(std::move(row));
    total += poset.mobius[i];
  }
  Json out;
  out["chains"] = std::move(chains);
  out["mobius_sum"] = big(total);
  return out;
}

Json cmd_schubert(const Options& opt) {
  if (opt.bits.empty()) throw InvalidInput("--bits is required");
  const auto b = BinarySequence::parse(opt.bits);
  const Matroid m = schubert(b);
  Json out;
  out["bits"] = b.str();
  out["n"] = b.n();
  out["d"] = b.d();
  out["bases"] = matroid_to_json(m)["bases"];
  out["connected"] = is_connected(m);
  out["delta_leq"] = big(delta_leq(b));
  if (is_connected(m)) {
    out["volume"] = volume_json(schubert_volume(b), b.n(), opt.approx);
  } else {
    out["volume"] = volume_json(volume(m), polytope_dimension(m), opt.approx);
  }
  return out;
}

std::vector<Subset> random_family(int n, int d, int alpha, std::int64_t seed) {
  std::vector<Subset> candidates;
  for (Subset s = 0; s <= full_set(n + 1); ++s) {
    if (cardinality(s) == d + 1) candidates.push_back(s);
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<Subset> chosen;
  for (Subset s : candidates) {
    if (static_cast<int>(chosen.size()) == alpha) break;
    const bool compatible = std::all_of(chosen.begin(), chosen.end(), [&](Subset t) {
      return cardinality(s & t) <= d - 1;
    });
    if (compatible) chosen.push_back(s);
  }
  if (static_cast<int>(chosen.size()) < alpha) {
    throw PreconditionError("greedy search found only " +
                            std::to_string(chosen.size()) +
                            " compatible circuit-hyperplanes");
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Json cmd_sparse_paving(const Options& opt) {
  if (opt.n < 0 || opt.d < 0) throw InvalidInput("--n and --d are required");
  std::vector<Subset> family;
  bool build = false;
  if (!opt.hyperplanes.empty()) {
    family = parse_hyperplane_family(opt.hyperplanes);
    if (opt.alpha >= 0 && opt.alpha != static_cast<int>(family.size())) {
      throw InvalidInput("--alpha disagrees with the number of --hyperplanes");
    }
    build = true;
  } else if (opt.random) {
    if (opt.seed < 0) throw InvalidInput("--random needs --seed");
    if (opt.alpha < 0) throw InvalidInput("--random needs --alpha");
    family = random_family(opt.n, opt.d, opt.alpha, opt.seed);
    build = true;
  } else if (opt.alpha < 0) {
    throw InvalidInput("--alpha is required without --hyperplanes");
  }
  const int alpha = build ? static_cast<int>(family.size()) : opt.alpha;
  Json out;
  out["n"] = opt.n;
  out["d"] = opt.d;
  out["alpha"] = alpha;
  if (!build) {
    out["volume"] =
        volume_json(sparse_paving_volume(opt.n, opt.d, alpha), opt.n, opt.approx);
    return out;
  }
  const Matroid m = sparse_paving(opt.n, opt.d, family);
  Json hs = Json::array();
  for (Subset h : family) hs.push_back(elements_json(h));
  out["circuit_hyperplanes"] = std::move(hs);
  if (!is_connected(m)) {
    throw PreconditionError("the sparse paving matroid is disconnected");
  }
  const ExactVolume closed = sparse_paving_volume(opt.n, opt.d, alpha);
  const ExactVolume engine = volume(m);
  out["volume"] = volume_json(closed, opt.n, opt.approx);
  out["engine_volume"] = volume_json(engine, opt.n, opt.approx);
  out["agree"] = closed == engine;
  return out;
}

Json cmd_relax(const Options& opt) {
  if (opt.hyperplane.empty()) throw InvalidInput("--hyperplane is required");
  const Matroid m = load_matroid(opt.input);
  const Subset h = parse_element_list(opt.hyperplane);
  const ExactVolume predicted = relaxation_volume(m, h);
  const Matroid relaxed = relax(m, h);
  const ExactVolume recomputed = volume(relaxed);
  const int n = m.ground_size() - 1;
  Json out;
  out["hyperplane"] = elements_json(h);
  out["volume_before"] = volume_json(volume(m), n, opt.approx);
  out["relaxation_volume"] = volume_json(predicted, n, opt.approx);
  out["relaxed_engine_volume"] =
      volume_json(recomputed, polytope_dimension(relaxed), opt.approx);
  out["agree"] = predicted == recomputed;
  return out;
}

Json cmd_delta(const Options& opt) {
  if (opt.bits.empty()) throw InvalidInput("--bits is required");
  const auto b = BinarySequence::parse(opt.bits);
  const auto partition = to_partition(b);
  Json out;
  out["bits"] = b.str();
  out["n"] = b.n();
  out["d"] = b.d();
  out["delta"] = big(delta(b));
  out["delta_leq"] = big(delta_leq(b));
  out["down_set_size"] = down_set(b).size();
  out["dual"] = dual_sequence(b).str();
  out["partition"] = partition.parts;
  out["box"] = {partition.rows, partition.max_part};
  return out;
}

Json cmd_info(const Options& opt) {
  const Matroid m = load_matroid(opt.input);
  Json comps = Json::array();
  for (Subset c : connected_components(m)) comps.push_back(elements_json(c));
  Json out;
  out["ground_size"] = m.ground_size();
  out["rank"] = m.rank();
  out["bases"] = m.bases().size();
  out["connected"] = is_connected(m);
  out["components"] = std::move(comps);
  out["loops"] = elements_json(loops(m));
  out["coloops"] = elements_json(coloops(m));
  out["circuits"] = circuits(m).size();
  out["cyclic_flats"] = cyclic_flats(m).size();
  out["circuit_hyperplanes"] = circuit_hyperplanes(m).size();
  out["sparse_paving"] = is_sparse_paving(m);
  out["dimension"] = polytope_dimension(m);
  return out;
}

bool is_scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) {
           return x.is_primitive() || (x.is_array() && std::all_of(
               x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); }));
         });
}

std::string cell(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void render_human(const Json& j, std::ostream& out, int indent);

void render_table(const Json& rows, std::ostream& out, int indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) {
        columns.push_back(key);
      }
    }
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& row : rows) {
      if (row.contains(columns[c])) {
        width[c] = std::max(width[c], cell(row[columns[c]]).size());
      }
    }
  }
  const std::string pad(indent, ' ');
  out << pad;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << std::left << std::setw(static_cast<int>(width[c]) + 2) << columns[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    out << pad;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string text =
          row.contains(columns[c]) ? cell(row[columns[c]]) : "";
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << text;
    }
    out << '\n';
  }
}

void render_human(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (!j.is_object()) {
    out << pad << cell(j) << '\n';
    return;
  }
  std::size_t key_width = 0;
  for (const auto& [key, _] : j.items()) key_width = std::max(key_width, key.size());
  for (const auto& [key, value] : j.items()) {
    if (value.is_primitive() || is_scalar_list(value)) {
      out << pad << std::left << std::setw(static_cast<int>(key_width) + 2) << key
          << cell(value) << '\n';
    } else if (value.is_array() &&
               std::all_of(value.begin(), value.end(),
                           [](const Json& x) { return x.is_object(); })) {
      out << pad << key << ":\n";
      render_table(value, out, indent + 2);
    } else {
      out << pad << key << ":\n";
      if (value.is_array()) {
        for (const auto& item : value) render_human(item, out, indent + 2);
      } else {
        render_human(value, out, indent + 2);
      }
    }
  }
}

Json cmd_selftest(bool& passed) {
  Json checks = Json::array();
  passed = true;
  for (const auto& check : run_selftest()) {
    Json row;
    row["name"] = check.name;
    row["passed"] = check.passed;
    if (!check.detail.empty()) row["detail"] = check.detail;
    checks.push_back(std::move(row));
    passed = passed && check.passed;
  }
  Json out;
  out["checks"] = std::move(checks);
  out["passed"] = passed;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact volumes of matroid base polytopes", "matvol"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opt;
  app.add_flag("--human", opt.human, "Aligned text instead of JSON");
  app.add_flag("--approx", opt.approx, "Also print floating-point volumes");
  app.add_option("--threads", opt.threads, "Parallelism hint")->check(CLI::PositiveNumber);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input,
                    "Matroid document: file path, '-' for stdin, or inline JSON");
  };

  auto* volume_cmd = app.add_subcommand("volume", "Cyclic-flat chain formula");
  add_input(volume_cmd);
  volume_cmd->add_flag("--trace", opt.trace, "Include the per-chain ledger");

  auto* oracle_cmd = app.add_subcommand("oracle-volume", "Lattice-point oracle");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--budget", opt.budget, "Maximum ground size")
      ->check(CLI::NonNegativeNumber);

  auto* flats_cmd = app.add_subcommand("cyclic-flats", "List cyclic flats");
  add_input(flats_cmd);
  auto* chains_cmd = app.add_subcommand("chains", "Chain poset with Moebius weights");
  add_input(chains_cmd);

  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert matroid of a sequence");
  schubert_cmd->add_option("--bits", opt.bits, "Sequence such as 11010")->required();

  auto* sparse_cmd = app.add_subcommand("sparse-paving", "Sparse paving closed form");
  sparse_cmd->add_option("--n", opt.n)->required();
  sparse_cmd->add_option("--d", opt.d)->required();
  sparse_cmd->add_option("--alpha", opt.alpha);
  sparse_cmd->add_option("--hyperplanes", opt.hyperplanes,
                         "JSON list of circuit-hyperplanes; builds and cross-checks");
  sparse_cmd->add_flag("--random", opt.random, "Greedy random family of size alpha");
  sparse_cmd->add_option("--seed", opt.seed);

  auto* relax_cmd = app.add_subcommand("relax", "Relax a circuit-hyperplane");
  add_input(relax_cmd);
  relax_cmd->add_option("--hyperplane", opt.hyperplane, "Elements, e.g. 0,1,2")
      ->required();

  auto* delta_cmd = app.add_subcommand("delta", "Descent statistics of a sequence");
  delta_cmd->add_option("--bits", opt.bits)->required();

  auto* info_cmd = app.add_subcommand("info", "Basic matroid data");
  add_input(info_cmd);
  auto* selftest_cmd = app.add_subcommand("selftest", "Invariant sweeps at n <= 6");

  std::vector<std::string> argv_store{"matvol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  int code = kOk;
  try {
    Json result;
    if (volume_cmd->parsed()) {
      result = cmd_volume(opt);
    } else if (oracle_cmd->parsed()) {
      result = cmd_oracle(opt);
    } else if (flats_cmd->parsed()) {
      result = cmd_cyclic_flats(opt);
    } else if (chains_cmd->parsed()) {
      result = cmd_chains(opt);
    } else if (schubert_cmd->parsed()) {
      result = cmd_schubert(opt);
    } else if (sparse_cmd->parsed()) {
      result = cmd_sparse_paving(opt);
    } else if (relax_cmd->parsed()) {
      result = cmd_relax(opt);
    } else if (delta_cmd->parsed()) {
      result = cmd_delta(opt);
    } else if (info_cmd->parsed()) {
      result = cmd_info(opt);
    } else if (selftest_cmd->parsed()) {
      bool passed = false;
      result = cmd_selftest(passed);
      if (!passed) code = kSelftestFailed;
    }
    if (opt.human) {
      render_human(result, out, 0);
    } else {
      out << result.dump(2) << '\n';
    }
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  return code;
}

}  // namespace matvol::cli
