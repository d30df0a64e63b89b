#include "gelfand/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "gelfand/errors.hpp"
#include "gelfand/model_hecke.hpp"
#include "gelfand/model_sn.hpp"
#include "gelfand/perm.hpp"
#include "gelfand/qpoly.hpp"
#include "gelfand/rsk.hpp"
#include "gelfand/typeb.hpp"

namespace gelfand {

namespace {

// Raised for bad flag values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 0;
  std::string mu_text;
  std::string lambda_text;
  std::optional<Partition> mu;
  std::optional<Partition> lambda;
  std::string format;
  bool slow = false;
  std::uint64_t seed = 20240607;

  std::string kind;
  std::string scope;
  std::optional<int> generator;
  std::string element_text;
  std::string word_text;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": cannot parse '" + text + "'");
    }
  }
  if (values.empty()) throw UsageError(std::string("--") + what + ": empty list");
  return values;
}

Partition parse_partition(const std::string& text, const char* what, std::ostream& err) {
  std::vector<int> parts = parse_int_list(text, what);
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; })) {
    throw UsageError(std::string("--") + what + ": parts must be positive");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    err << "warning: --" << what << " parts sorted into decreasing order\n";
  }
  return Partition::from_unsorted(std::move(parts));
}

// Per-command cap, raised by --slow and by the GELFAND_CAP environment variable.
int effective_cap(int base, int slow_cap, bool slow) {
  int cap = slow ? slow_cap : base;
  if (const char* env = std::getenv("GELFAND_CAP"); env != nullptr && *env != '\0') {
    try {
      cap = std::max(cap, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("GELFAND_CAP must be an integer");
    }
  }
  return cap;
}

void require_n(const RunConfig& cfg, int min_n, int cap) {
  if (cfg.n < min_n) throw UsageError("--n must be at least " + std::to_string(min_n));
  if (cfg.n > cap) {
    throw UsageError("--n " + std::to_string(cfg.n) + " exceeds the cap " + std::to_string(cap) +
                     " for '" + cfg.command + "' (use --slow or GELFAND_CAP)");
  }
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("--format " + cfg.format + " is not supported by '" + cfg.command + "'");
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

std::string csv_quote(const std::string& s) {
  return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
}

std::vector<int> reduced_word(Permutation w) {
  std::vector<int> collected;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < w.size(); ++i) {
      if (has_descent(w, i)) {
        w = w * Permutation::generator(w.size(), i);
        collected.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return {collected.rbegin(), collected.rend()};
}

// Commands

int cmd_involutions(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 1, effective_cap(9, 9, cfg.slow));
  require_format(cfg, {"text", "csv", "json"});
  const auto involutions = enumerate_involutions(cfg.n);
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < involutions.size(); ++i) {
      const auto& w = involutions[i];
      nlohmann::json pairs = nlohmann::json::array();
      for (const auto& [a, b] : w.pairs()) pairs.push_back({a, b});
      rows.push_back({{"index", i},
                      {"window", w.perm().window()},
                      {"cycles", cycle_string(w.perm())},
                      {"involutive_length", involutive_length(w)},
                      {"descents", descent_set(w.perm())},
                      {"pairs", std::move(pairs)}});
    }
    out << nlohmann::json{{"n", cfg.n}, {"count", involutions.size()}, {"involutions", std::move(rows)}}.dump(2)
        << '\n';
    return kExitOk;
  }
  const bool csv = cfg.format == "csv";
  if (csv) {
    out << "index,window,cycles,involutive_length,descents,pairs\n";
  } else {
    out << std::left << std::setw(6) << "index" << std::setw(3 * cfg.n + 3) << "window" << std::setw(3 * cfg.n + 4)
        << "cycles" << std::setw(5) << "len" << "descents\n";
  }
  for (std::size_t i = 0; i < involutions.size(); ++i) {
    const auto& w = involutions[i];
    const std::string window = window_string(w.perm());
    const std::string cycles = cycle_string(w.perm());
    const std::string descents = "{" + join(descent_set(w.perm()), ",") + "}";
    if (csv) {
      std::string pairs;
      for (const auto& [a, b] : w.pairs()) pairs += (pairs.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
      out << i << ',' << csv_quote(window) << ',' << csv_quote(cycles) << ',' << involutive_length(w) << ','
          << csv_quote(descents) << ',' << pairs << '\n';
    } else {
      out << std::left << std::setw(6) << i << std::setw(3 * cfg.n + 3) << window << std::setw(3 * cfg.n + 4)
          << cycles << std::setw(5) << involutive_length(w) << descents << '\n';
    }
  }
  return kExitOk;
}

void write_matrix(const PolyMatrix& m, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << to_canonical_json(m) << '\n';
    return;
  }
  out << "dim " << m.dim() << '\n';
  const nlohmann::json entries = to_json(m).at("entries");
  for (const auto& e : entries) {
    const auto coeffs = e.at(2).get<std::vector<std::int64_t>>();
    out << e.at(0).get<std::size_t>() << ' ' << e.at(1).get<std::size_t>() << ": "
        << QPoly::from_coeffs(coeffs).to_string() << '\n';
  }
}

int cmd_matrix(RunConfig cfg, std::ostream& out) {
  if (cfg.format.empty() || cfg.format == "default") cfg.format = "json";
  require_format(cfg, {"json", "text"});
  const int selectors = (cfg.generator ? 1 : 0) + (cfg.element_text.empty() ? 0 : 1) +
                        (cfg.word_text.empty() ? 0 : 1) + (cfg.mu ? 1 : 0);
  if (selectors != 1) throw UsageError("matrix: give exactly one of --generator, --element, --word, --mu");

  if (cfg.kind == "sn") {
    require_n(cfg, 1, effective_cap(8, 9, cfg.slow));
    const ModelBasis basis(cfg.n);
    SignedPermMatrix m;
    if (cfg.generator) {
      if (*cfg.generator < 1 || *cfg.generator >= cfg.n) throw UsageError("--generator must be in 1..n-1");
      m = rho_generator(*cfg.generator, basis);
    } else if (!cfg.element_text.empty()) {
      try {
        m = rho_matrix(Permutation(parse_int_list(cfg.element_text, "element")), basis);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--element: ") + e.what());
      }
    } else {
      throw UsageError("matrix --kind sn takes --generator or --element");
    }
    write_matrix(m.to_poly_matrix(), cfg, out);
    return kExitOk;
  }

  if (cfg.kind == "hecke") {
    require_n(cfg, 1, effective_cap(7, 8, cfg.slow));
    const ModelBasis basis(cfg.n);
    std::vector<int> word;
    if (cfg.generator) {
      if (*cfg.generator < 1 || *cfg.generator >= cfg.n) throw UsageError("--generator must be in 1..n-1");
      word = {*cfg.generator};
    } else if (!cfg.word_text.empty()) {
      word = parse_int_list(cfg.word_text, "word");
      for (int i : word) {
        if (i < 1 || i >= cfg.n) throw UsageError("--word entries must be in 1..n-1");
      }
    } else if (cfg.mu) {
      word = t_mu_word(*cfg.mu);
    } else {
      try {
        word = reduced_word(Permutation(parse_int_list(cfg.element_text, "element")));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--element: ") + e.what());
      }
      if (static_cast<int>(parse_int_list(cfg.element_text, "element").size()) != cfg.n) {
        throw UsageError("--element must have n entries");
      }
    }
    write_matrix(rho_q_of_word(word, basis), cfg, out);
    return kExitOk;
  }

  if (cfg.kind == "typeb") {
    require_n(cfg, 1, effective_cap(kTypeBVerifyCap, 5, cfg.slow));
    const BBasis basis(cfg.n);
    SignedPermMatrix m;
    std::vector<SignedPermMatrix> gens;
    for (int i = 0; i < cfg.n; ++i) gens.push_back(rho_b_generator(i, basis));
    if (cfg.generator) {
      if (*cfg.generator < 0 || *cfg.generator >= cfg.n) throw UsageError("--generator must be in 0..n-1");
      m = gens[static_cast<std::size_t>(*cfg.generator)];
    } else if (!cfg.element_text.empty()) {
      SignedPermutation g;
      try {
        g = SignedPermutation(parse_int_list(cfg.element_text, "element"));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--element: ") + e.what());
      }
      if (g.size() != cfg.n) throw UsageError("--element must have n entries");
      m = rho_b_of_word(b_shortest_words(cfg.n).at(g), gens, basis.size());
    } else {
      throw UsageError("matrix --kind typeb takes --generator or --element");
    }
    write_matrix(m.to_poly_matrix(), cfg, out);
    return kExitOk;
  }
  throw UsageError("--kind must be one of sn, hecke, typeb");
}

int cmd_verify(RunConfig cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty() || cfg.format == "default") cfg.format = "text";
  require_format(cfg, {"text", "json"});
  const auto run_scope = [&](const std::string& scope) -> Report {
    if (scope == "sn") {
      SnVerifyOptions options;
      options.cap = effective_cap(kSnVerifyCap, 8, cfg.slow);
      options.seed = cfg.seed;
      require_n(cfg, 2, options.cap);
      return verify_sn_model(cfg.n, options);
    }
    if (scope == "hecke") {
      HeckeVerifyOptions options;
      options.cap = effective_cap(kHeckeVerifyCap, 7, cfg.slow);
      options.oracle = cfg.n <= kInvolutiveLengthOracleCap;
      if (!options.oracle) {
        err << "note: involutive length oracle skipped above n=" << kInvolutiveLengthOracleCap << '\n';
      }
      require_n(cfg, 2, options.cap);
      return verify_hecke_model(cfg.n, options);
    }
    if (scope == "rsk") {
      const int cap = std::min(effective_cap(kRsVerifyCap, kOddColumnsCap, cfg.slow), kOddColumnsCap);
      require_n(cfg, 1, cap);
      return verify_rsk(cfg.n, cap);
    }
    if (scope == "typeb") {
      const int cap = effective_cap(kTypeBVerifyCap, 5, cfg.slow);
      require_n(cfg, 1, cap);
      return verify_b_model(cfg.n, cap);
    }
    throw UsageError("--scope must be one of sn, hecke, rsk, typeb, all");
  };

  Report report;
  if (cfg.scope == "all") {
    report.scope = "all";
    report.n = cfg.n;
    for (const char* scope : {"sn", "hecke", "rsk", "typeb"}) report.merge(run_scope(scope));
  } else {
    report = run_scope(cfg.scope);
  }
  if (cfg.format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return exit_code_for(report);
}

int cmd_characters(RunConfig cfg, std::ostream& out) {
  if (cfg.format.empty() || cfg.format == "default") cfg.format = "text";
  require_format(cfg, {"text", "csv", "json"});
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> table;
  bool all_match = true;

  if (cfg.kind == "sn") {
    require_n(cfg, 1, effective_cap(kSnVerifyCap, 8, cfg.slow));
    const ModelBasis basis(cfg.n);
    header = {"class", "model_trace", "square_roots", "formula", "match"};
    for (const auto& row : sn_class_characters(basis)) {
      all_match = all_match && row.matches();
      rows.push_back({{"class", row.cycle_type.to_string()},
                      {"model_trace", row.trace},
                      {"square_roots", row.square_roots},
                      {"formula", row.formula},
                      {"match", row.matches()}});
      table.push_back({row.cycle_type.to_string(), std::to_string(row.trace), std::to_string(row.square_roots),
                       std::to_string(row.formula), row.matches() ? "yes" : "NO"});
    }
  } else if (cfg.kind == "hecke" && cfg.lambda) {
    require_n(cfg, 1, effective_cap(kRsCharacterCap, 6, cfg.slow));
    header = {"mu", "irreducible_character", "q1_value", "murnaghan_nakayama", "match"};
    for (const auto& mu : partitions_of(cfg.n)) {
      const QPoly chi = irreducible_hecke_character(*cfg.lambda, mu);
      const std::int64_t mn = mn_character(*cfg.lambda, mu);
      const bool match = chi.eval(std::int64_t{1}) == mn;
      all_match = all_match && match;
      rows.push_back({{"mu", mu.to_string()},
                      {"irreducible_character", chi.to_string()},
                      {"q1_value", chi.eval(std::int64_t{1})},
                      {"murnaghan_nakayama", mn},
                      {"match", match}});
      table.push_back({mu.to_string(), chi.to_string(), std::to_string(chi.eval(std::int64_t{1})),
                       std::to_string(mn), match ? "yes" : "NO"});
    }
  } else if (cfg.kind == "hecke") {
    require_n(cfg, 1, effective_cap(kHeckeVerifyCap, 7, cfg.slow));
    const ModelBasis basis(cfg.n);
    const auto gens = rho_q_generators(basis);
    header = {"mu", "model_trace", "unimodal_sum", "full_descent_sum", "match"};
    for (const auto& mu : partitions_of(cfg.n)) {
      if (cfg.mu && *cfg.mu != mu) continue;
      const QPoly trace = mat_trace(rho_q_of_word(t_mu_word(mu), gens, basis.size()));
      const QPoly sum = mu_unimodal_character(mu);
      const QPoly literal = mu_unimodal_character_full_descents(mu);
      const bool match = trace == sum;
      all_match = all_match && match;
      rows.push_back({{"mu", mu.to_string()},
                      {"model_trace", trace.to_string()},
                      {"unimodal_sum", sum.to_string()},
                      {"full_descent_sum", literal.to_string()},
                      {"match", match}});
      table.push_back({mu.to_string(), trace.to_string(), sum.to_string(), literal.to_string(), match ? "yes" : "NO"});
    }
  } else {
    throw UsageError("--kind must be one of sn, hecke");
  }

  if (cfg.format == "json") {
    out << nlohmann::json{{"kind", cfg.kind}, {"n", cfg.n}, {"rows", std::move(rows)}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_quote(row[c]);
      out << '\n';
    }
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& row : table) width[c] = std::max(width[c], row[c].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c + 1 == cells.size()) {
          out << cells[c];
        } else {
          out << std::left << std::setw(static_cast<int>(width[c])) << cells[c] << "  ";
        }
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : table) line(row);
  }
  return all_match ? kExitOk : kExitFailure;
}

int cmd_poset(RunConfig cfg, std::ostream& out) {
  if (cfg.format.empty() || cfg.format == "default") cfg.format = "dot";
  require_format(cfg, {"dot"});
  require_n(cfg, 1, effective_cap(8, 8, cfg.slow));
  out << to_dot(build_involutive_order(ModelBasis(cfg.n)));
  return kExitOk;
}

}  // namespace

int exit_code_for(const Report& report) { return report.passed() ? kExitOk : kExitFailure; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gelfand models for S_n, H_n(q) and B_n on the basis of involutions", "gelfand"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Rank n");
    sub->add_option("--mu", cfg.mu_text, "Partition mu, comma separated (e.g. 3,2)");
    sub->add_option("--lambda", cfg.lambda_text, "Partition lambda, comma separated");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "csv", "text", "default"}));
    sub->add_flag("--slow", cfg.slow, "Raise the verification caps by one step");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };

  auto* involutions = app.add_subcommand("involutions", "List involutions with involutive length, descents, pairs");
  add_common(involutions);
  auto* matrix = app.add_subcommand("matrix", "Representation matrix as canonical JSON");
  add_common(matrix);
  matrix->add_option("--kind", cfg.kind, "sn | hecke | typeb")->required();
  matrix->add_option("--generator", cfg.generator, "Generator index");
  matrix->add_option("--element", cfg.element_text, "Group element as a window (signed for typeb)");
  matrix->add_option("--word", cfg.word_text, "Hecke word of generator indices");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify);
  verify->add_option("scope,--scope", cfg.scope, "sn | hecke | rsk | typeb | all")->required();
  auto* characters = app.add_subcommand("characters", "Character table of the model against its oracle");
  add_common(characters);
  characters->add_option("--kind", cfg.kind, "sn | hecke")->required();
  auto* poset = app.add_subcommand("poset", "Involutive weak order as Graphviz DOT");
  add_common(poset);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  try {
    if (!cfg.mu_text.empty()) cfg.mu = parse_partition(cfg.mu_text, "mu", err);
    if (!cfg.lambda_text.empty()) cfg.lambda = parse_partition(cfg.lambda_text, "lambda", err);
    if (cfg.n == 0 && cfg.mu) cfg.n = cfg.mu->size();
    if (cfg.n == 0 && cfg.lambda) cfg.n = cfg.lambda->size();
    if (cfg.mu && cfg.mu->size() != cfg.n) throw UsageError("--mu must be a partition of n");
    if (cfg.lambda && cfg.lambda->size() != cfg.n) throw UsageError("--lambda must be a partition of n");

    if (chosen == involutions) {
      if (cfg.format.empty() || cfg.format == "default") cfg.format = "text";
      return cmd_involutions(cfg, out);
    }
    if (chosen == matrix) return cmd_matrix(cfg, out);
    if (chosen == verify) return cmd_verify(cfg, out, err);
    if (chosen == characters) return cmd_characters(cfg, out);
    return cmd_poset(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gelfand
