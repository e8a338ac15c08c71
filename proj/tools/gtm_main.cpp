// Command-line front end: generation, subword counts, factor sets,
// complexity tables, verification suites, and periodicity scans for the
// cyclic-substitution fixed points.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtm/analysis.hpp"
#include "gtm/binomial.hpp"
#include "gtm/complexity.hpp"
#include "gtm/decompose.hpp"
#include "gtm/errors.hpp"
#include "gtm/factors.hpp"
#include "gtm/table_io.hpp"
#include "gtm/thue_morse.hpp"
#include "gtm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitUnstable = 4;
constexpr int kExitBudget = 5;

struct RunConfig {
  int m = 3;
  int k = 2;
  std::optional<std::int64_t> n;
  std::optional<std::string> n_range;
  std::string format = "plain";
  std::int64_t prefix_growth = 40;
  int max_doublings = 8;
  int jobs = 0;  // 0 = one worker per hardware thread
  std::int64_t budget_mb = 64;

  gtm::PrefixPolicy policy() const {
    gtm::PrefixPolicy p;
    p.growth_K = prefix_growth;
    p.max_doublings = max_doublings;
    return p;
  }
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("expected a range of the form LO..HI, got " +
                                text);
  }
  const std::int64_t lo = std::stoll(text.substr(0, dots));
  const std::int64_t hi = std::stoll(text.substr(dots + 2));
  if (lo < 0 || lo > hi) {
    throw std::invalid_argument("range bounds must satisfy 0 <= LO <= HI");
  }
  return {lo, hi};
}

std::pair<std::int64_t, std::int64_t> required_range(const RunConfig& cfg) {
  if (cfg.n && cfg.n_range) {
    throw std::invalid_argument("--n and --n-range are mutually exclusive");
  }
  if (cfg.n) return {*cfg.n, *cfg.n};
  if (cfg.n_range) return parse_range(*cfg.n_range);
  throw std::invalid_argument("one of --n or --n-range is required");
}

gtm::Word parse_word_arg(const std::string& text, const char* what) {
  if (text.empty()) {
    throw std::invalid_argument(
        std::string("empty ") + what +
        " on the command line; use the explicit empty-word flag instead");
  }
  return gtm::parse_word(text);
}

// ---------------------------------------------------------------------------

int cmd_generate(const RunConfig& cfg, std::int64_t len,
                 const std::string& generator, std::string& out) {
  if (len < 0) throw std::invalid_argument("length must be >= 0");
  gtm::Word w;
  if (generator == "morphism") {
    w = gtm::tm_prefix(cfg.m, static_cast<std::size_t>(len));
    w.resize(static_cast<std::size_t>(len));
  } else if (generator == "digit-sum") {
    w = gtm::tm_prefix_digit_sum(cfg.m, static_cast<std::size_t>(len));
  } else {
    throw std::invalid_argument("unknown generator: " + generator);
  }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["m"] = cfg.m;
    j["length"] = len;
    j["generator"] = generator;
    j["word"] = gtm::format_word(w, cfg.m);
    out = j.dump(2) + "\n";
  } else {
    out = gtm::format_word(w, cfg.m) + "\n";
  }
  return kExitOk;
}

int cmd_binom(const std::string& u_text, const std::string& v_text,
              bool empty_v, const RunConfig& cfg, std::string& out) {
  const gtm::Word u = parse_word_arg(u_text, "word");
  gtm::Word v;
  if (empty_v) {
    if (!v_text.empty()) {
      throw std::invalid_argument(
          "give either a pattern argument or the empty-pattern flag, not both");
    }
  } else {
    v = parse_word_arg(v_text, "pattern");
  }
  const gtm::BinomialValue value = gtm::binom_words(u, v);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["u"] = u_text;
    j["v"] = empty_v ? "" : v_text;
    j["count"] = value.str();
    out = j.dump(2) + "\n";
  } else {
    out = value.str() + "\n";
  }
  return kExitOk;
}

int cmd_psi(const std::string& u_text, bool empty_u, int m_flag,
            const RunConfig& cfg, std::string& out) {
  gtm::Word u;
  if (empty_u) {
    if (!u_text.empty()) {
      throw std::invalid_argument(
          "give either a word argument or the empty-word flag, not both");
    }
  } else {
    u = parse_word_arg(u_text, "word");
  }
  int m = m_flag;
  if (m == 0) {
    m = 2;
    for (gtm::Letter a : u) m = std::max(m, static_cast<int>(a) + 1);
  }
  const gtm::ExtendedParikhVector psi = gtm::extended_parikh(u, cfg.k, m);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["m"] = m;
    j["k"] = cfg.k;
    j["word"] = u_text;
    nlohmann::json counts = nlohmann::json::array();
    for (const gtm::BinomialValue& c : psi.counts) counts.push_back(c.str());
    j["counts"] = std::move(counts);
    out = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    out = "v,count\n";
    for (int len = 1; len <= cfg.k; ++len) {
      const std::size_t off = gtm::ExtendedParikhVector::block_offset(m, len);
      std::size_t block = 1;
      for (int i = 0; i < len; ++i) block *= static_cast<std::size_t>(m);
      gtm::Word v(static_cast<std::size_t>(len), 0);
      for (std::size_t r = 0; r < block; ++r) {
        std::size_t x = r;
        for (int i = len - 1; i >= 0; --i) {
          v[static_cast<std::size_t>(i)] =
              static_cast<gtm::Letter>(x % static_cast<std::size_t>(m));
          x /= static_cast<std::size_t>(m);
        }
        out += gtm::format_word(v, m) + "," + psi.counts[off + r].str() + "\n";
      }
    }
  } else {
    out = "(";
    for (std::size_t i = 0; i < psi.counts.size(); ++i) {
      if (i) out += ", ";
      out += psi.counts[i].str();
    }
    out += ")\n";
  }
  return kExitOk;
}

int cmd_factors(const RunConfig& cfg, const std::string& word_text,
                std::string& out) {
  const auto [lo, hi] = required_range(cfg);
  if (lo != hi) {
    throw std::invalid_argument("factor listing takes a single --n");
  }
  const std::int64_t n = lo;
  std::vector<gtm::Word> fs;
  if (!word_text.empty()) {
    const gtm::Word w = gtm::parse_word(word_text);
    gtm::check_word_over(w, cfg.m);
    fs = gtm::factors(w, static_cast<std::size_t>(n));
  } else {
    fs = gtm::tm_factor_set(cfg.m, n);
  }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["m"] = cfg.m;
    j["n"] = n;
    nlohmann::json arr = nlohmann::json::array();
    for (const gtm::Word& f : fs) arr.push_back(gtm::format_word(f, cfg.m));
    j["count"] = fs.size();
    j["factors"] = std::move(arr);
    out = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    out = "factor\n";
    for (const gtm::Word& f : fs) out += gtm::format_word(f, cfg.m) + "\n";
  } else {
    for (const gtm::Word& f : fs) out += gtm::format_word(f, cfg.m) + "\n";
  }
  return kExitOk;
}

std::int64_t closed_form_value(int m, int k, std::int64_t n) {
  if (n == 0) return 1;
  if (m == 2) return gtm::tm2_binomial_closed(k, n);
  if (k == 1) return gtm::abelian_closed(m, n);
  if (k == 2) return gtm::binomial2_closed(m, n);
  throw std::invalid_argument(
      "no closed form is available for depth " + std::to_string(k) +
      " over " + std::to_string(m) + " letters");
}

int cmd_complexity(const RunConfig& cfg, const std::string& mode,
                   const std::string& word_text, std::string& out) {
  const auto [lo, hi] = required_range(cfg);
  gtm::ComplexityTable table;
  gtm::TableMeta meta;
  meta.m = cfg.m;
  meta.k = cfg.k;
  int exit_code = kExitOk;

  if (!word_text.empty()) {
    if (mode != "oracle") {
      throw std::invalid_argument(
          "closed-form values describe the substitution fixed points, not "
          "arbitrary words");
    }
    const gtm::Word w = gtm::parse_word(word_text);
    table = gtm::complexity_profile(w, cfg.k, cfg.m, lo, hi, cfg.policy());
    meta.generator = "word";
  } else if (mode == "oracle" || mode == "checked") {
    table = gtm::tm_complexity(cfg.m, cfg.k, lo, hi, cfg.policy(), cfg.jobs);
    if (mode == "checked") {
      for (const auto& [n, row] : table.rows) {
        const std::int64_t closed = closed_form_value(cfg.m, cfg.k, n);
        if (closed != row.value) {
          std::fprintf(stderr,
                       "counted value %lld disagrees with the closed form "
                       "%lld at n=%lld\n",
                       static_cast<long long>(row.value),
                       static_cast<long long>(closed),
                       static_cast<long long>(n));
          exit_code = kExitClaimFailed;
        }
      }
      meta.oracle_checked = exit_code == kExitOk;
    }
  } else if (mode == "closed") {
    table.k = cfg.k;
    for (std::int64_t n = lo; n <= hi; ++n) {
      table.rows[n] = gtm::ComplexityRow{closed_form_value(cfg.m, cfg.k, n),
                                         gtm::Provenance::closed_form};
    }
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }

  if (cfg.format == "json") {
    out = gtm::table_to_json(table, meta);
  } else if (cfg.format == "plain") {
    out = gtm::table_to_plain(table);
  } else {
    out = gtm::table_to_csv(table);
  }
  return exit_code;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& suites,
               const std::vector<int>& extra_m,
               const std::vector<std::int64_t>& extra_n, std::string& out) {
  gtm::VerifyOptions opt;
  opt.extra_m = extra_m;
  opt.extra_n = extra_n;
  opt.policy = cfg.policy();
  opt.jobs = cfg.jobs;

  std::vector<std::string> names;
  if (suites.empty() ||
      (suites.size() == 1 && suites.front() == "all")) {
    names = gtm::suite_names();
  } else {
    names = suites;
  }

  bool all_pass = true;
  for (const std::string& name : names) {
    const gtm::VerificationReport rep = gtm::run_suite(name, opt);
    all_pass = all_pass && rep.pass();
    if (cfg.format == "json") {
      out += gtm::verification_report_to_json(rep);
    } else if (cfg.format == "csv") {
      out += gtm::verification_report_to_csv(rep);
    } else {
      out += gtm::verification_report_to_plain(rep);
    }
  }
  return all_pass ? kExitOk : kExitClaimFailed;
}

int cmd_scan(const RunConfig& cfg, std::int64_t n_max_flag, std::string& out) {
  std::int64_t block = 1;
  for (int i = 0; i < cfg.k; ++i) {
    block *= cfg.m;
    if (block > (std::int64_t{1} << 32)) {
      throw gtm::BudgetError("m^k is out of any reasonable scanning range");
    }
  }
  const std::int64_t n_max = n_max_flag > 0 ? n_max_flag : 3 * block;
  const gtm::PeriodicityReport rep = gtm::conjecture_scan(
      cfg.m, cfg.k, n_max, cfg.policy(), cfg.jobs, cfg.budget_mb);
  if (cfg.format == "plain") {
    out = gtm::periodicity_report_to_plain(rep, cfg.m, cfg.k);
  } else {
    out = gtm::periodicity_report_to_json(rep, cfg.m, cfg.k);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Subword counts, equivalence classes, and complexity tables for the "
      "fixed points of the cyclic substitutions 0 -> 0 1 ... m-1"};
  app.require_subcommand(1);
  // Let the shared options (--format, --jobs, ...) appear after the
  // subcommand name as well as before it.
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--prefix-K", cfg.prefix_growth,
                 "Initial prefix length per unit of n when stabilizing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-doublings", cfg.max_doublings,
                 "Prefix doublings allowed before giving up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs,
                 "Worker threads (0 = one per hardware thread)")
      ->capture_default_str();

  // generate ------------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "Print a prefix of the fixed point");
  std::int64_t gen_len = 0;
  std::string generator = "morphism";
  gen->add_option("--m", cfg.m, "Alphabet size")->required();
  gen->add_option("--len", gen_len, "Exact number of letters")->required();
  gen->add_option("--generator", generator,
                  "How letters are produced: morphism | digit-sum")
      ->check(CLI::IsMember({"morphism", "digit-sum"}))
      ->capture_default_str();

  // binom ---------------------------------------------------------------
  auto* bin = app.add_subcommand(
      "binom", "Count occurrences of a pattern as a scattered subword");
  std::string binom_u, binom_v;
  bool empty_v = false;
  bin->add_option("u", binom_u, "The outer word")->required();
  bin->add_option("v", binom_v, "The pattern");
  bin->add_flag("--empty-v", empty_v, "Use the empty pattern");

  // psi -----------------------------------------------------------------
  auto* psi = app.add_subcommand(
      "psi", "Print all subword counts up to the given depth");
  std::string psi_u;
  bool empty_u = false;
  int psi_m = 0;
  psi->add_option("u", psi_u, "The word");
  psi->add_flag("--empty-u", empty_u, "Use the empty word");
  psi->add_option("--k", cfg.k, "Depth")->required();
  psi->add_option("--m", psi_m, "Alphabet size (default: inferred)");

  // factors --------------------------------------------------------------
  auto* fac = app.add_subcommand(
      "factors", "List the distinct length-n factors of the fixed point");
  std::string factors_word;
  fac->add_option("--m", cfg.m, "Alphabet size")->required();
  fac->add_option("--n", cfg.n, "Factor length")->required();
  fac->add_option("--word", factors_word,
                  "Operate on this word instead of the fixed point");

  // complexity -----------------------------------------------------------
  auto* cx = app.add_subcommand(
      "complexity", "Tabulate the number of depth-k classes per length");
  std::string cx_mode = "oracle";
  std::string cx_word;
  cx->add_option("--m", cfg.m, "Alphabet size")->required();
  cx->add_option("--k", cfg.k, "Depth")->required();
  cx->add_option("--n", cfg.n, "Single length");
  cx->add_option("--n-range", cfg.n_range, "Length range LO..HI");
  cx->add_option("--mode", cx_mode,
                 "oracle: count the classes; closed: evaluate the closed "
                 "form; checked: count and compare")
      ->check(CLI::IsMember({"oracle", "closed", "checked"}))
      ->capture_default_str();
  cx->add_option("--word", cx_word,
                 "Profile this word instead of the fixed point");

  // verify ----------------------------------------------------------------
  auto* ver = app.add_subcommand(
      "verify", "Run a verification suite against independent counts");
  std::vector<std::string> suites;
  std::vector<int> extra_m;
  std::vector<std::int64_t> extra_n;
  ver->add_option("--suite", suites,
                  "Suite name (repeatable; 'all' runs every suite)");
  ver->add_option("--m", extra_m, "Extra alphabet sizes to cover");
  ver->add_option("--n", extra_n, "Extra lengths to cover");

  // scan -------------------------------------------------------------------
  auto* scan = app.add_subcommand(
      "scan", "Look for eventual periodicity of the depth-k class counts");
  std::int64_t n_max = 0;
  scan->add_option("--m", cfg.m, "Alphabet size")->required();
  scan->add_option("--k", cfg.k, "Depth (>= 3)")->required();
  scan->add_option("--n-max", n_max, "Largest length (default 3 * m^k)");
  scan->add_option("--budget-mb", cfg.budget_mb, "Memory budget in MiB")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string out;
  int code = kExitOk;
  try {
    if (gen->parsed()) {
      code = cmd_generate(cfg, gen_len, generator, out);
    } else if (bin->parsed()) {
      code = cmd_binom(binom_u, binom_v, empty_v, cfg, out);
    } else if (psi->parsed()) {
      code = cmd_psi(psi_u, empty_u, psi_m, cfg, out);
    } else if (fac->parsed()) {
      code = cmd_factors(cfg, factors_word, out);
    } else if (cx->parsed()) {
      code = cmd_complexity(cfg, cx_mode, cx_word, out);
    } else if (ver->parsed()) {
      code = cmd_verify(cfg, suites, extra_m, extra_n, out);
    } else if (scan->parsed()) {
      code = cmd_scan(cfg, n_max, out);
    }
  } catch (const gtm::BudgetError& e) {
    std::fprintf(stderr, "budget: %s\n", e.what());
    return kExitBudget;
  } catch (const gtm::StabilizationError& e) {
    std::fprintf(stderr, "stabilization: %s\n", e.what());
    return kExitUnstable;
  } catch (const std::overflow_error& e) {
    std::fprintf(stderr, "overflow: %s\n", e.what());
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  // Output is built in full before anything is printed, so a late failure
  // never leaves a truncated table behind.
  std::fwrite(out.data(), 1, out.size(), stdout);
  return code;
}
