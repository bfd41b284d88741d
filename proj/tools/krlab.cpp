#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "krlab/identities.hpp"

using namespace krlab;
using nlohmann::json;

namespace {

/// Bad flag values; exits with status 2 like a parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight weight_flag(const std::string& name, const std::string& text, int n) {
  Weight w;
  try {
    w = parse_weight(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (n > 0 && static_cast<int>(w.size()) != n)
    throw UsageError("--" + name + " has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
  return w;
}

std::vector<int> integer_flag(const std::string& name, const std::string& text) {
  try {
    return halved(parse_weight(text));
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

LieType type_flag(const std::string& s) {
  try {
    return parse_lie_type(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--type: ") + e.what());
  }
}

void require_dominant(LieType type, const Weight& w, const std::string& name) {
  if (!is_dominant(type, w)) throw UsageError("--" + name + " " + weight_to_string(w) + " is not dominant");
}

/// Doubled level from --g, or max(λ_1, μ_1).
int level_flag(const std::string& g, const Weight& lam, const Weight& mu) {
  if (!g.empty()) {
    const Weight v = weight_flag("g", g, 1);
    if (v[0] <= 0) throw UsageError("--g must be positive");
    return v[0];
  }
  return std::max(lam.empty() ? 0 : lam[0], mu.empty() ? 0 : mu[0]);
}

std::string g_text(int g2) { return g2 % 2 ? std::to_string(g2) + "/2" : std::to_string(g2 / 2); }

struct Common {
  std::string format = "text";
};

void add_format(CLI::App* sub, Common& c, bool csv) {
  auto* opt = sub->add_option("--format", c.format, "Output format");
  if (csv) opt->check(CLI::IsMember({"text", "json", "csv"}));
  else opt->check(CLI::IsMember({"text", "json"}));
}

int run_verify(const SuiteConfig& cfg, const std::string& format) {
  const auto reports = run_suite(cfg);
  long failed = 0;
  for (const auto& r : reports) failed += !r.equal;
  if (format == "json") {
    json out{{"suite", cfg.suite},
             {"n", cfg.max_n},
             {"max_weight", cfg.max_weight},
             {"instances", reports.size()},
             {"failed", failed},
             {"reports", json::array()}};
    for (const auto& r : reports) {
      json j = to_json(r);
      j.erase("seconds");
      out["reports"].push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << csv_header() << "\n";
    for (const auto& r : reports) std::cout << to_csv(r) << "\n";
  } else {
    for (const auto& r : reports)
      if (!r.equal) std::cout << "FAIL " << r.identity << " " << r.params.dump() << ": " << r.lhs << " != " << r.rhs << "\n";
    std::cout << cfg.suite << ": " << reports.size() << " instances, " << failed << " failed\n";
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lusztig q-weight multiplicities, KR crystals and oscillating tableaux"};
  app.require_subcommand(1);

  // kl
  Common kl_c;
  std::string kl_type, kl_lam, kl_mu;
  int kl_n = 0;
  bool kl_level = false;
  auto* kl = app.add_subcommand("kl", "KL^{g_n}_{λ,μ}(q) from the q-Kostant partition function");
  kl->add_option("--type", kl_type, "A, B, C or D")->required();
  kl->add_option("--n", kl_n, "Rank")->required()->check(CLI::PositiveNumber);
  kl->add_option("--lambda", kl_lam, "Comma-separated weight, halves as 3/2")->required();
  kl->add_option("--mu", kl_mu, "Comma-separated weight")->required();
  kl->add_flag("--level-restricted", kl_level, "Use the type-A-root exponent map");
  add_format(kl, kl_c, false);

  // kl-qt
  Common qt_c;
  std::string qt_lam, qt_mu;
  int qt_n = 0;
  auto* klqt = app.add_subcommand("kl-qt", "Type B KL(q,t): q on long roots, t on short roots");
  klqt->add_option("--n", qt_n, "Rank")->required()->check(CLI::PositiveNumber);
  klqt->add_option("--lambda", qt_lam, "Weight, e.g. 3/2,3/2,3/2")->required();
  klqt->add_option("--mu", qt_mu, "Weight")->required();
  add_format(klqt, qt_c, false);

  // level
  Common lv_c;
  std::string lv_type, lv_lam, lv_mu, lv_g;
  int lv_n = 0;
  auto* level = app.add_subcommand("level", "Level-restricted multiplicity three ways");
  level->add_option("--type", lv_type, "B, C or D")->required();
  level->add_option("--n", lv_n, "Rank")->required()->check(CLI::PositiveNumber);
  level->add_option("--lambda", lv_lam, "Weight")->required();
  level->add_option("--mu", lv_mu, "Weight")->required();
  level->add_option("--g", lv_g, "Level, default max(λ_1, μ_1)");
  add_format(level, lv_c, false);

  // enumerate
  Common en_c;
  std::string en_kind, en_shape, en_weight, en_g;
  bool en_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "List oscillating tableaux with their energies");
  enumerate->add_option("--kind", en_kind, "ssot, gssot or ssrot")->required();
  enumerate->add_option("--shape", en_shape, "Final shape")->required();
  enumerate->add_option("--weight", en_weight, "Strip lengths T_1, ..., T_n")->required();
  enumerate->add_option("--g", en_g, "Bound c(T) <= g; halves allowed");
  enumerate->add_flag("--count", en_count, "Print only the number of tableaux");
  add_format(enumerate, en_c, false);

  // energy
  Common eg_c;
  std::string eg_kind, eg_tensor, eg_caps;
  bool eg_rows = false;
  auto* energy = app.add_subcommand("energy", "Energy of a column or row tensor b_n ⊗ ... ⊗ b_1");
  energy->add_option("--kind", eg_kind, "box, hdomino or vdomino")->required();
  energy->add_option("--tensor", eg_tensor, "Factors separated by '|', letters by ',' (-2 is 2bar)")->required();
  energy->add_option("--caps", eg_caps, "Factor capacities, default the word lengths");
  energy->add_flag("--rows", eg_rows, "Treat factors as rows B^{1,s} instead of columns B^{r,1}");
  add_format(energy, eg_c, false);

  // verify
  Common vf_c;
  SuiteConfig cfg;
  cfg.suite = "all";
  if (const char* env = std::getenv("KRLAB_JOBS")) cfg.jobs = std::max(1, std::atoi(env));
  auto* verify = app.add_subcommand("verify", "Run an identity suite against the oracles");
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", cfg.max_n, "Largest rank")->check(CLI::PositiveNumber);
  verify->add_option("--max-weight", cfg.max_weight, "Largest |λ|, |μ|")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", cfg.jobs, "Worker threads (default $KRLAB_JOBS or 1)")->check(CLI::PositiveNumber);
  verify->add_flag("--witnesses", cfg.witnesses, "Attach every tableau and its energy to reports");
  add_format(verify, vf_c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kl->parsed()) {
      const LieType type = type_flag(kl_type);
      const Weight lam = weight_flag("lambda", kl_lam, kl_n), mu = weight_flag("mu", kl_mu, kl_n);
      require_dominant(type, lam, "lambda");
      require_dominant(type, mu, "mu");
      const QPoly p = kl_poly(type, kl_n, lam, mu, kl_level ? LMap::LevelA : LMap::One);
      if (kl_c.format == "json")
        std::cout << json{{"type", kl_type}, {"n", kl_n}, {"lambda", weight_to_string(lam)}, {"mu", weight_to_string(mu)},
                          {"poly", to_string(p)}}
                         .dump()
                  << "\n";
      else
        std::cout << to_string(p) << "\n";
      return 0;
    }
    if (klqt->parsed()) {
      const Weight lam = weight_flag("lambda", qt_lam, qt_n), mu = weight_flag("mu", qt_mu, qt_n);
      require_dominant(LieType::B, lam, "lambda");
      require_dominant(LieType::B, mu, "mu");
      const QTPoly p = kl_qt_B(qt_n, lam, mu);
      if (qt_c.format == "json")
        std::cout << json{{"n", qt_n}, {"lambda", weight_to_string(lam)}, {"mu", weight_to_string(mu)},
                          {"poly", to_string(p)}}
                         .dump()
                  << "\n";
      else
        std::cout << to_string(p) << "\n";
      return 0;
    }
    if (level->parsed()) {
      const LieType type = type_flag(lv_type);
      if (type == LieType::A) throw UsageError("--type: level needs B, C or D");
      const Weight lam = weight_flag("lambda", lv_lam, lv_n), mu = weight_flag("mu", lv_mu, lv_n);
      require_dominant(type, lam, "lambda");
      require_dominant(type, mu, "mu");
      const int g2 = level_flag(lv_g, lam, mu);
      LevelTriple t;
      try {
        t = level_formula(type, lv_n, lam, mu, g2);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (lv_c.format == "json")
        std::cout << json{{"type", lv_type},         {"n", lv_n},
                          {"lambda", weight_to_string(lam)}, {"mu", weight_to_string(mu)},
                          {"g", g_text(g2)},         {"lhs", to_string(t.lhs)},
                          {"mid", to_string(t.mid)}, {"rhs", to_string(t.rhs)},
                          {"equal", t.equal()}}
                         .dump()
                  << "\n";
      else
        std::cout << "g   = " << g_text(g2) << "\nlhs = " << to_string(t.lhs) << "\nmid = " << to_string(t.mid)
                  << "\nrhs = " << to_string(t.rhs) << "\n"
                  << (t.equal() ? "equal" : "NOT EQUAL") << "\n";
      return t.equal() ? 0 : 1;
    }
    if (enumerate->parsed()) {
      TabKind kind;
      try {
        kind = parse_tab_kind(en_kind);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--kind: ") + e.what());
      }
      const Partition shape = integer_flag("shape", en_shape);
      const std::vector<int> weight = integer_flag("weight", en_weight);
      if (!is_partition(shape)) throw UsageError("--shape is not a partition");
      for (int w : weight)
        if (w < 0) throw UsageError("--weight entries must be nonnegative");
      const int b2 = en_g.empty() ? kNoBound : weight_flag("g", en_g, 1)[0];
      if (en_count) {
        const long c = count_tableaux(kind, shape, weight, b2);
        if (en_c.format == "json") std::cout << json{{"count", c}}.dump() << "\n";
        else std::cout << c << "\n";
        return 0;
      }
      json rows = json::array();
      enumerate_tableaux(kind, shape, weight, b2, [&](const OscTableau& t) {
        std::string e;
        if (kind == TabKind::SSOT) e = std::to_string(energy_col(Kind::VDomino, phi_c(t)));
        else if (kind == TabKind::GSSOT) e = to_string(qt_energy(phi_c(t)));
        else e = std::to_string(energy_row(Kind::VDomino, phi_r(t)));
        const std::string c = g_text(bound2(t));
        if (en_c.format == "json") rows.push_back({{"tableau", tableau_to_string(t)}, {"energy", e}, {"c", c}});
        else std::cout << tableau_to_string(t) << "  energy=" << e << "  c=" << c << "\n";
        return true;
      });
      if (en_c.format == "json") std::cout << rows.dump(2) << "\n";
      return 0;
    }
    if (energy->parsed()) {
      Kind kind;
      std::vector<Word> words;
      try {
        kind = parse_kind(eg_kind);
        words = parse_tensor(eg_tensor);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      std::vector<int> caps;
      if (!eg_caps.empty()) caps = integer_flag("caps", eg_caps);
      else
        for (const auto& w : words) caps.push_back(static_cast<int>(w.size()));
      if (caps.size() != words.size()) throw UsageError("--caps must have one entry per factor");
      json out{{"kind", kind_name(kind)}, {"tensor", tensor_to_string(words)}};
      try {
        if (eg_rows) {
          RowTensor b;
          for (std::size_t i = 0; i < words.size(); ++i) {
            b.push_back(Row{caps[i], words[i]});
            validate_row(kind, b.back());
          }
          out["energy"] = energy_row(kind, b);
          out["eps0"] = eps0_tensor(kind, b);
        } else {
          ColumnTensor b;
          for (std::size_t i = 0; i < words.size(); ++i) {
            b.push_back(Column{caps[i], words[i]});
            validate_column(kind, b.back());
          }
          out["energy"] = energy_col(kind, b);
          if (kind == Kind::Box) out["qt_energy"] = to_string(qt_energy(b));
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (eg_c.format == "json") std::cout << out.dump() << "\n";
      else {
        std::cout << "energy = " << out["energy"].get<long>() << "\n";
        if (out.contains("eps0")) std::cout << "eps0   = " << out["eps0"].get<int>() << "\n";
        if (out.contains("qt_energy")) std::cout << "q,t    = " << out["qt_energy"].get<std::string>() << "\n";
      }
      return 0;
    }
    if (verify->parsed()) return run_verify(cfg, vf_c.format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
