#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "krlab/identities.hpp"

namespace krlab {

namespace {

using Task = std::function<IdentityReport()>;

/// Partitions with at most n parts and size at most w, padded to n.
std::vector<Partition> grid(int n, int w) {
  std::vector<Partition> out;
  for (int s = 0; s <= w; ++s)
    for (auto& p : partitions_of(s, n, s)) out.push_back(std::move(p));
  return out;
}

std::string g_string(int g2) { return g2 % 2 ? std::to_string(g2) + "/2" : std::to_string(g2 / 2); }

nlohmann::json pair_params(int n, const Partition& lam, const Partition& mu, int g) {
  return {{"n", n}, {"lambda", vec_to_string(lam)}, {"mu", vec_to_string(mu)}, {"g", g}};
}

template <class P>
nlohmann::json witness_json(const std::vector<Witness<P>>& ws) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : ws) out.push_back({{"tableau", tableau_to_string(w.tableau)}, {"value", to_string(w.value)}});
  return out;
}

IdentityReport timed(const std::function<IdentityReport()>& f) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void thm_c_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (int n = 1; n <= cfg.max_n; ++n)
    for (const auto& lam : grid(n, cfg.max_weight))
      for (const auto& mu : grid(n, cfg.max_weight))
        for (int g : {lam[0], lam[0] + 1})
          tasks.push_back([=, w = cfg.witnesses] {
            IdentityReport r;
            r.identity = "thm-c";
            r.params = pair_params(n, lam, mu, g);
            std::vector<Witness<QPoly>> ws;
            const QPoly rhs = thm_c_rhs(lam, mu, n, g, w ? &ws : nullptr);
            const QPoly lhs = kl_poly(LieType::C, n, doubled(lam), doubled(mu));
            r.lhs = to_string(lhs);
            r.rhs = to_string(rhs);
            r.equal = lhs == rhs;
            if (w) r.witnesses = witness_json(ws);
            return r;
          });
}

void thm_b_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int max_n = std::min(cfg.max_n, 3), max_w = std::min(cfg.max_weight, 5);
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lam : grid(n, max_w))
      for (const auto& mu : grid(n, max_w))
        for (int g : {lam[0], lam[0] + 1})
          tasks.push_back([=, w = cfg.witnesses] {
            IdentityReport r;
            r.identity = "thm-b";
            r.params = pair_params(n, lam, mu, g);
            std::vector<Witness<QTPoly>> ws;
            const QTPoly rhs = thm_b_rhs(lam, mu, n, g, w ? &ws : nullptr);
            Weight ls = doubled(lam), ms = doubled(mu);
            for (int& x : ls) ++x;
            for (int& x : ms) ++x;
            const QTPoly lhs = kl_qt_B(n, ls, ms);
            r.lhs = to_string(lhs);
            r.rhs = to_string(rhs);
            r.equal = lhs == rhs;
            if (w) r.witnesses = witness_json(ws);
            return r;
          });
}

void morris_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks, bool type_b) {
  const int max_n = type_b ? std::min(cfg.max_n, 3) : cfg.max_n;
  const int max_w = type_b ? std::min(cfg.max_weight, 5) : cfg.max_weight;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& lam : grid(n, max_w))
      for (const auto& mu : grid(n, max_w))
        tasks.push_back([=] {
          IdentityReport r;
          r.identity = type_b ? "morris-b" : "morris-c";
          r.params = {{"n", n}, {"lambda", vec_to_string(lam)}, {"mu", vec_to_string(mu)}};
          if (type_b) {
            Weight ls = doubled(lam), ms = doubled(mu);
            for (int& x : ls) ++x;
            for (int& x : ms) ++x;
            const QTPoly lhs = kl_qt_B(n, ls, ms), rhs = morris_b_qt(lam, mu, n);
            r.lhs = to_string(lhs);
            r.rhs = to_string(rhs);
            r.equal = lhs == rhs;
          } else {
            const QPoly lhs = kl_poly(LieType::C, n, doubled(lam), doubled(mu)), rhs = morris_c(lam, mu, n);
            r.lhs = to_string(lhs);
            r.rhs = to_string(rhs);
            r.equal = lhs == rhs;
          }
          return r;
        });
}

void add_rohs_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int max_n = std::min(cfg.max_n, 3), max_w = std::min(cfg.max_weight, 4);
  for (LieType type : {LieType::C, LieType::B})
    for (int n = 2; n <= max_n; ++n)
      for (const auto& lam : grid(n, max_w))
        for (const auto& mu : grid(n, max_w))
          for (int i = 1; i <= n; ++i) {
            if (morris_length(lam, mu, i) < 0) continue;
            tasks.push_back([=] {
              const int g = lam[0] + 3;
              const auto a = audit_add_rohs(type, lam, mu, n, g, i);
              IdentityReport r;
              r.identity = std::string("add-rohs-") + lie_type_char(type);
              r.params = pair_params(n, lam, mu, g);
              r.params["i"] = i;
              r.lhs = "pairs=" + std::to_string(a.pairs) + " distinct=" + std::to_string(a.distinct) +
                      " misses=" + std::to_string(a.misses) + " energy_faults=" + std::to_string(a.energy_faults);
              r.rhs = "targets=" + std::to_string(a.targets);
              r.equal = a.pairs == a.targets && a.distinct == a.pairs && a.misses == 0 && a.energy_faults == 0;
              return r;
            });
          }
}

void involution_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int max_n = std::min(cfg.max_n, 3), max_w = std::min(cfg.max_weight, 4);
  for (int n = 2; n <= max_n; ++n)
    for (const auto& lam : grid(n, max_w))
      for (const auto& mu : grid(n, max_w))
        for (int extra : {1, 2})
          tasks.push_back([=] {
            const int g = lam[0] + extra;
            const auto rep = involution_partition(lam, mu, n, g);
            IdentityReport r;
            r.identity = "involution";
            r.params = pair_params(n, lam, mu, g);
            r.lhs = to_string(rep.telescoped);
            r.rhs = to_string(rep.direct);
            r.equal = rep.chaining && rep.bounded && rep.energy_preserved && rep.matches_ssot && rep.telescoped == rep.direct;
            if (!r.equal)
              r.witnesses = {{"chaining", rep.chaining},
                             {"bounded", rep.bounded},
                             {"energy_preserved", rep.energy_preserved},
                             {"matches_ssot", rep.matches_ssot}};
            return r;
          });
}

/// Dominant weights (doubled) of a type with |λ| ≤ w, integral or spin.
std::vector<Weight> level_weights(LieType type, int n, int w, bool spin) {
  std::vector<Weight> out;
  for (const auto& p : grid(n, w)) {
    Weight x = doubled(p);
    if (spin)
      for (int& v : x) ++v;
    out.push_back(x);
    if (type == LieType::D && x[n - 1] != 0) {
      x[n - 1] = -x[n - 1];
      out.push_back(x);
    }
  }
  return out;
}

void level_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int max_n = std::min(cfg.max_n, 3), max_w = std::min(cfg.max_weight, 4);
  for (LieType type : {LieType::B, LieType::C, LieType::D})
    for (int n = type == LieType::D ? 2 : 1; n <= max_n; ++n)
      for (bool spin : {false, true}) {
        if (spin && type == LieType::C) continue;
        const auto ws = level_weights(type, n, max_w, spin);
        for (const auto& lam : ws)
          for (const auto& mu : ws) {
            int top = 0;
            for (int v : lam) top = std::max(top, std::abs(v));
            for (int v : mu) top = std::max(top, std::abs(v));
            // smallest admissible g (doubled, right parity), and one more
            const int g0 = top % 2 == (spin ? 1 : 0) ? top : top + 1;
            for (int g2 : {g0, g0 + 2})
              tasks.push_back([=] {
                const auto t = level_formula(type, n, lam, mu, g2);
                IdentityReport r;
                r.identity = std::string("level-") + lie_type_char(type);
                r.params = {{"type", std::string(1, lie_type_char(type))}, {"n", n},
                            {"lambda", weight_to_string(lam)},               {"mu", weight_to_string(mu)},
                            {"g", g_string(g2)}};
                r.lhs = to_string(t.lhs);
                r.rhs = to_string(t.rhs);
                r.equal = t.equal();
                if (!r.equal) r.witnesses = {{"mid", to_string(t.mid)}};
                return r;
              });
          }
      }
}

void xk_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int rows = std::min(cfg.max_n, 3), max_w = cfg.max_weight;
  for (Kind kind : {Kind::Box, Kind::HDomino, Kind::VDomino})
    for (int total = 0; total <= max_w; ++total)
      for (const auto& lam : grid(rows, total))
        tasks.push_back([=] {
          std::vector<int> mu(rows, 0);
          mu[0] = total;
          const auto table = xk_filter_table(kind, lam, mu);
          std::map<Partition, std::int64_t> expect;
          for (const auto& nu : partitions_of(total, rows, total))
            if (auto c = xk_coefficient(kind, nu, lam)) expect[trimmed(nu)] = c;
          auto show = [](const std::map<Partition, std::int64_t>& m) {
            std::string s;
            for (const auto& [nu, c] : m) s += (s.empty() ? "" : " ") + vec_to_string(nu) + ":" + std::to_string(c);
            return s.empty() ? std::string("{}") : s;
          };
          IdentityReport r;
          r.identity = "x=k-" + kind_name(kind);
          r.params = {{"kind", kind_name(kind)}, {"lambda", vec_to_string(lam)}, {"size", total}, {"rows", rows}};
          r.lhs = show(table);
          r.rhs = show(expect);
          r.equal = table == expect;
          return r;
        });
}

void q1_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int max_n = std::min(cfg.max_n, 3), max_g = 3;
  for (LieType type : {LieType::B, LieType::C, LieType::D})
    for (int n = type == LieType::D ? 2 : 1; n <= max_n; ++n)
      for (bool spin : {false, true}) {
        if (spin && type == LieType::C) continue;
        for (int g = 1; g <= max_g; ++g) {
          const int g2 = spin ? 2 * g + 1 : 2 * g;
          const auto ws = level_weights(type, n, n * g, spin);
          for (const auto& lam : ws)
            for (const auto& mu : ws) {
              bool inside = true;
              for (int i = 0; i < n; ++i) inside &= std::abs(lam[i]) <= g2 && std::abs(mu[i]) <= g2;
              if (inside) tasks.push_back([=] { return q1_counts(type, n, lam, mu, g2); });
            }
        }
      }
  for (int n = 1; n <= max_n; ++n)
    for (int g = 1; g <= 3; ++g)
      tasks.push_back([=] {
        auto all = q1_property_suite(n, g);
        IdentityReport r;
        r.identity = "q1-properties";
        r.params = {{"n", n}, {"g", g}, {"checks", all.size()}};
        long bad = 0;
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& x : all)
          if (!x.equal) {
            ++bad;
            failures.push_back(to_json(x));
          }
        r.lhs = std::to_string(all.size() - bad) + " passed";
        r.rhs = std::to_string(all.size()) + " checks";
        r.equal = bad == 0;
        if (bad) r.witnesses = failures;
        return r;
      });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"thm-c", "thm-b", "morris-c", "morris-b", "add-rohs", "involution", "level", "xk", "q1", "all"};
}

std::vector<IdentityReport> run_suite(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  const bool all = cfg.suite == "all";
  bool known = all;
  auto want = [&](const char* name) {
    const bool hit = all || cfg.suite == name;
    known |= hit;
    return hit;
  };
  if (want("thm-c")) thm_c_tasks(cfg, tasks);
  if (want("thm-b")) thm_b_tasks(cfg, tasks);
  if (want("morris-c")) morris_tasks(cfg, tasks, false);
  if (want("morris-b")) morris_tasks(cfg, tasks, true);
  if (want("add-rohs")) add_rohs_tasks(cfg, tasks);
  if (want("involution")) involution_tasks(cfg, tasks);
  if (want("level")) level_tasks(cfg, tasks);
  if (want("xk")) xk_tasks(cfg, tasks);
  if (want("q1")) q1_tasks(cfg, tasks);
  if (!known) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");

  std::vector<IdentityReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        out[k] = timed(tasks[k]);
      } catch (const std::exception& e) {
        out[k].identity = "error";
        out[k].lhs = e.what();
        out[k].equal = false;
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace krlab
