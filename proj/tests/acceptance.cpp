// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chshlab/cli.hpp"
#include "chshlab/commcomplexity.hpp"
#include "chshlab/lhv.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/random.hpp"
#include "chshlab/superquantum.hpp"
#include "chshlab/surface.hpp"

using namespace chshlab;
namespace fs = std::filesystem;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

LhvModel random_model(Rng& rng) {
  const auto pick = [&] { return rng.bit() ? Outcome::plus : Outcome::minus; };
  LhvModel m;
  const std::size_t k = 1 + rng.next_u64() % 20;
  double sum = 0.0;
  for (std::size_t l = 0; l < k; ++l) {
    m.weights.push_back(rng.uniform());
    sum += m.weights.back();
    m.responses.push_back({{pick(), pick()}, {pick(), pick()}});
  }
  for (auto& w : m.weights) w /= sum;
  return m;
}

Bits bits_of(unsigned value, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (value >> i) & 1u;
  return b;
}

std::string run_cli_capture(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "chshlab");
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Verdict classical_bound() {
  Verdict r;
  const auto cm = classical_max();
  const bool enum_ok = cm.value == 2 && all_strategies().size() == 16 && cm.maximizers.size() == 16;
  Rng rng(2024);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) worst = std::max(worst, chsh_value(correlations(lhv_to_behavior(random_model(rng)))));
  r.pass = enum_ok && worst <= 2.0 + 1e-12;
  r.detail = "classical_max = " + std::to_string(cm.value) + " over 16 strategies; worst of 10^4 random LHV models = " +
             fmt(worst);
  return r;
}

Verdict tsirelson_bound() {
  Verdict r;
  Rng rng(2025);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) worst = std::max(worst, spectral_norm(chat(random_settings(rng))));
  const auto opt = optimize_settings(singlet_state(), 0);
  r.pass = worst <= kTsirelson + 1e-9 && opt.converged && std::abs(opt.value - 2.8284271247) <= 1e-6;
  r.detail = "max ||C|| over 10^4 random settings = " + fmt(worst) + "; singlet optimum = " + fmt(opt.value, 15);
  return r;
}

Verdict operator_identity() {
  Verdict r;
  Rng rng(2026);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) worst = std::max(worst, chat_squared_identity(random_settings(rng)));
  r.pass = worst < 1e-12;
  r.detail = "max Frobenius residual over 10^3 random settings = " + fmt(worst, 3);
  return r;
}

Verdict pr_saturation() {
  Verdict r;
  const auto pr = pr_box();
  const double v = chsh_value(correlations(pr));
  const bool ns = no_signaling_check(pr, 1e-9).pass;
  r.pass = v == 4.0 && ns;
  r.detail = "CHSH(pr_box) = " + fmt(v, 17) + ", no-signaling " + (ns ? "pass" : "fail");
  return r;
}

Verdict pnorm_interpolation() {
  Verdict r;
  const double b1 = pnorm_chsh_bound(PNormSpace(1)), b2 = pnorm_chsh_bound(PNormSpace(2));
  const double binf = pnorm_chsh_bound(PNormSpace::infinity());
  bool monotone = true;
  double prev = INFINITY;
  for (int k = 0; k < 100; ++k) {
    const double p = std::pow(1000.0, k / 99.0);  // 1 .. 1000, log-spaced
    const double cur = pnorm_chsh_bound(PNormSpace(p));
    monotone = monotone && cur < prev;
    prev = cur;
  }
  monotone = monotone && binf < prev;
  r.pass = b1 == 4.0 && std::abs(b2 - kTsirelson) <= 1e-12 && binf == 2.0 && monotone;
  r.detail = "p=1: " + fmt(b1) + ", p=2: " + fmt(b2) + ", p=inf: " + fmt(binf) + ", strictly decreasing on 100 points: " +
             (monotone ? "yes" : "no");
  return r;
}

Verdict degenerate_norm() {
  Verdict r;
  const auto h = hbar_infinity_norm_check();
  r.pass = h.degenerate_bound == 4.0 && std::abs(h.degenerate_bound - h.p1_bound) <= 1e-12;
  r.detail = "degenerate chain = " + fmt(h.degenerate_bound) + ", p=1 bound = " + fmt(h.p1_bound) +
             ", difference = " + fmt(h.difference, 3);
  return r;
}

Verdict vandam_triviality() {
  Verdict r;
  std::uint64_t pairs = 0, correct = 0, one_bit = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const BoxEnsemble ens{n, 4.0, 11};
    for (unsigned xv = 0; xv < (1u << n); ++xv)
      for (unsigned yv = 0; yv < (1u << n); ++yv) {
        const auto x = bits_of(xv, n), y = bits_of(yv, n);
        const auto run = vandam_inner_product(x, y, ens, pairs);
        ++pairs;
        correct += run.correct;
        // Bob's answer is recomputed from his own view plus the single transcript bit.
        Rng rng(ens.seed, pairs - 1);
        Bits bob(n);
        for (std::size_t i = 0; i < n; ++i) bob[i] = use_box(noisy_box(4.0).behavior, x[i], y[i], rng).beta;
        BobView view{y, bob, run.transcript};
        const bool same = bob_output(view) == run.output;
        view.message = !view.message;
        one_bit += same && bob_output(view) != run.output;
      }
  }
  r.pass = correct == pairs && one_bit == pairs;
  r.detail = std::to_string(correct) + "/" + std::to_string(pairs) + " input pairs correct for n = 1..6; " +
             std::to_string(one_bit) + " runs decided by one transcript bit";
  return r;
}

Verdict noisy_curve() {
  Verdict r;
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(0.2 * k);
  const auto rows = success_curve(8, grid, 100000, 2027);
  int within = 0, checked = 0;
  double worst_z = 0.0;
  bool marked = false;
  for (const auto& row : rows) {
    if (row.is_threshold) {
      marked = std::abs(row.X - 3.2659863237) <= 1e-9;
      continue;
    }
    ++checked;
    const double sigma = std::sqrt(row.predicted * (1 - row.predicted) / row.trials);
    const double diff = std::abs(row.empirical - row.predicted);
    if (sigma == 0.0) {
      within += diff == 0.0;
    } else {
      within += diff <= 5 * sigma;
      worst_z = std::max(worst_z, diff / sigma);
    }
  }
  r.pass = checked == 21 && within == 21 && marked;
  r.detail = std::to_string(within) + "/" + std::to_string(checked) + " grid points within 5 sigma (worst " +
             fmt(worst_z, 3) + " sigma, n = 8, 10^5 trials); X_cc row " + (marked ? "marked" : "missing");
  return r;
}

struct CutScan {
  double q0_max = 0.0;
  bool q1_constant_4 = true;
  bool classical_cut = false;
  bool superquantum_cut = false;
  std::size_t cells = 0;
};

CutScan scan_emitted_surface(const std::string& csv) {
  CutScan s;
  std::map<double, double> cut_max;
  for (const auto& row : read_surface_csv(csv)) {
    ++s.cells;
    cut_max[row[1]] = std::max(cut_max[row[1]], row[3]);
    if (row[1] == 0.0) s.q0_max = std::max(s.q0_max, row[3]);
    if (row[1] == 1.0) s.q1_constant_4 = s.q1_constant_4 && std::abs(row[2] - 4.0) <= 1e-12;
  }
  for (const auto& [q, m] : cut_max) {
    s.classical_cut = s.classical_cut || m <= 2.0 + 1e-9;
    s.superquantum_cut = s.superquantum_cut || m > kTsirelson + 1e-9;
  }
  return s;
}

Verdict two_knob_surface() {
  Verdict r;
  int code = 0;
  const auto quantum = scan_emitted_surface(run_cli_capture({"surface", "--base", "quantum-singlet"}, code));
  const bool q0_ok = std::abs(quantum.q0_max - kTsirelson) <= 1e-6;
  r.pass = code == 0 && q0_ok && quantum.q1_constant_4 && quantum.classical_cut && quantum.superquantum_cut;
  r.detail = "quantum-singlet grid (" + std::to_string(quantum.cells) + " cells): q=0 max = " + fmt(quantum.q0_max) +
             ", q=1 row constant 4: " + (quantum.q1_constant_4 ? "yes" : "no") +
             ", cut with max <= 2: " + (quantum.classical_cut ? "yes" : "no") +
             ", cut with max > 2 sqrt 2: " + (quantum.superquantum_cut ? "yes" : "no");

  const auto classical =
      scan_emitted_surface(run_cli_capture({"surface", "--base", "classical-deterministic"}, code));
  r.notes.push_back("every cut of the quantum-singlet grid has max 4q + (1-q) 2 sqrt 2 >= 2 sqrt 2, so no cut "
                    "with max <= 2 can appear next to a q=0 row reaching 2 sqrt 2");
  r.notes.push_back(std::string("classical-deterministic grid: q=0 max = ") + fmt(classical.q0_max) +
                    ", cut with max <= 2: " + (classical.classical_cut ? "yes" : "no") +
                    ", cut with max > 2 sqrt 2: " + (classical.superquantum_cut ? "yes" : "no"));
  return r;
}

Verdict determinism() {
  Verdict r;
  const fs::path dir = fs::temp_directory_path() / ("chshlab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string fixtures = CHSHLAB_FIXTURES;
  const std::vector<std::string> commands{
      "certify --seed 5",
      "certify --seed 5 --format json",
      "eval -m " + fixtures + "/lhv_mixture.json --sample --trials 5000 --seed 6",
      "eval -m " + fixtures + "/singlet_strategy.json --format json",
      "optimize -s " + fixtures + "/singlet_state.json --seed 7",
      "optimize -s " + fixtures + "/product_state.json --seed 7 --format json",
      "surface",
      "surface --base classical-deterministic --format json",
      "vandam --trials 20000 --seed 8",
      "vandam --n 4 --trials 5000 --seed 8 --format json",
  };
  int identical = 0;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    std::string outputs[2];
    bool ok = true;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path file = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep));
      const std::string cmd = std::string(CHSHLAB_CLI_PATH) + " " + commands[k] + " > " + file.string() + " 2>/dev/null";
      const int status = std::system(cmd.c_str());
      ok = ok && WIFEXITED(status) && WEXITSTATUS(status) == 0;
      outputs[rep] = slurp(file);
    }
    if (ok && !outputs[0].empty() && outputs[0] == outputs[1]) {
      ++identical;
    } else {
      r.notes.push_back("differs or failed: chshlab " + commands[k]);
    }
  }
  fs::remove_all(dir);
  r.pass = identical == static_cast<int>(commands.size());
  r.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " seeded commands byte-identical across two runs of the binary";
  return r;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no runtime limit
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "classical bound", 1.0, classical_bound},
      {2, "Tsirelson bound", 10.0, tsirelson_bound},
      {3, "operator identity", 1.0, operator_identity},
      {4, "super-quantum saturation", 0.0, pr_saturation},
      {5, "l^p interpolation", 0.0, pnorm_interpolation},
      {6, "degenerate-norm check", 0.0, degenerate_norm},
      {7, "van Dam triviality", 5.0, vandam_triviality},
      {8, "noisy-box curve", 60.0, noisy_curve},
      {9, "two-knob surface", 10.0, two_knob_surface},
      {10, "determinism", 0.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;

    std::string timing = fmt(secs, 3) + " s";
    if (c.limit_seconds > 0.0) timing += " (limit " + fmt(c.limit_seconds, 3) + " s)";
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << " [" << c.name << "]: " << o.detail << "; "
              << timing << '\n';
    for (const auto& note : o.notes) std::cout << "      note: " << note << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
