// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "output.hpp"
#include "suites.hpp"

#include "su11kit/su11core.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <regex>
#include <string>
#include <vector>

using namespace su11kit;
using namespace su11kit::cli;

namespace {

struct Timed {
  VerificationReport report;
  double seconds;
};

Timed timed(const std::function<VerificationReport()>& f) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = f();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {std::move(r), dt.count()};
}

const ReportEntry* find(const VerificationReport& r, const std::string& id, std::string& why) {
  const ReportEntry* e = r.find(id);
  if (!e) why += " missing " + id + ";";
  return e;
}

// Requires the entry to exist, to pass, and its residual to be below `bound`.
void require_below(const VerificationReport& r, const std::string& id, double bound,
                   std::string& why) {
  const ReportEntry* e = find(r, id, why);
  if (!e) return;
  if (!e->pass || !(e->residual < bound)) {
    why += " " + id + "=" + format_number(e->residual) + " (bound " + format_number(bound) + ");";
  }
}

void require_all_pass(const VerificationReport& r, const std::string& prefix,
                      std::string& why) {
  for (const ReportEntry& e : r.sorted_entries()) {
    if (e.check_id.rfind(prefix, 0) == 0 && !e.pass) {
      why += " " + e.check_id + "=" + format_number(e.residual) + " > " +
             format_number(e.tolerance) + ";";
    }
  }
}

void require_time(double seconds, double limit, std::string& why) {
  if (seconds >= limit) {
    why += " runtime " + format_number(seconds) + " s over " + format_number(limit) + " s;";
  }
}

int failures = 0;

void verdict(int n, const std::string& title, const std::string& why, const std::string& info) {
  const bool ok = why.empty();
  if (!ok) ++failures;
  std::printf("criterion %d: %s  %s  [%s]%s\n", n, ok ? "PASS" : "FAIL", title.c_str(),
              info.c_str(), ok ? "" : (" --" + why).c_str());
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string without_timestamp(const std::string& json) {
  static const std::regex stamp("\"timestamp\": \"[^\"]*\"");
  return std::regex_replace(json, stamp, "\"timestamp\": \"\"");
}

}  // namespace

int main() {
  const unsigned workers = worker_count();

  // 1. Algebra at lambda in {0.5, 1, 1.5, 2.5}, d = 64, boundary 8.
  {
    std::string why;
    std::vector<Task> tasks;
    for (double lam : {0.5, 1.0, 1.5, 2.5}) {
      tasks.emplace_back([lam] { return verify_structure(BargmannSpace(lam, 64, 8)); });
    }
    const Timed t = timed([&] { return run_tasks(tasks, workers); });
    double worst = 0.0;
    for (const ReportEntry& e : t.report.entries()) {
      if (!e.pass) why += " " + e.check_id + " failed;";
      if (!(e.residual < 1e-10)) why += " " + e.check_id + "=" + format_number(e.residual) + ";";
      worst = std::max(worst, e.residual);
    }
    for (const char* family : {"ladder.commutator.", "skew.commutator.", "ladder.adjoint.",
                               "casimir.scalar", "intertwining.", "reorder.derived."}) {
      bool seen = false;
      for (const ReportEntry& e : t.report.entries()) seen |= e.check_id.rfind(family, 0) == 0;
      if (!seen) why += std::string(" no ") + family + " entries;";
    }
    require_time(t.seconds, 5.0, why);
    verdict(1, "algebra identities < 1e-10", why,
            format_number(worst) + " worst, " + secs(t.seconds));
  }

  // 2. Printed reordering form at lambda = 3: predicts 1 where aa^* = 1/3.
  {
    std::string why;
    const BargmannSpace space(3.0, 64, 8);
    const VerificationReport r = verify_structure(space);
    const ComplexMatrix a = annihilator_a(space);
    const double aad = (a * a.adjoint())(0, 0).real();
    const double ada = (a.adjoint() * a)(0, 0).real();
    const double printed = -(3.0 * ada - 1.0) / (ada + 3.0 - 2.0);
    if (std::abs(printed - 1.0) > 1e-15) why += " printed form gives " + format_number(printed) + ";";
    if (std::abs(aad - 1.0 / 3.0) > 1e-15) why += " aa^*(0,0) = " + format_number(aad) + ";";
    const ReportEntry* e = find(r, "reorder.printed_discrepancy.first@lambda=3", why);
    if (e && (e->notes.find("predicts 1 ") == std::string::npos || !e->pass)) {
      why += " discrepancy entry does not document 1 vs 1/3;";
    }
    require_below(r, "reorder.derived.aadag@lambda=3", 1e-10, why);
    require_below(r, "reorder.derived.adaga@lambda=3", 1e-10, why);
    verdict(2, "printed reordering discrepancy documented", why,
            "printed " + format_number(printed) + " vs aa^* " + format_number(aad));
  }

  // 3 and 4. Coherent suite at lambda = 1.5, d = 64, plus the refusal path.
  {
    const Timed t = timed([] { return run_checks(Suite::coherent, SuiteConfig{}); });
    const VerificationReport& r = t.report;
    std::string why;
    require_below(r, "coherent.eigenvector_a@lambda=1.5", 1e-8, why);
    require_below(r, "coherent.vacuum_overlap@lambda=1.5", 1e-10, why);
    require_below(r, "coherent.resolution_of_identity@lambda=1.5", 1e-6, why);
    if (const ReportEntry* e = find(r, "coherent.resolution_of_identity@lambda=0.5", why)) {
      if (!e->pass || e->notes.rfind("refused: lambda <= 1", 0) != 0) {
        why += " lambda=0.5 refusal not recorded;";
      }
    }
    require_all_pass(r, "coherent.", why);
    require_time(t.seconds, 20.0, why);
    const ReportEntry* roi = r.find("coherent.resolution_of_identity@lambda=1.5");
    verdict(3, "coherent states, overlap, resolution of identity, refusal", why,
            "resolution " + (roi ? format_number(roi->residual) : std::string("?")) + ", " +
                secs(t.seconds));

    std::string why4;
    require_below(r, "coherent.mobius_round_trip@lambda=1.5", 1e-14, why4);
    for (const char* id : {"coherent.affine.normal_eigenvalue@lambda=1.5",
                           "coherent.affine.antinormal_eigenvalue@lambda=1.5"}) {
      require_below(r, id, 1e-7, why4);
      if (const ReportEntry* e = r.find(id)) {
        const auto& p = e->params;
        if (!p.count("s_max") || !p.count("t_max") ||
            std::get<double>(p.at("s_max")) < 2.0 || std::get<double>(p.at("t_max")) < 0.5) {
          why4 += std::string(" ") + id + " box smaller than |s|<=2, |t|<=0.5;";
        }
      }
    }
    const ReportEntry* rt = r.find("coherent.mobius_round_trip@lambda=1.5");
    verdict(4, "Mobius round trip and affine eigenvalues", why4,
            "round trip " + (rt ? format_number(rt->residual) : std::string("?")));
  }

  // 5. Boson suite.
  {
    const Timed t = timed([] { return run_checks(Suite::boson, SuiteConfig{}); });
    std::string why;
    require_all_pass(t.report, "boson.", why);
    for (const char* id : {"boson.parity.even.ladder_match", "boson.parity.odd.ladder_match",
                           "boson.parity.even.casimir", "boson.parity.odd.casimir",
                           "boson.parity.even.number_states", "boson.parity.odd.number_states",
                           "boson.squeezed.eigenvalue", "boson.odd_squeezed.eigenvalue",
                           "boson.squeezed.uncertainty_bound"}) {
      bool seen = false;
      for (const ReportEntry& e : t.report.entries()) seen |= e.check_id.rfind(id, 0) == 0;
      if (!seen) why += std::string(" no ") + id + " entry;";
    }
    require_time(t.seconds, 30.0, why);
    verdict(5, "boson parity realizations, squeezed states, uncertainty", why,
            std::to_string(t.report.entries().size()) + " entries, " + secs(t.seconds));
  }

  // 6. Wavelet suite, k in {0.5, 1, 2}, N = 4096.
  {
    const Timed t = timed([] { return run_checks(Suite::wavelet, SuiteConfig{}); });
    std::string why;
    require_all_pass(t.report, "wavelet.", why);
    for (const char* k : {"0.5", "1", "2"}) {
      for (const char* id : {"wavelet.vacuum.norm", "wavelet.vacuum.l0_expectation",
                             "wavelet.vacuum.lminus_kernel", "wavelet.casimir.vacuum",
                             "wavelet.ladder.coefficient", "wavelet.convergence.order2",
                             "wavelet.convergence.order4"}) {
        find(t.report, std::string(id) + "@k=" + k, why);
      }
    }
    require_time(t.seconds, 60.0, why);
    verdict(6, "wavelet realization at N=4096", why, secs(t.seconds));
  }

  // 7 and 8. Extension suite: lambda = 1.5 and adjoint mode at 0.5, d = 48,
  // boundary 12, five seeds, plus the PQ^{-1} realization.
  {
    const Timed t = timed([] { return run_checks(Suite::extension, SuiteConfig{}); });
    const VerificationReport& r = t.report;
    std::string why;
    require_below(r, "extension.normality@lambda=1.5", 1e-6, why);
    require_below(r, "extension.moment.second@lambda=1.5", 1e-6, why);
    require_below(r, "extension.moment.first@lambda=1.5", 1e-8, why);
    require_below(r, "extension.second_moment.equality@lambda=1.5", 1e-6, why);
    require_below(r, "extension.second_moment.floor@lambda=1.5", 1e-6, why);
    require_below(r, "extension.adjoint.normality@lambda=0.5", 1e-6, why);
    require_below(r, "extension.adjoint.moment.first@lambda=0.5", 1e-8, why);
    require_below(r, "extension.adjoint.moment.second@lambda=0.5", 1e-6, why);
    require_below(r, "extension.adjoint.second_moment.floor@lambda=0.5", 1e-6, why);
    for (const ReportEntry& e : r.sorted_entries()) {
      if (e.check_id.rfind("extension.pq.", 0) != 0 && !e.pass) why += " " + e.check_id + " failed;";
    }
    if (const ReportEntry* e = r.find("extension.moment.first@lambda=1.5")) {
      const auto it = e->params.find("seeds");
      if (it == e->params.end() || std::get<long long>(it->second) != 5) {
        why += " moments not taken over 5 seeds;";
      }
    }
    require_time(t.seconds, 90.0, why);
    const ReportEntry* n = r.find("extension.normality@lambda=1.5");
    verdict(7, "normal extension, moments, second-moment floor, adjoint mode", why,
            "normality " + (n ? format_number(n->residual) : std::string("?")) + ", " +
                secs(t.seconds));

    std::string why8;
    require_below(r, "extension.pq.candidate_plus_i.match", 1e-6, why8);
    require_below(r, "extension.pq.candidate_plus_i.normality", 1e-6, why8);
    require_below(r, "extension.pq.candidate_plus_i.moment.first", 1e-8, why8);
    const ReportEntry* disc = find(r, "extension.pq.candidate_minus_i_quarter.discrepancy", why8);
    find(r, "extension.pq.candidate_minus_i_quarter.moment.first", why8);
    if (disc && disc->notes.find("normality defect") == std::string::npos) {
      why8 += " c=-i/4 deviation not reported;";
    }
    require_all_pass(r, "extension.pq.", why8);
    verdict(8, "PQ^{-1} candidates c=+i and c=-i/4", why8, disc ? disc->notes : "");
  }

  // 9. Determinism: same config and seed give identical JSON modulo timestamp,
  // also across worker counts.
  {
    std::string why;
    for (Suite s : {Suite::algebra, Suite::coherent, Suite::boson, Suite::wavelet,
                    Suite::extension}) {
      SuiteConfig c;
      c.seed = 7;
      const std::string first = without_timestamp(report_json(run_checks(s, c)));
      const std::string second = without_timestamp(report_json(run_checks(s, c)));
      VerificationReport serial = run_tasks(suite_tasks(s, c), 1);
      VerificationReport parallel = run_tasks(suite_tasks(s, c), 4);
      serial.metadata() = parallel.metadata() = run_checks(s, c).metadata();
      if (first != second) why += " " + suite_name(s) + " differs between runs;";
      if (without_timestamp(report_json(serial)) != first ||
          without_timestamp(report_json(parallel)) != first) {
        why += " " + suite_name(s) + " depends on the worker count;";
      }
    }
    verdict(9, "byte-identical JSON apart from timestamp", why, "5 suites, repeated and with 1 and 4 workers");
  }

  return failures == 0 ? 0 : 1;
}
