#include "distributions.hpp"
#include "output.hpp"
#include "parse.hpp"
#include "suites.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>

using namespace su11kit;
using namespace su11kit::cli;

TEST(Parse, Reals) {
  EXPECT_DOUBLE_EQ(parse_real("1.5"), 1.5);
  EXPECT_DOUBLE_EQ(parse_real(" -2e-3 "), -2e-3);
  EXPECT_DOUBLE_EQ(parse_real("cosh0.5"), std::cosh(0.5));
  EXPECT_DOUBLE_EQ(parse_real("sinh(0.5)"), std::sinh(0.5));
  EXPECT_DOUBLE_EQ(parse_real("exp(-1)"), std::exp(-1.0));
  EXPECT_THROW(parse_real("abc"), UsageError);
  EXPECT_THROW(parse_real("1.5x"), UsageError);
  EXPECT_THROW(parse_real("sqrt(-1)"), UsageError);
  EXPECT_THROW(parse_real(""), UsageError);
}

TEST(Parse, ComplexForms) {
  EXPECT_EQ(parse_complex("0.3,-0.2"), Complex(0.3, -0.2));
  EXPECT_EQ(parse_complex("0.3-0.2i"), Complex(0.3, -0.2));
  EXPECT_EQ(parse_complex("0.3+0.2i"), Complex(0.3, 0.2));
  EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(parse_complex("1.5"), Complex(1.5, 0.0));
  EXPECT_THROW(parse_complex("1+xi"), UsageError);
  EXPECT_THROW(parse_complex("1,2,3"), UsageError);
}

TEST(Parse, DiskStates) {
  EXPECT_EQ(std::get<NumberStateSpec>(parse_disk_state("n:3")).n, 3);
  EXPECT_EQ(std::get<CoherentStateSpec>(parse_disk_state("zeta:0.1,0.2")).zeta, Complex(0.1, 0.2));
  EXPECT_THROW(parse_disk_state("n:-1"), UsageError);
  EXPECT_THROW(parse_disk_state("psi:1"), UsageError);
}

TEST(Output, CsvQuotingAndDigits) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  const std::string csv = numeric_csv({"x", "y"}, {{0.1, 1.0 / 3.0}});
  EXPECT_EQ(csv, "x,y\n0.10000000000000001,0.33333333333333331\n");
}

TEST(Output, ReportSchema) {
  VerificationReport r;
  r.add("b.check", {{"lambda", 1.5}, {"dim", 64LL}, {"zeta", std::string("0+0.4i")}}, 1e-12, 1e-10, "ok");
  r.add("a.check", {}, std::nan(""), 1.0, "bad, \"quoted\"");
  r.metadata()["seed"] = "1";
  const auto doc = nlohmann::json::parse(report_json(r));
  ASSERT_EQ(doc["entries"].size(), 2u);
  EXPECT_EQ(doc["entries"][0]["check_id"], "a.check");
  EXPECT_TRUE(doc["entries"][0]["residual"].is_null());
  EXPECT_EQ(doc["entries"][0]["pass"], false);
  EXPECT_EQ(doc["entries"][1]["params"]["dim"], 64);
  EXPECT_EQ(doc["entries"][1]["params"]["zeta"], "0+0.4i");
  EXPECT_EQ(doc["metadata"]["seed"], "1");
  for (const char* key : {"check_id", "params", "residual", "tolerance", "pass", "notes"}) {
    EXPECT_TRUE(doc["entries"][1].contains(key)) << key;
  }
  const std::string csv = report_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "check_id,params,residual,tolerance,pass,notes");
  EXPECT_NE(csv.find("b.check,dim=64;lambda=1.5;zeta=0+0.4i,9.9999999999999998e-13,"),
            std::string::npos) << csv;
  EXPECT_NE(csv.find("\"bad, \"\"quoted\"\"\""), std::string::npos);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Suites, NamesAndUnknown) {
  for (const char* name : {"algebra", "coherent", "boson", "wavelet", "extension", "all"}) {
    EXPECT_EQ(suite_name(parse_suite(name)), name);
  }
  EXPECT_THROW(parse_suite("everything"), UsageError);
}

TEST(Suites, WorkerCountHonorsEnvironment) {
  setenv("SU11KIT_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  setenv("SU11KIT_THREADS", "0", 1);
  EXPECT_THROW(worker_count(), UsageError);
  setenv("SU11KIT_THREADS", "two", 1);
  EXPECT_THROW(worker_count(), UsageError);
  unsetenv("SU11KIT_THREADS");
  EXPECT_GE(worker_count(), 1u);
}

TEST(Suites, TaskOrderIndependentOfWorkers) {
  SuiteConfig c;
  c.dim = 32;
  c.boundary = 4;
  const auto tasks = suite_tasks(Suite::algebra, c);
  EXPECT_EQ(tasks.size(), 5u);
  const std::string one = report_json(run_tasks(tasks, 1));
  const std::string many = report_json(run_tasks(tasks, 4));
  EXPECT_EQ(one, many);
}

TEST(Suites, FirstErrorInTaskOrder) {
  std::vector<Task> tasks{
      [] { return VerificationReport{}; },
      []() -> VerificationReport { throw DomainError("first"); },
      []() -> VerificationReport { throw ToleranceError("second"); }};
  try {
    run_tasks(tasks, 3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "first");
  }
}

TEST(Suites, CoherentRefusalEntry) {
  SuiteConfig c;
  c.lambda = 0.5;
  const VerificationReport r = run_checks(Suite::coherent, c);
  const ReportEntry* e = r.find("coherent.resolution_of_identity@lambda=0.5");
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->pass);
  EXPECT_EQ(e->notes.rfind("refused: lambda <= 1", 0), 0u);
  EXPECT_TRUE(r.all_pass());
}

TEST(Suites, ExtensionLambdaOneIsConfigError) {
  SuiteConfig c;
  c.lambda = 1.0;
  EXPECT_THROW(suite_tasks(Suite::extension, c), DomainError);
}

TEST(Distributions, HusimiGrid) {
  DensityConfig c;
  const Table t = husimi_table(c);
  EXPECT_EQ(t.rows.size(), 4096u);
  EXPECT_EQ(t.rows[0][4], 1.0);
  // Row for r = 1/2, theta = 0: |<zeta|0>|^2 = (1 - r^2)^lambda.
  const auto& row = t.rows[32 * 64];
  EXPECT_DOUBLE_EQ(row[0], 0.5);
  EXPECT_NEAR(row[4], std::pow(0.75, 1.5), 1e-14);
  c.state = NumberStateSpec{64};
  EXPECT_THROW(husimi_table(c), UsageError);
}

TEST(Distributions, SqueezedGaussianColumns) {
  WavefunctionConfig c;
  c.state = SqueezedSpec{std::cosh(0.5), std::sinh(0.5)};
  const Table t = wavefunction_table(c);
  ASSERT_EQ(t.rows.size(), 2048u);
  const double s = std::exp(1.0);
  const double peak = std::pow(s / M_PI, 0.25);
  for (const auto& row : t.rows) {
    EXPECT_NEAR(row[1], peak * std::exp(-s * row[0] * row[0] / 2.0), 1e-12);
  }
}
