// hdcrit command-line front end.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "hdcrit/chambers.hpp"
#include "hdcrit/lift.hpp"
#include "hdcrit/report_json.hpp"
#include "hdcrit/verify.hpp"

using namespace hdcrit;

namespace {

struct RunConfig {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotSquare:
      return 2;
    case ErrorCode::NonGenericData:
    case ErrorCode::DegenerateSpectrum:
    case ErrorCode::DegenerateY:
    case ErrorCode::OnDiscriminant:
    case ErrorCode::RankTooSmall:
      return 3;
    case ErrorCode::VerificationFailure:
      return 5;
    default:
      return 4;
  }
}

// Inline JSON if it starts with '{', otherwise a file name.
json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + cfg.out + "'");
  f << text;
}

std::pair<double, double> parse_range(const std::string& s) {
  const RVec v = parse_vector(s);
  if (v.size() != 2) throw Error(ErrorCode::ParseError, "range needs two numbers: '" + s + "'");
  return {v(0), v(1)};
}

Tolerances tolerances(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
  Tolerances t = default_tolerances();
  t.criticality = cfg.tol;
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian distance critical points of unitary-invariant matrix varieties"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "criticality tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0 = auto)")->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default stdout)");

  std::string matrix_path, family_arg, y_arg, x_range = "-5,5", y_range = "-5,5", suite = "all";
  int k = 1, r = 1, trials = 100;
  double step = 0.25;

  auto* svd_cmd = app.add_subcommand("svd", "SVD of a matrix JSON file");
  svd_cmd->add_option("matrix", matrix_path)->required();

  auto* crit_cmd = app.add_subcommand("critical", "ED critical points on a slice");
  crit_cmd->add_option("--family", family_arg, "family JSON (inline or file)")->required();
  crit_cmd->add_option("--y", y_arg, "data vector, comma separated")->required();

  auto* lift_cmd = app.add_subcommand("lift", "HD critical points of a matrix");
  lift_cmd->add_option("--family", family_arg, "family JSON (inline or file)")->required();
  lift_cmd->add_option("matrix", matrix_path)->required();

  auto* ey_cmd = app.add_subcommand("eckart-young", "all critical points on the rank <= k variety");
  ey_cmd->add_option("matrix", matrix_path)->required();
  ey_cmd->add_option("-k", k)->required();

  auto* hp_cmd = app.add_subcommand("hdpoly", "distance polynomial of the rank <= r variety");
  hp_cmd->add_option("matrix", matrix_path)->required();
  hp_cmd->add_option("-r", r)->required();

  auto* scan_cmd = app.add_subcommand("chamber-scan", "grid scan, CSV output");
  scan_cmd->add_option("--family", family_arg, "family JSON (inline or file)")->required();
  scan_cmd->add_option("--x-range", x_range)->capture_default_str();
  scan_cmd->add_option("--y-range", y_range)->capture_default_str();
  scan_cmd->add_option("--step", step)->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites, JSON summary");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "rd", "complex", "skew", "splitting", "oracle"}))
      ->capture_default_str();
  verify_cmd->add_option("--trials", trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Tolerances tol = tolerances(cfg);
    if (*svd_cmd) {
      const CMat A = read_matrix_file(matrix_path);
      const SvdFactors f = svd(A);
      emit(cfg, svd_to_json(f, check_svd(f, A)).dump(2) + "\n");
    } else if (*crit_cmd) {
      const SliceFamily fam = family_from_json(read_json_arg(family_arg));
      const RVec y = parse_vector(y_arg);
      const EdCriticalSet set = ed_critical(fam, y, tol);
      json j = ed_set_to_json(set, genericity_check(fam, y, tol.genericity_eps));
      j["family"] = family_to_json(fam);
      j["y"] = vector_to_json(y);
      emit(cfg, j.dump(2) + "\n");
    } else if (*lift_cmd) {
      const SliceFamily fam = family_from_json(read_json_arg(family_arg));
      const CMat Y = read_matrix_file(matrix_path);
      json pts = json::array();
      for (const auto& p : lift_critical(Y, fam, tol)) pts.push_back(hd_point_to_json(p));
      emit(cfg, json{{"count", pts.size()}, {"points", pts}}.dump(2) + "\n");
    } else if (*ey_cmd) {
      const CMat Y = read_matrix_file(matrix_path);
      json pts = json::array();
      for (const auto& p : eckart_young(Y, k, tol)) pts.push_back(hd_point_to_json(p));
      emit(cfg, json{{"count", pts.size()}, {"points", pts}}.dump(2) + "\n");
    } else if (*hp_cmd) {
      emit(cfg, hd_poly_to_json(hd_poly(read_matrix_file(matrix_path), r)).dump(2) + "\n");
    } else if (*scan_cmd) {
      const SliceFamily fam = family_from_json(read_json_arg(family_arg));
      const auto [x0, x1] = parse_range(x_range);
      const auto [y0, y1] = parse_range(y_range);
      const auto reports = chamber_scan(fam, Grid{x0, x1, y0, y1, step}, cfg.threads, tol);
      std::ostringstream csv;
      write_chamber_csv(csv, reports);
      emit(cfg, csv.str());
      for (const auto& rep : reports)
        if (rep.predicted && !rep.skipped() && !rep.agree) return 5;
    } else if (*verify_cmd) {
      std::vector<std::function<SuiteReport()>> jobs;
      const std::uint64_t s = cfg.seed;
      if (suite == "all" || suite == "rd") jobs.push_back([=] { return lemma_rd_suite(s, trials); });
      if (suite == "all" || suite == "complex") jobs.push_back([=] { return lemma_complex_suite(s, trials); });
      if (suite == "all" || suite == "skew") jobs.push_back([=] { return skew_hermitian_suite(s, trials); });
      if (suite == "all" || suite == "splitting") jobs.push_back([=] { return splitting_suite(s, trials); });
      if (suite == "all" || suite == "oracle")
        jobs.push_back([=] { return oracle_suite(s, std::min(trials, 20)); });
      std::vector<SuiteReport> results(jobs.size());
      const unsigned workers = cfg.threads > 0 ? unsigned(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
      if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < jobs.size(); ++i) pool.emplace_back([&, i] { results[i] = jobs[i](); });
      }
      json arr = json::array();
      bool all_pass = true;
      for (const auto& rep : results) {
        arr.push_back(suite_to_json(rep));
        all_pass = all_pass && rep.pass();
      }
      emit(cfg, json{{"pass", all_pass}, {"suites", arr}}.dump(2) + "\n");
      if (!all_pass) return 5;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
