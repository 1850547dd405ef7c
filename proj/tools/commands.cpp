// Copyright 2026 The rayclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rayclass/abelian.hpp"
#include "rayclass/arith.hpp"
#include "rayclass/bounds.hpp"
#include "rayclass/error.hpp"
#include "rayclass/quadforms.hpp"
#include "rayclass/sieve.hpp"
#include "rayclass/zmstar.hpp"

#ifndef RAYCLASS_VERSION
#define RAYCLASS_VERSION "0.0.0"
#endif

namespace rayclass::cli {
namespace {

using C = ColumnType;

std::string join(const auto& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ';';
    out += std::to_string(v);
  }
  return out;
}

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string utc_timestamp(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string resolve_timestamp(const RunConfig& config) {
  if (!config.timestamp.empty()) {
    return config.timestamp;
  }
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    return utc_timestamp(static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10)));
  }
  return utc_timestamp(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now()));
}

Report new_report(const RunConfig& config, std::string command) {
  Report r;
  r.version = RAYCLASS_VERSION;
  r.timestamp = resolve_timestamp(config);
  r.config["command"] = std::move(command);
  return r;
}

std::string status_of(bool pass) {
  return std::string(pass ? kStatusPass : kStatusFail);
}

// Prints roughly ten progress lines over a run of total items.
class Progress {
 public:
  Progress(std::ostream& err, std::string label, bool quiet)
      : err_(err), label_(std::move(label)), quiet_(quiet) {}

  void update(std::uint64_t done, std::uint64_t total) {
    if (quiet_ || total == 0) return;
    const std::uint64_t decile = done * 10 / total;
    if (decile > last_decile_ || done == total) {
      last_decile_ = decile;
      err_ << label_ << ": " << done << "/" << total << '\n' << std::flush;
    }
  }

 private:
  std::ostream& err_;
  std::string label_;
  bool quiet_;
  std::uint64_t last_decile_ = 0;
};

void write_output(const std::string& text, const RunConfig& config, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text << std::flush;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw ResourceError("cannot open " + config.out_path + " for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw ResourceError("failed writing " + config.out_path);
  }
}

std::string serialize(const Report& report, const RunConfig& config) {
  return config.format == "json" ? to_json(report) : to_csv(report);
}

// Name/value pairs printed by the bound commands.
using Quantities = std::vector<std::pair<std::string, double>>;

void emit_quantities(const std::string& command, const nlohmann::ordered_json& inputs,
                     const Quantities& q, const RunConfig& config, std::ostream& out) {
  std::string text;
  if (config.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    auto& values = j["values"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : q) values[name] = value;
    text = j.dump(2) + "\n";
  } else {
    text = "quantity,value\n";
    for (const auto& [name, value] : q) text += name + "," + format_real(value) + "\n";
  }
  write_output(text, config, out);
}

}  // namespace

Report constants_report(const RunConfig& config) {
  Report r = new_report(config, "constants check");
  r.columns = {{"status", C::kString},  {"name", C::kString},      {"relation", C::kString},
               {"computed", C::kReal},  {"published", C::kReal},   {"slack", C::kReal}};
  std::vector<bounds::Certification> certs = bounds::evaluate_main_constants().certificates;
  for (auto& c : bounds::remark_certificates()) certs.push_back(std::move(c));
  for (const auto& c : certs) {
    r.add_row({status_of(c.pass), c.name, std::string(bounds::relation_symbol(c.relation)),
               static_cast<double>(c.computed), c.published, static_cast<double>(c.slack)});
  }
  r.tally();
  return r;
}

Report verify_zm_report(const ZmArgs& args, const RunConfig& config, std::ostream& progress) {
  Report r = new_report(config, "verify zm");
  r.config["min_m"] = args.min_m;
  r.config["max_m"] = args.max_m;
  r.config["sieve_limit"] = config.sieve_limit;
  r.config["subgroup_cap"] = config.subgroup_cap;
  r.columns = {{"status", C::kString},
               {"modulus", C::kInteger},
               {"subgroup_index", C::kInteger},
               {"subgroup_order", C::kInteger},
               {"subgroup_generators", C::kString},
               {"generating_primes", C::kString},
               {"largest_needed_prime", C::kInteger},
               {"bound", C::kReal},
               {"pass", C::kBoolean},
               {"refined_bound", C::kReal},
               {"refined_pass", C::kBoolean},
               {"primes_examined", C::kInteger},
               {"reason", C::kString}};
  const std::uint64_t lo = std::max<std::uint64_t>(args.min_m, 2);
  if (args.max_m >= lo) {
    const specfun::PrimeSieve sieve(config.sieve_limit);
    Progress bar(progress, "verify zm", config.quiet);
    zmstar::ZmScanConfig scan_config;
    scan_config.jobs = config.jobs;
    scan_config.subgroup_cap = config.subgroup_cap;
    scan_config.progress = [&](std::uint64_t, std::uint64_t done, std::uint64_t total) {
      bar.update(done, total);
    };
    for (const auto& v : zmstar::scan(lo, args.max_m, sieve, scan_config)) {
      std::string status;
      if (v.skipped) {
        status = kStatusSkipped;
      } else if (v.incomplete) {
        status = kStatusIncomplete;
      } else {
        status = status_of(v.pass && v.refined_pass);
      }
      r.add_row({status, i64(v.modulus), i64(v.subgroup_index), i64(v.subgroup_order),
                 join(v.subgroup_generators), join(v.generating_primes),
                 i64(v.largest_needed_prime), v.bound, v.pass, v.refined_bound, v.refined_pass,
                 i64(v.primes_examined), v.reason});
    }
  }
  r.tally();
  return r;
}

Report verify_quad_report(const QuadArgs& args, const RunConfig& config, std::ostream& progress) {
  if (args.conductor < 1) {
    throw DomainError("--conductor must be >= 1");
  }
  Report r = new_report(config, "verify quad");
  r.config["min_absdisc"] = args.min_absdisc;
  r.config["max_absdisc"] = args.max_absdisc;
  r.config["conductor"] = args.conductor;
  r.columns = {{"status", C::kString},
               {"fundamental_discriminant", C::kInteger},
               {"conductor", C::kInteger},
               {"discriminant", C::kInteger},
               {"conductor_norm", C::kInteger},
               {"class_number", C::kInteger},
               {"invariant_factors", C::kString},
               {"bound", C::kReal},
               {"generating_primes", C::kString},
               {"threshold_prime", C::kInteger},
               {"primes_below_bound", C::kInteger},
               {"exceptional", C::kBoolean},
               {"note", C::kString}};
  Progress bar(progress, "verify quad", config.quiet);
  quadforms::QuadScanConfig scan_config;
  scan_config.jobs = config.jobs;
  scan_config.progress = [&](std::uint64_t done, std::uint64_t total) { bar.update(done, total); };
  for (const auto& v : quadforms::scan_discriminants(args.min_absdisc, args.max_absdisc,
                                                     args.conductor, args.conductor,
                                                     scan_config)) {
    r.add_row({status_of(v.pass), v.fundamental_discriminant, v.conductor, v.discriminant,
               i64(v.conductor_norm), i64(v.class_number), join(v.invariant_factors), v.bound,
               join(v.generating_primes), i64(v.threshold_prime), i64(v.primes_below_bound),
               v.exceptional, v.note});
  }
  r.tally();
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit prime bounds for generators of ray class groups: bound calculators, "
               "constant certification and exhaustive verification."};
  app.name("rayclass");
  app.set_version_flag("--version", RAYCLASS_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.jobs = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", config.out_path, "Write data to this file instead of stdout");
  app.add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::Range(1U, 1024U))
      ->capture_default_str();
  app.add_option("--sieve-limit", config.sieve_limit, "Largest prime considered by verify zm")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{4'294'967'295}))
      ->capture_default_str();
  app.add_option("--subgroup-cap", config.subgroup_cap, "Maximum subgroups enumerated per group")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--timestamp", config.timestamp,
                 "Report timestamp (default: SOURCE_DATE_EPOCH, else now)");
  app.add_flag("-q,--quiet", config.quiet, "No progress on stderr");

  bool verbose = false;
  auto* bound = app.add_subcommand("bound", "Evaluate a bound formula");
  bound->require_subcommand(1);
  bound->fallthrough();
  bound->add_flag("-v,--verbose", verbose, "Also print intermediate quantities");

  bounds::BoundInput ray;
  auto* bound_ray = bound->add_subcommand("ray", "(index (2.71 log(delta N) + 1.29 minf + 1.38 omega) + 4.13)^2");
  bound_ray->add_option("--delta", ray.delta, "Absolute discriminant")->required();
  bound_ray->add_option("--norm-m0", ray.norm_m0, "Norm of the finite modulus")->required();
  bound_ray->add_option("--minf", ray.m_infty, "Real places in the modulus")->capture_default_str();
  bound_ray->add_option("--omega", ray.omega, "Primes dividing the finite modulus")
      ->capture_default_str();
  bound_ray->add_option("--index", ray.index, "Subgroup index")->capture_default_str();

  std::uint64_t zm_m = 0;
  std::uint64_t zm_index = 1;
  auto* bound_zm = bound->add_subcommand("zm", "16 (index log m)^2");
  bound_zm->add_option("--m", zm_m, "Modulus")->required();
  bound_zm->add_option("--index", zm_index, "Subgroup index")->capture_default_str();

  std::uint64_t iso_delta = 0;
  std::uint64_t iso_norm = 1;
  std::uint64_t iso_hplus = 1;
  auto* bound_iso = bound->add_subcommand("isogeny", "26 (hplus log(delta N(f)))^2");
  bound_iso->add_option("--delta", iso_delta, "Absolute discriminant")->required();
  bound_iso->add_option("--conductor-norm", iso_norm, "Norm of the conductor")
      ->capture_default_str();
  bound_iso->add_option("--hplus", iso_hplus, "Narrow class number of the real subfield order")
      ->capture_default_str();

  std::uint64_t cyc_hk0 = 1;
  double cyc_log_delta = 0;
  std::uint64_t cyc_delta = 0;
  auto* bound_cyc = bound->add_subcommand("cyclotomic", "(2.71 hK0 log(delta) + 4.13)^2");
  bound_cyc->add_option("--hk0", cyc_hk0, "Class number of the maximal real subfield")
      ->capture_default_str();
  auto* log_opt = bound_cyc->add_option("--log-delta", cyc_log_delta, "log of the discriminant");
  auto* delta_opt = bound_cyc->add_option("--delta", cyc_delta, "Absolute discriminant");
  log_opt->excludes(delta_opt);

  auto* constants = app.add_subcommand("constants", "Constant certification");
  constants->require_subcommand(1);
  auto* constants_check = constants->add_subcommand("check", "Certify every published constant");

  auto* verify = app.add_subcommand("verify", "Exhaustive verification");
  verify->require_subcommand(1);
  verify->fallthrough();
  ZmArgs zm_args;
  auto* verify_zm = verify->add_subcommand("zm", "Every non-trivial subgroup of (Z/mZ)^x");
  verify_zm->add_option("--min-m", zm_args.min_m, "Smallest modulus")->capture_default_str();
  verify_zm->add_option("--max-m", zm_args.max_m, "Largest modulus")->required();
  QuadArgs quad_args;
  auto* verify_quad = verify->add_subcommand("quad", "Imaginary quadratic orders");
  verify_quad->add_option("--min-absdisc", quad_args.min_absdisc, "Smallest |D_K|")
      ->capture_default_str();
  verify_quad->add_option("--max-absdisc", quad_args.max_absdisc, "Largest |D_K|")->required();
  verify_quad->add_option("--conductor", quad_args.conductor, "Conductor f of the order")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (bound_ray->parsed()) {
      const double b = bounds::main_bound(ray);
      Quantities q{{"bound", b}};
      if (verbose) {
        const double l = std::log(static_cast<double>(ray.delta)) +
                         std::log(static_cast<double>(ray.norm_m0));
        q.emplace_back("log_delta_norm", l);
        q.emplace_back("log_term", bounds::constants::kLogCoefficient * l);
        q.emplace_back("infinity_term",
                       bounds::constants::kInfinityCoefficient * static_cast<double>(ray.m_infty));
        q.emplace_back("omega_term",
                       bounds::constants::kOmegaCoefficient * static_cast<double>(ray.omega));
        q.emplace_back("sqrt_bound", std::sqrt(b));
        if (std::exp(l) >= bounds::constants::kTrivialRayThreshold) {
          const double dn = std::exp(l);
          const auto est = bounds::remark_estimates(dn);
          q.emplace_back("minf_upper", est.minf_upper);
          q.emplace_back("omega_upper", est.omega_upper);
          q.emplace_back("bound_at_upper_estimates",
                         bounds::main_bound_from_log(ray.index, l, est.minf_upper, est.omega_upper));
          q.emplace_back("simplified_bound", bounds::simplified_bound(dn));
          q.emplace_back("bach_bound", bounds::bach_bound(dn));
        }
      }
      emit_quantities("bound ray",
                      {{"delta", ray.delta}, {"norm_m0", ray.norm_m0}, {"minf", ray.m_infty},
                       {"omega", ray.omega}, {"index", ray.index}},
                      q, config, out);
      return kExitSuccess;
    }
    if (bound_zm->parsed()) {
      const double b = bounds::zm_bound(zm_m, zm_index);
      Quantities q{{"bound", b}};
      if (verbose) {
        q.emplace_back("log_m", std::log(static_cast<double>(zm_m)));
        q.emplace_back("omega_m", arith::omega(zm_m));
        q.emplace_back("refined_bound",
                       bounds::main_bound({1, zm_m, 1, arith::omega(zm_m), zm_index}));
      }
      emit_quantities("bound zm", {{"m", zm_m}, {"index", zm_index}}, q, config, out);
      return kExitSuccess;
    }
    if (bound_iso->parsed()) {
      const double b = bounds::isogeny_bound(iso_delta, iso_norm, iso_hplus);
      Quantities q{{"bound", b}};
      if (verbose) {
        const double l = std::log(static_cast<double>(iso_delta)) +
                         std::log(static_cast<double>(iso_norm));
        q.emplace_back("log_delta_norm", l);
        q.emplace_back("sqrt_bound", std::sqrt(b));
      }
      emit_quantities("bound isogeny",
                      {{"delta", iso_delta}, {"conductor_norm", iso_norm}, {"hplus", iso_hplus}},
                      q, config, out);
      return kExitSuccess;
    }
    if (bound_cyc->parsed()) {
      if (!*delta_opt && !*log_opt) throw DomainError("one of --log-delta, --delta is required");
      if (*delta_opt) {
        if (cyc_delta < 2) throw DomainError("--delta must be >= 2");
        cyc_log_delta = std::log(static_cast<double>(cyc_delta));
      }
      const double b = bounds::cyclotomic_relative_bound(cyc_hk0, cyc_log_delta);
      Quantities q{{"bound", b}};
      if (verbose) {
        q.emplace_back("log_delta", cyc_log_delta);
        q.emplace_back("sqrt_bound", std::sqrt(b));
      }
      emit_quantities("bound cyclotomic", {{"hk0", cyc_hk0}, {"log_delta", cyc_log_delta}}, q,
                      config, out);
      return kExitSuccess;
    }

    Report report;
    if (constants_check->parsed()) {
      report = constants_report(config);
    } else if (verify_zm->parsed()) {
      report = verify_zm_report(zm_args, config, err);
    } else if (verify_quad->parsed()) {
      report = verify_quad_report(quad_args, config, err);
    }
    write_output(serialize(report, config), config, out);
    if (!config.quiet) {
      err << report.config["command"].get<std::string>() << ": " << report.summary.pass
          << " pass, " << report.summary.fail << " fail, " << report.summary.skip << " skip\n";
    }
    return report.summary.fail == 0 ? kExitSuccess : kExitVerificationFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParentMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResource;
  }
}

}  // namespace rayclass::cli
