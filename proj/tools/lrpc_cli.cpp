// Copyright 2026 the lrpc authors.
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
//
// Command-line front end: failure-rate simulation, closed-form bounds, key
// generation and single-shot decoding.
//
// Exit codes: 0 on success, 2 on usage errors, 1 on construction or I/O
// errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrpc/lrpc.hpp"

namespace {

struct ParamFlags {
  std::uint32_t q = 2;
  std::size_t m = 30;
  std::vector<std::uint32_t> modulus;  // low to high; empty -> default
  std::size_t lambda = 2;
  std::size_t n = 32;
  std::size_t k = 16;
  std::size_t u = 1;
};

void add_param_flags(CLI::App* cmd, ParamFlags* p) {
  cmd->add_option("--q", p->q, "field characteristic (prime)")
      ->capture_default_str();
  cmd->add_option("--m", p->m, "extension degree")->capture_default_str();
  cmd->add_option("--modulus", p->modulus,
                  "modulus coefficients, low to high (default: first "
                  "irreducible in counting order)")
      ->delimiter(',');
  cmd->add_option("--lambda", p->lambda, "coefficient subspace dimension")
      ->capture_default_str();
  cmd->add_option("--n", p->n, "component code length")->capture_default_str();
  cmd->add_option("--k", p->k, "component code dimension")
      ->capture_default_str();
  cmd->add_option("--u", p->u, "interleaving order")->capture_default_str();
}

lrpc::CodeParams to_code_params(const ParamFlags& f) {
  lrpc::CodeParams p;
  p.field.q = f.q;
  p.field.m = f.m;
  if (f.modulus.empty()) {
    p.field.modulus = lrpc::default_modulus(f.q, f.m);
  } else {
    p.field.modulus.reserve(f.modulus.size());
    for (auto c : f.modulus) {
      if (c > 255) throw std::invalid_argument("modulus coefficient out of range");
      p.field.modulus.push_back(static_cast<std::uint8_t>(c));
    }
  }
  p.n = f.n;
  p.k = f.k;
  p.lambda = f.lambda;
  p.u = f.u;
  return p;
}

int cmd_simulate(const ParamFlags& flags, std::size_t t_min, std::size_t t_max,
                 std::size_t stop_failures, std::size_t max_trials,
                 std::uint64_t seed, std::size_t workers,
                 const std::string& out_path) {
  lrpc::SimConfig cfg;
  cfg.params = to_code_params(flags);
  for (std::size_t t = t_min; t <= t_max; ++t) cfg.t_values.push_back(t);
  cfg.stop_failures = stop_failures;
  cfg.max_trials = max_trials;
  cfg.master_seed = seed;
  cfg.workers = workers;
  const lrpc::LrpcCode code = lrpc::campaign_keygen(cfg);
  std::cerr << "code ready after " << code.keygen_attempts()
            << " attempt(s); running " << cfg.t_values.size()
            << " rank weight(s)\n";
  std::vector<lrpc::SimRecord> records;
  {
    // Run weights one at a time so progress is visible.
    lrpc::SimConfig one = cfg;
    for (const std::size_t t : cfg.t_values) {
      one.t_values = {t};
      const auto r = lrpc::run_campaign(one, code);
      records.push_back(r.front());
      std::cerr << "t=" << r.front().t << " trials=" << r.front().trials
                << " failures=" << r.front().failures
                << " fer=" << lrpc::format_double(r.front().fer) << " ("
                << lrpc::format_double(r.front().wall_seconds) << "s)\n";
    }
  }
  if (out_path.empty()) {
    lrpc::write_csv(records, std::cout);
  } else {
    lrpc::write_csv(records, out_path);
  }
  return 0;
}

int cmd_bound(const ParamFlags& flags, std::size_t t_min, std::size_t t_max,
              const std::string& out_path) {
  const lrpc::CodeParams params = to_code_params(flags);
  params.validate();
  std::ostringstream body;
  body << "t,term_product,term_intersection,term_syndrome,union\n";
  for (std::size_t t = t_min; t <= t_max; ++t) {
    const lrpc::BoundReport r = lrpc::union_bound(params, t);
    body << r.t << ',' << lrpc::format_double(r.term_product) << ','
         << lrpc::format_double(r.term_intersection) << ','
         << lrpc::format_double(r.term_syndrome) << ','
         << lrpc::format_double(r.union_bound) << '\n';
  }
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << body.str();
  }
  return 0;
}

int cmd_keygen(const ParamFlags& flags, std::uint64_t seed,
               const std::string& out_path) {
  const lrpc::CodeParams params = to_code_params(flags);
  std::mt19937_64 rng(lrpc::splitmix64(seed));
  const lrpc::LrpcCode code = lrpc::LrpcCode::keygen(params, rng);
  const nlohmann::json j = lrpc::code_to_json(code);
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_decode(const std::string& code_path, const std::string& word_path,
               const std::string& out_path) {
  const lrpc::LrpcCode code = lrpc::load_code(code_path);
  const std::vector<lrpc::FieldElement> y = lrpc::load_word(code.field(), word_path);
  if (y.size() != code.params().u * code.params().n) {
    throw std::invalid_argument("received word must have length u*n");
  }
  const lrpc::Decoder decoder(code);
  const lrpc::DecodeOutcome out = decoder.decode(y);
  nlohmann::json j;
  if (out.ok) {
    j["status"] = "success";
    nlohmann::json cw = nlohmann::json::array(), err = nlohmann::json::array();
    for (const auto& e : out.codeword) cw.push_back(lrpc::element_to_json(code.field(), e));
    for (const auto& e : out.error) err.push_back(lrpc::element_to_json(code.field(), e));
    j["codeword"] = cw;
    j["error"] = err;
    const lrpc::Subspace supp = lrpc::support(
        code.field(), std::span<const lrpc::FieldElement>(out.error));
    j["error_rank"] = supp.dim();
  } else {
    j["status"] = "failure";
    j["reason"] = lrpc::to_string(out.reason);
  }
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << j.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-rank parity-check decoding toolkit"};
  app.require_subcommand(1);

  ParamFlags sim_flags;
  std::size_t sim_t_min = 0, sim_t_max = 0;
  std::size_t stop_failures = 100, max_trials = 1000000;
  std::uint64_t sim_seed = 0;
  std::size_t workers = 1;
  std::string sim_out;
  CLI::App* sim = app.add_subcommand("simulate", "estimate failure rates");
  add_param_flags(sim, &sim_flags);
  sim->add_option("--t-min", sim_t_min, "lowest rank weight")->required();
  sim->add_option("--t-max", sim_t_max, "highest rank weight")->required();
  sim->add_option("--stop-failures", stop_failures,
                  "failures to collect per rank weight")
      ->capture_default_str();
  sim->add_option("--max-trials", max_trials, "trial cap per rank weight")
      ->capture_default_str();
  sim->add_option("--seed", sim_seed, "master seed")->capture_default_str();
  sim->add_option("--workers", workers, "worker threads")->capture_default_str();
  sim->add_option("--out", sim_out, "output CSV path (default: stdout)");

  ParamFlags bound_flags;
  std::size_t bound_t_min = 0, bound_t_max = 0;
  std::string bound_out;
  CLI::App* bound = app.add_subcommand("bound", "closed-form failure bounds");
  add_param_flags(bound, &bound_flags);
  bound->add_option("--t-min", bound_t_min, "lowest rank weight")->required();
  bound->add_option("--t-max", bound_t_max, "highest rank weight")->required();
  bound->add_option("--out", bound_out, "output CSV path (default: stdout)");

  ParamFlags keygen_flags;
  std::uint64_t keygen_seed_v = 0;
  std::string keygen_out;
  CLI::App* keygen = app.add_subcommand("keygen", "draw a code and save it");
  add_param_flags(keygen, &keygen_flags);
  keygen->add_option("--seed", keygen_seed_v, "seed")->capture_default_str();
  keygen->add_option("--out", keygen_out, "output JSON path (default: stdout)");

  std::string decode_code, decode_word, decode_out;
  CLI::App* decode = app.add_subcommand("decode", "decode one received word");
  decode->add_option("--code", decode_code, "code JSON file")->required();
  decode->add_option("--word", decode_word, "received word JSON file")->required();
  decode->add_option("--out", decode_out, "output JSON path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) {
      if (sim_t_min > sim_t_max) {
        std::cerr << "error: --t-min must not exceed --t-max\n";
        return 2;
      }
      return cmd_simulate(sim_flags, sim_t_min, sim_t_max, stop_failures,
                          max_trials, sim_seed, workers, sim_out);
    }
    if (bound->parsed()) {
      if (bound_t_min > bound_t_max) {
        std::cerr << "error: --t-min must not exceed --t-max\n";
        return 2;
      }
      return cmd_bound(bound_flags, bound_t_min, bound_t_max, bound_out);
    }
    if (keygen->parsed()) {
      return cmd_keygen(keygen_flags, keygen_seed_v, keygen_out);
    }
    if (decode->parsed()) {
      return cmd_decode(decode_code, decode_word, decode_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
