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
// Monte-Carlo decoding-failure-rate estimation.  One code is drawn per
// campaign; for each rank weight t, trials run until a target number of
// failures has been observed (or a trial cap is hit).  Every trial is seeded
// as a pure function of (master seed, t, trial index) and trials are counted
// in index order, so results do not depend on the worker count.

#ifndef LRPC_SIMULATOR_HPP_
#define LRPC_SIMULATOR_HPP_

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lrpc/channel.hpp"
#include "lrpc/code.hpp"
#include "lrpc/decoder.hpp"
#include "lrpc/random.hpp"

namespace lrpc {

struct SimConfig {
  CodeParams params;
  std::vector<std::size_t> t_values;
  std::size_t stop_failures = 100;
  std::size_t max_trials = 1000000;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
};

struct SimRecord {
  std::size_t t = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double fer = 0.0;
  std::size_t e_product = 0;       // kSyndromeSpaceDeficient
  std::size_t e_intersection = 0;  // kSupportTooLarge
  std::size_t e_solve = 0;         // kSystemUnsolvable
  std::size_t e_verify = 0;        // kVerificationMismatch
  double wall_seconds = 0.0;
};

struct TrialOutcome {
  bool failed = false;
  FailureReason reason = FailureReason::kVerificationMismatch;
};

inline std::uint64_t trial_seed(std::uint64_t master, std::size_t t,
                                std::size_t index) {
  return derive_seed(master, t, index);
}

inline std::uint64_t keygen_seed(std::uint64_t master) {
  return derive_seed(master, 0x6b657967656e5f31ULL, 0);
}

// One transmission: random message, rank-t error, decode, compare against the
// ground truth.  A decode that reports success but returns the wrong codeword
// is a miscorrection and counts as kVerificationMismatch; the decoder cannot
// see this case because the returned word is a genuine codeword.
inline TrialOutcome run_trial(const LrpcCode& code, const Decoder& decoder,
                              std::size_t t, std::uint64_t seed) {
  const CodeParams& p = code.params();
  const Field& field = code.field();
  std::mt19937_64 rng(seed);
  std::vector<FieldElement> msg(p.u * p.k, field.zero());
  for (auto& e : msg) e = field.random(rng);
  const std::vector<FieldElement> cw = code.encode(msg);
  const RankError err = sample_error(field, p, t, rng);
  const std::vector<FieldElement> y = apply_error(field, cw, err.value);
  const DecodeOutcome out = decoder.decode(y);
  if (!out.ok) return {true, out.reason};
  if (out.codeword != cw || out.error != err.value) {
    return {true, FailureReason::kVerificationMismatch};
  }
  return {false, out.reason};
}

inline LrpcCode campaign_keygen(const SimConfig& cfg) {
  std::mt19937_64 rng(keygen_seed(cfg.master_seed));
  return LrpcCode::keygen(cfg.params, rng);
}

inline std::vector<SimRecord> run_campaign(const SimConfig& cfg,
                                           const LrpcCode& code) {
  if (cfg.stop_failures == 0) throw std::invalid_argument("stop_failures must be positive");
  if (cfg.max_trials == 0) throw std::invalid_argument("max_trials must be positive");
  const Decoder decoder(code);
  const std::size_t workers = std::max<std::size_t>(1, cfg.workers);
  const std::size_t batch_size = std::max<std::size_t>(256, 64 * workers);
  std::vector<SimRecord> records;
  records.reserve(cfg.t_values.size());
  for (const std::size_t t : cfg.t_values) {
    const auto start = std::chrono::steady_clock::now();
    SimRecord rec;
    rec.t = t;
    std::size_t next_index = 0;
    bool done = false;
    std::vector<TrialOutcome> results(batch_size);
    while (!done && next_index < cfg.max_trials) {
      const std::size_t batch = std::min(batch_size, cfg.max_trials - next_index);
      if (workers == 1) {
        for (std::size_t i = 0; i < batch; ++i) {
          results[i] = run_trial(code, decoder, t,
                                 trial_seed(cfg.master_seed, t, next_index + i));
        }
      } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        const std::size_t chunk = (batch + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
          const std::size_t lo = std::min(batch, w * chunk);
          const std::size_t hi = std::min(batch, lo + chunk);
          if (lo >= hi) break;
          pool.emplace_back([&, lo, hi, w] {
            try {
              for (std::size_t i = lo; i < hi; ++i) {
                results[i] = run_trial(
                    code, decoder, t,
                    trial_seed(cfg.master_seed, t, next_index + i));
              }
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors) {
          if (e) std::rethrow_exception(e);
        }
      }
      // Count in index order; trials past the one reaching the failure target
      // are discarded, which keeps results independent of the worker split.
      for (std::size_t i = 0; i < batch; ++i) {
        ++rec.trials;
        const TrialOutcome& o = results[i];
        if (o.failed) {
          ++rec.failures;
          switch (o.reason) {
            case FailureReason::kSyndromeSpaceDeficient: ++rec.e_product; break;
            case FailureReason::kSupportTooLarge: ++rec.e_intersection; break;
            case FailureReason::kSystemUnsolvable: ++rec.e_solve; break;
            case FailureReason::kVerificationMismatch: ++rec.e_verify; break;
          }
          if (rec.failures >= cfg.stop_failures) {
            done = true;
            break;
          }
        }
      }
      next_index += batch;
    }
    rec.fer = rec.trials == 0
                  ? 0.0
                  : static_cast<double>(rec.failures) / static_cast<double>(rec.trials);
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    records.push_back(rec);
  }
  return records;
}

inline std::vector<SimRecord> run_campaign(const SimConfig& cfg) {
  const LrpcCode code = campaign_keygen(cfg);
  return run_campaign(cfg, code);
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline void write_csv(const std::vector<SimRecord>& records, std::ostream& out) {
  out << "t,trials,failures,fer,e_product,e_intersection,e_solve,e_verify\n";
  for (const SimRecord& r : records) {
    out << r.t << ',' << r.trials << ',' << r.failures << ','
        << format_double(r.fer) << ',' << r.e_product << ',' << r.e_intersection
        << ',' << r.e_solve << ',' << r.e_verify << '\n';
  }
}

inline void write_csv(const std::vector<SimRecord>& records,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(records, out);
}

}  // namespace lrpc

#endif  // LRPC_SIMULATOR_HPP_
