#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goodpair/dispatch.hpp"
#include "goodpair/generators.hpp"
#include "goodpair/oracle.hpp"

namespace goodpair {

struct CrossRecord {
  std::string tag;
  std::uint64_t seed = 0;
  int order = 0;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  bool engine_yes = false;
  std::string engine_reason;
  bool oracle_yes = false;
  bool pair_verified = true;  // engine YES pair accepted by the verifier
  std::string error;          // engine or oracle exception, if any
  double engine_ms = 0;
  double oracle_ms = 0;

  bool ok() const { return error.empty() && engine_yes == oracle_yes && pair_verified; }
};

// One line, space-separated key=value fields. Timings make the line
// nondeterministic and are off by default.
std::string format_record(const CrossRecord& r, bool timings = false);

struct CrossReport {
  long instances = 0;
  long checked = 0;
  long yes = 0;
  long mismatches = 0;
  std::vector<CrossRecord> failures;
};

CrossRecord crosscheck_one(const Instance& in, Vertex u, Vertex v, InputClass cls = InputClass::Auto,
                           const OracleLimits& limits = {});

// Uses the instance roots when present, else every ordered pair. `sink`, when
// set, receives every record as it is produced.
CrossReport crosscheck(const std::vector<Instance>& instances, InputClass cls = InputClass::Auto,
                       const OracleLimits& limits = {}, const std::function<void(const CrossRecord&)>& sink = {});

}  // namespace goodpair
