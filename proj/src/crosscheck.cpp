#include "goodpair/crosscheck.hpp"

#include <chrono>
#include <cstdio>

namespace goodpair {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::string quoted(const std::string& s) {
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') r += '\\';
    r += ch;
  }
  return r + "\"";
}

}  // namespace

std::string format_record(const CrossRecord& r, bool timings) {
  std::string s = "tag=" + r.tag + " seed=" + std::to_string(r.seed) + " n=" + std::to_string(r.order) +
                  " u=" + std::to_string(r.u) + " v=" + std::to_string(r.v) +
                  " engine=" + (r.engine_yes ? "YES" : "NO") + " reason=" + quoted(r.engine_reason) +
                  " oracle=" + (r.oracle_yes ? "YES" : "NO") + " verified=" + (r.pair_verified ? "1" : "0") +
                  " match=" + (r.ok() ? "1" : "0");
  if (!r.error.empty()) s += " error=" + quoted(r.error);
  if (timings) {
    char ms[64];
    std::snprintf(ms, sizeof ms, " engine_ms=%.3f oracle_ms=%.3f", r.engine_ms, r.oracle_ms);
    s += ms;
  }
  return s;
}

CrossRecord crosscheck_one(const Instance& in, Vertex u, Vertex v, InputClass cls, const OracleLimits& limits) {
  CrossRecord r;
  r.tag = in.tag;
  r.seed = in.seed;
  r.order = in.composition.order();
  r.u = u;
  r.v = v;
  const Digraph q = in.composition.flatten();
  try {
    auto t0 = std::chrono::steady_clock::now();
    OracleResult o = oracle_good_pair(q, u, v, limits);
    r.oracle_ms = elapsed_ms(t0);
    r.oracle_yes = o.has_pair;
    if (o.has_pair && !verify_good_pair(q, *o.pair, u, v).ok) r.error = "oracle pair rejected by the verifier";
  } catch (const std::exception& e) {
    r.error = std::string("oracle: ") + e.what();
    return r;
  }
  try {
    auto t0 = std::chrono::steady_clock::now();
    Decision d = decide(in.composition, u, v, cls);
    r.engine_ms = elapsed_ms(t0);
    r.engine_yes = d.yes;
    r.engine_reason = d.reason;
    if (d.yes) r.pair_verified = d.pair && verify_good_pair(q, *d.pair, u, v).ok;
  } catch (const std::exception& e) {
    r.error = std::string("engine: ") + e.what();
  }
  return r;
}

CrossReport crosscheck(const std::vector<Instance>& instances, InputClass cls, const OracleLimits& limits,
                       const std::function<void(const CrossRecord&)>& sink) {
  CrossReport rep;
  for (const Instance& in : instances) {
    ++rep.instances;
    const int n = in.composition.order();
    std::vector<std::pair<Vertex, Vertex>> roots;
    if (in.u && in.v) {
      roots.push_back({*in.u, *in.v});
    } else {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) roots.push_back({u, v});
    }
    for (auto [u, v] : roots) {
      CrossRecord r = crosscheck_one(in, u, v, cls, limits);
      ++rep.checked;
      if (r.engine_yes && r.ok()) ++rep.yes;
      if (!r.ok()) {
        ++rep.mismatches;
        rep.failures.push_back(r);
      }
      if (sink) sink(r);
    }
  }
  return rep;
}

}  // namespace goodpair
