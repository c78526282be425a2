#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "estimate.hpp"
#include "path.hpp"

namespace jumpsim {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// audit line placed at the top of every output CSV
inline std::string csv_audit_header(const std::string& config_hash,
                                    std::uint64_t seed) {
  return "# config_hash=" + config_hash + " seed=" + std::to_string(seed) +
         "\n";
}

inline void write_path_csv(std::ostream& os, const Path& path) {
  std::size_t d = path.start().dim();
  os << "t";
  for (std::size_t i = 1; i <= d; ++i) os << ",x" << i;
  os << "\n";
  for (const auto& ev : path.events) {
    os << format_double(ev.t);
    for (std::size_t i = 0; i < d; ++i) os << "," << format_double(ev.x[i]);
    os << "\n";
  }
  // closing row at the horizon, unless the last jump already sits there
  if (path.t_final != path.events.back().t) {
    os << format_double(path.t_final);
    for (std::size_t i = 0; i < d; ++i)
      os << "," << format_double(path.final_position()[i]);
    os << "\n";
  }
}

inline std::string estimate_csv_header() {
  return "scenario,estimator,params_hash,mean,std_error,n,ci_lo,ci_hi,"
         "censored_frac,elapsed\n";
}

inline std::string estimate_csv_row(const std::string& scenario,
                                    const std::string& estimator,
                                    const std::string& params_hash,
                                    const EstimateResult& r) {
  std::ostringstream os;
  os << scenario << "," << estimator << "," << params_hash << ","
     << format_double(r.mean) << "," << format_double(r.std_error) << ","
     << r.n << "," << format_double(r.ci_lo) << "," << format_double(r.ci_hi)
     << "," << format_double(r.censored_frac) << ","
     << format_double(r.elapsed) << "\n";
  return os.str();
}

}  // namespace jumpsim
