#include "cli_common.hpp"

#include <sstream>

#include "maxdeg/errors.hpp"

#ifndef MAXDEG_VERSION
#define MAXDEG_VERSION "unknown"
#endif

namespace cli {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<maxdeg::Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file " + path);
  std::vector<maxdeg::Graph> graphs = maxdeg::read_graphs(in);
  if (graphs.empty()) throw maxdeg::ParseError("graph file " + path + " holds no graph", 1);
  return graphs;
}

void write_metadata(std::ostream& out, std::optional<std::uint64_t> seed) {
  out << "# seed=" << (seed ? std::to_string(*seed) : std::string("none"))
      << " version=" << MAXDEG_VERSION << '\n';
}

maxdeg::SamplerSpec SamplingFlags::spec(int n, int R, std::uint64_t seed) const {
  maxdeg::SamplerSpec s;
  s.n = n;
  s.R = R;
  s.seed = seed;
  s.max_restarts = max_restarts;
  if (cap_low || floor_high || cap_high) {
    maxdeg::TruncationCaps caps = maxdeg::TruncationCaps::defaults(n, R);
    if (cap_low) caps.cap_low = *cap_low;
    if (floor_high) caps.floor_high = *floor_high;
    if (cap_high) caps.cap_high = *cap_high;
    s.caps = caps;
  }
  if (mode == "exact") {
    s.mode = maxdeg::SamplerMode::exact;
  } else if (mode == "truncated") {
    s.mode = maxdeg::SamplerMode::truncated;
  } else if (mode == "auto") {
    s.mode = maxdeg::SamplerMode::exact;
    try {
      s.validate();
    } catch (const maxdeg::BudgetExceeded&) {
      s.mode = maxdeg::SamplerMode::truncated;
    } catch (const maxdeg::ContractViolation&) {
    }
  } else {
    throw UsageError("unknown sampling mode " + mode);
  }
  return s;
}

maxdeg::GraphSampler make_sampler(const maxdeg::SamplerSpec& spec) {
  try {
    return maxdeg::GraphSampler(spec);
  } catch (const maxdeg::BudgetExceeded& e) {
    throw ScheduleError(e.what());
  } catch (const maxdeg::ContractViolation& e) {
    throw ScheduleError(e.what());
  }
}

}  // namespace cli
