#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "latmod/latmod.hpp"

namespace support {

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string sample_path(std::string const& name) {
  return std::string(LATMOD_SAMPLES_DIR) + "/" + name + ".latspec";
}

inline latmod::LoadedInstance load_sample(std::string const& name) {
  return latmod::load_instance(latmod::parse_latspec(read_file(sample_path(name))), name);
}

/// Valid sample documents.
inline std::vector<std::string> const& sample_names() {
  static std::vector<std::string> const names{"chain_module", "unfaithful", "z12", "z4"};
  return names;
}

/// A spread of small instances: Z_n, frames and the module samples.
inline std::vector<latmod::InstanceBundle> const& small_instances() {
  static std::vector<latmod::InstanceBundle> const all = [] {
    using namespace latmod;
    std::vector<InstanceBundle> v;
    for (unsigned n = 2; n <= 36; ++n) v.push_back(gen_zn(n));
    for (unsigned k = 1; k <= 5; ++k) v.push_back(gen_frame({FrameShape::Kind::chain, k}));
    for (unsigned k = 1; k <= 3; ++k) v.push_back(gen_frame({FrameShape::Kind::boolean, k}));
    for (auto const& s : sample_names()) v.push_back(load_sample(s).bundle);
    return v;
  }();
  return all;
}

}  // namespace support
