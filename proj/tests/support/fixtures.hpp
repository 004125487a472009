#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pnsup/net.hpp"

namespace pnsup::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(PNSUP_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline NetDocument fixture(const std::string& name) { return load_net(fixture_path(name + ".net")); }

/// Marking from a support word over the net's places.
inline Marking M(const PetriNet& net, std::string_view word) {
  return parse_support_word(word, net.place_names());
}

}  // namespace pnsup::testing
