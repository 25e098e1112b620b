#pragma once

#include <fstream>
#include <sstream>
#include <string>

inline std::string data_file(const std::string& name) {
  return std::string(HEXCGT_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
