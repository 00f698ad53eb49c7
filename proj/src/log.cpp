#include "stm/error.hpp"

#include <iostream>

namespace stm {

void log_warn(const std::string& msg) { std::cerr << "[warn] " << msg << "\n"; }
void log_info(const std::string& msg) { std::cerr << "[info] " << msg << "\n"; }

}  // namespace stm
