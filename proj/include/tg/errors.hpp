#pragma once

#include <stdexcept>
#include <string>

namespace tg {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct generation_error : std::runtime_error {
  explicit generation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct arithmetic_error : std::runtime_error {
  explicit arithmetic_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tg
