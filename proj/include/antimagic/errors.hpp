#pragma once

#include <stdexcept>
#include <string>

namespace antimagic {

enum class errc {
  self_loop,
  duplicate_edge,
  not_regular,
  degree_too_small,
  not_eulerian,
  invalid_params,
  missing_x0,
  too_few_reals,
  infeasible,
  budget_exhausted,
  too_small,
  budget_exceeded,
  non_unique,
  malformed,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::not_regular: return "NotRegular";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::not_eulerian: return "NotEulerian";
    case errc::invalid_params: return "InvalidParams";
    case errc::missing_x0: return "MissingX0";
    case errc::too_few_reals: return "TooFewReals";
    case errc::infeasible: return "Infeasible";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::too_small: return "TooSmall";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::non_unique: return "NonUnique";
    case errc::malformed: return "Malformed";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace antimagic
