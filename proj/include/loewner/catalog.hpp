#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "loewner/scalar_function.hpp"

namespace loewner {

/// Built-in function by name.  Parameters come as JSON, e.g. {"p": 0.5} for
/// "power" or {"lambda": 0.3} for "extreme".  All catalog functions carry
/// analytic derivatives and, where the principal branch is standard, a
/// complex evaluator.
ScalarFunction catalog_lookup(const std::string& name, const nlohmann::json& params = {});

/// Full function-spec grammar:
///   {"fn": <name>, ...params}
///   {"compose": [F1, F2, ...]}            -- F1(F2(...(t)))
///   {"affine": {"a": a, "b": b}, "of": F} -- a*F + b
ScalarFunction function_from_spec(const nlohmann::json& spec);

/// (name, synopsis) pairs for every builtin.
std::vector<std::pair<std::string, std::string>> catalog_entries();

}  // namespace loewner
