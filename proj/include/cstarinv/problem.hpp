#pragma once

#include <map>
#include <string>

#include "cstarinv/submodule.hpp"
#include "nlohmann/json.hpp"

namespace cstarinv {

using Json = nlohmann::ordered_json;

/// Parsed problem document: one algebra, one module rank, named operators and
/// submodules, optional tolerance overrides.
struct ProblemFile {
    AlgebraShape algebra;
    int rank = 1;
    std::map<std::string, Operator> operators;
    std::map<std::string, Submodule> submodules;
    ToleranceConfig tolerances;

    const Operator& get_operator(const std::string& name) const;
    const Submodule& get_submodule(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

Json problem_to_json(const ProblemFile& problem);

// Serialization of individual objects, same schema as the problem format.
Json to_json(const AlgebraElement& a);
Json to_json(const ModuleVector& x);
Json to_json(const Operator& T);
Json to_json(const Submodule& W);

AlgebraElement element_from_json(const Json& j, const AlgebraShape& shape);
ModuleVector vector_from_json(const Json& j, const AlgebraShape& shape, int rank);
Operator operator_from_json(const Json& j, const AlgebraShape& shape, int rank);
Submodule submodule_from_json(const Json& j, const AlgebraShape& shape, int rank,
                              const ToleranceConfig& tol);

}  // namespace cstarinv
