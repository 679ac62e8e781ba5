#include "cstarinv/problem.hpp"

#include <fstream>
#include <sstream>

namespace cstarinv {

namespace {

Complex complex_from_json(const Json& j, const std::string& path) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw ParseError(path + ": expected a number or a [re, im] pair");
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

CMatrix matrix_from_json(const Json& j, int rows, int cols, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(path + "[" + std::to_string(r) + "]: expected " +
                             std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                        path + "[" + std::to_string(r) + "][" +
                                            std::to_string(c) + "]");
    }
    return m;
}

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

AlgebraElement element_from_json(const Json& j, const AlgebraShape& shape) {
    if (!j.is_array() || static_cast<int>(j.size()) != shape.num_blocks())
        throw ParseError("algebra element: expected " + std::to_string(shape.num_blocks()) +
                         " blocks");
    std::vector<CMatrix> blocks;
    for (int i = 0; i < shape.num_blocks(); ++i)
        blocks.push_back(matrix_from_json(j[static_cast<std::size_t>(i)], shape.dim(i),
                                          shape.dim(i), "block " + std::to_string(i)));
    return AlgebraElement(shape, std::move(blocks));
}

Json to_json(const AlgebraElement& a) {
    Json blocks = Json::array();
    for (int i = 0; i < a.num_blocks(); ++i) blocks.push_back(matrix_to_json(a.block(i)));
    return blocks;
}

ModuleVector vector_from_json(const Json& j, const AlgebraShape& shape, int rank) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw ParseError("module vector: expected " + std::to_string(rank) + " entries");
    std::vector<AlgebraElement> entries;
    for (const Json& e : j) entries.push_back(element_from_json(e, shape));
    return ModuleVector::from_entries(entries);
}

Json to_json(const ModuleVector& x) {
    Json entries = Json::array();
    for (int j = 0; j < x.rank(); ++j) entries.push_back(to_json(x.entry(j)));
    return entries;
}

Operator operator_from_json(const Json& j, const AlgebraShape& shape, int rank) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw ParseError("operator: expected a " + std::to_string(rank) + "-row grid");
    std::vector<std::vector<AlgebraElement>> grid;
    for (int r = 0; r < rank; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw ParseError("operator grid row " + std::to_string(r) + ": expected " +
                             std::to_string(rank) + " entries");
        std::vector<AlgebraElement> grid_row;
        for (const Json& e : row) grid_row.push_back(element_from_json(e, shape));
        grid.push_back(std::move(grid_row));
    }
    return Operator::from_grid(shape, grid);
}

Json to_json(const Operator& T) {
    Json grid = Json::array();
    for (int r = 0; r < T.rank(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < T.rank(); ++c) row.push_back(to_json(T.grid_entry(r, c)));
        grid.push_back(std::move(row));
    }
    return grid;
}

Submodule submodule_from_json(const Json& j, const AlgebraShape& shape, int rank,
                              const ToleranceConfig& tol) {
    if (j.is_object() && j.contains("generators")) {
        std::vector<ModuleVector> gens;
        for (const Json& g : j["generators"]) gens.push_back(vector_from_json(g, shape, rank));
        return submodule_from_generators(gens);
    }
    if (j.is_object() && j.contains("projection")) {
        Submodule W(operator_from_json(j["projection"], shape, rank));
        W.validate(tol);
        return W;
    }
    throw ParseError("submodule: expected an object with 'generators' or 'projection'");
}

Json to_json(const Submodule& W) {
    Json j = Json::object();
    j["projection"] = to_json(W.projection());
    if (W.generators()) {
        Json gens = Json::array();
        for (const auto& g : *W.generators()) gens.push_back(to_json(g));
        j["generators"] = std::move(gens);
    }
    return j;
}

const Operator& ProblemFile::get_operator(const std::string& name) const {
    auto it = operators.find(name);
    if (it == operators.end()) throw UnknownName(name);
    return it->second;
}

const Submodule& ProblemFile::get_submodule(const std::string& name) const {
    auto it = submodules.find(name);
    if (it == submodules.end()) throw UnknownName(name);
    return it->second;
}

ProblemFile parse_problem_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    ProblemFile problem;
    if (!doc.contains("algebra")) throw ParseError("missing 'algebra'");
    std::vector<int> dims;
    for (const Json& d : doc["algebra"]) {
        if (!d.is_number_integer()) throw ParseError("algebra: block dims must be integers");
        dims.push_back(d.get<int>());
    }
    problem.algebra = AlgebraShape(dims);
    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
        throw ParseError("missing integer 'rank'");
    problem.rank = doc["rank"].get<int>();
    if (problem.rank < 1) throw ValidationError("rank must be positive");

    if (doc.contains("tolerances")) {
        const Json& t = doc["tolerances"];
        if (t.contains("atol")) problem.tolerances.atol = t["atol"].get<double>();
        if (t.contains("rtol")) problem.tolerances.rtol = t["rtol"].get<double>();
        if (t.contains("seed")) problem.tolerances.seed = t["seed"].get<std::uint64_t>();
        if (t.contains("search_budget"))
            problem.tolerances.search_budget = t["search_budget"].get<int>();
        if (problem.tolerances.atol < 0 || problem.tolerances.rtol < 0)
            throw ValidationError("tolerances must be non-negative");
        if (problem.tolerances.search_budget < 1)
            throw ValidationError("search_budget must be positive");
    }

    if (doc.contains("operators")) {
        for (const auto& [name, j] : doc["operators"].items()) {
            try {
                problem.operators.emplace(name, operator_from_json(j, problem.algebra, problem.rank));
            } catch (const ParseError& e) {
                throw ParseError("operators." + name + ": " + e.what());
            }
        }
    }
    if (doc.contains("submodules")) {
        for (const auto& [name, j] : doc["submodules"].items()) {
            try {
                problem.submodules.emplace(
                    name, submodule_from_json(j, problem.algebra, problem.rank,
                                              problem.tolerances));
            } catch (const ValidationError& e) {
                throw ValidationError("submodules." + name + ": " + e.what());
            } catch (const ParseError& e) {
                throw ParseError("submodules." + name + ": " + e.what());
            }
        }
    }
    return problem;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

Json problem_to_json(const ProblemFile& problem) {
    Json doc = Json::object();
    doc["algebra"] = problem.algebra.block_dims;
    doc["rank"] = problem.rank;
    Json tols = Json::object();
    tols["atol"] = problem.tolerances.atol;
    tols["rtol"] = problem.tolerances.rtol;
    tols["seed"] = problem.tolerances.seed;
    tols["search_budget"] = problem.tolerances.search_budget;
    doc["tolerances"] = std::move(tols);
    Json ops = Json::object();
    for (const auto& [name, T] : problem.operators) ops[name] = to_json(T);
    doc["operators"] = std::move(ops);
    Json subs = Json::object();
    for (const auto& [name, W] : problem.submodules) subs[name] = to_json(W);
    doc["submodules"] = std::move(subs);
    return doc;
}

}  // namespace cstarinv
