#pragma once

#include "cstarinv/random_gen.hpp"
#include "cstarinv/report.hpp"

namespace cstarinv {

/// Options for the randomized property suites.  `cases` scales every suite's
/// instance count relative to its reference count (cases = 100 keeps them).
struct SuiteOptions {
    std::uint64_t seed = 7;
    int cases = 100;
    ToleranceConfig tol;
};

/// Shape/rank grid the suites cycle over: shapes {(1),(2),(1,2),(2,3)} and
/// module rank k in 1..4.
struct Instance {
    AlgebraShape shape;
    int rank;
};
Instance suite_instance(int index, bool need_nontrivial_submodule = false);

// One suite per acceptance criterion; each returns a single aggregate record
// whose verdict derives from its residual and threshold.
CheckRecord suite_cstar_axioms(const SuiteOptions& opt);
CheckRecord suite_penrose(const SuiteOptions& opt);
CheckRecord suite_invariance_equivalence(const SuiteOptions& opt);
CheckRecord suite_wong_family(const SuiteOptions& opt);
CheckRecord suite_douglas(const SuiteOptions& opt);
CheckRecord suite_kernel_tower(const SuiteOptions& opt);
CheckRecord suite_decompose_assemble(const SuiteOptions& opt);
CheckRecord suite_unitary_corner_norm(const SuiteOptions& opt);
CheckRecord suite_mp_reducing(const SuiteOptions& opt);
CheckRecord suite_eigen_submodules(const SuiteOptions& opt);
CheckRecord suite_hyperinvariant(const SuiteOptions& opt);
CheckRecord suite_unitary_transport(const SuiteOptions& opt);
CheckRecord suite_determinism(const SuiteOptions& opt);

/// Runs every suite and collects the records into one report.
Report run_property_suites(const SuiteOptions& opt);

}  // namespace cstarinv
