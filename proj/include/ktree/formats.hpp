#pragma once

#include <string>
#include <vector>

#include "ktree/decimal.hpp"
#include "ktree/indicator.hpp"
#include "ktree/rho.hpp"
#include "ktree/rows.hpp"
#include "ktree/tree.hpp"

namespace ktree {

inline constexpr unsigned kDefaultCsvDigits = 15;

/// Graphviz text. Node labels are the integer ids annotated with h(n); the
/// header comment states the drawn edge direction.
std::string tree_to_dot(const TreeSlice& slice, bool meta = false);

/// Plain-text indented tree.
std::string tree_to_text(const TreeSlice& slice);

/// {"k": ..., "max_depth": ..., "rows": [[...], ...]}
std::string tree_to_json(const TreeSlice& slice);

/// CSV with columns d,f_d,r_d.
std::string row_table_to_csv(const RowTable& table, bool meta = false);
std::string row_table_to_json(const RowTable& table);

std::string enclosure_to_json(const RhoEnclosure& enc, unsigned digits = kDefaultCsvDigits);

/// CSV with columns k_num,k_den,n_iters,c_lo,c_hi,rho_lo,rho_hi,error.
/// Interval endpoints are rendered toward their respective side.
std::string sweep_to_csv(const std::vector<SweepPoint>& points, int n_iters,
                         unsigned digits = kDefaultCsvDigits, bool meta = false);

std::string josephus_to_json(const JosephusReport& report,
                             unsigned digits = kDefaultCsvDigits);

/// CSV with columns x,i,f_i,range_class — the child-count indicator lines
/// sampled at `resolution` evenly spaced x values (the ⌈k⌉-th line only where
/// it exists).
std::string cci_lines_to_csv(const GoldenParams& params, int resolution,
                             unsigned digits = kDefaultCsvDigits, bool meta = false);

/// Same column layout for the empirical scatter (i is always 1: first child).
std::string scatter_to_csv(const KValue& k, long n_max,
                           unsigned digits = kDefaultCsvDigits, bool meta = false);

struct VerifyBundle {
    GoldenParams params;
    RecurrenceReport recurrence;
    bool closed_form_holds = false;
    std::optional<int> closed_form_first_failure;
    QuadReal rho_closed;
    RhoEnclosure enclosure;
    bool rho_contained = false;
    bool rho_strict = false;
    bool pass = false;
};

/// Full verification for one (a, b): recurrence, closed-form cross-check and
/// closed-ρ containment in the enclosure. Strict containment is expected for
/// b ≠ 0; for b = 0 the closed ρ equals the enclosure's lower endpoint
/// exactly (integer k reaches its limit), which counts as contained.
VerifyBundle run_verify(const GoldenParams& params, int depth, int n_iters);

std::string verify_to_json(const VerifyBundle& bundle,
                           unsigned digits = kDefaultCsvDigits);

/// {"error": {"type": ..., "message": ...}} for machine-readable failures.
std::string error_to_json(const std::string& type, const std::string& message);

}  // namespace ktree
