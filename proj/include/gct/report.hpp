#pragma once

#include <string>
#include <vector>

#include "gct/io.hpp"
#include "gct/theorems.hpp"

namespace gct {

struct ReportOptions {
    bool json = false;
    unsigned long seed = 0;
};

// The deterministic 1-based listing behind --normal addressing: every
// normal subgroup, sorted by (order, element list).
std::vector<SubgroupSet> indexed_normals(GroupPtr G);

std::string report_table(const Fixture& fx, TablePtr T, const ReportOptions& opt);
std::string report_normals(const Fixture& fx, const ReportOptions& opt);
std::string report_gtable(const Fixture& fx, TablePtr T, int normal_index,
                          const SubgroupSet& N, const ReportOptions& opt);
std::string report_series(const Fixture& fx, TablePtr T, int normal_index,
                          const SubgroupSet& N, bool lower, bool upper,
                          const ReportOptions& opt);

struct CheckReport {
    std::string text;
    Verdict verdict;
};

// which: thompson | nmi | gnmi | taketa | fratt. normal_index / N are the
// resolved --normal address (ignored by nmi); p applies to thompson only.
CheckReport report_check(const std::string& which, const Fixture& fx, TablePtr T,
                         int normal_index, const SubgroupSet* N, long p,
                         const ReportOptions& opt);

// Full invariant suite for the group and every normal subgroup. Throws
// VerificationFailed (or a subclass) on any violated invariant; a returned
// report means every invariant held.
std::string report_verify(const Fixture& fx, const ReportOptions& opt);

}  // namespace gct
