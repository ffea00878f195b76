#ifndef LDERLAB_SUITES_HPP
#define LDERLAB_SUITES_HPP

#include <string>
#include <vector>

#include "lderlab/report.hpp"

namespace lderlab {

// Full structural analysis of one algebra: variety tags, the three chains,
// derivation spaces per order, invertibility searches, theorem verdicts,
// and recorded-claim verification for catalog inputs (@name) or documents
// (file path).
Report cmd_analyze(const std::string& input, const Config& config);

// One derivation space: --order n with arrangement "left", "all", or a
// serialized tree such as "(x(xx))".
Report cmd_lder(const std::string& input, int order, const std::string& arrangement,
                const Config& config);

// One named verification suite, or "all".
Report cmd_verify(const std::string& suite_id, const Config& config);

std::vector<std::string> all_suite_ids();

}  // namespace lderlab

#endif
