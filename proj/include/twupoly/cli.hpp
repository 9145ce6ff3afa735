// Command implementations behind the twupoly tool.  Kept out of main()
// so tests can drive them against string streams.
//
// Exit codes: 0 success; 1 property/check failure; 2 parse error;
// 3 size cap exceeded; 4 singular matrix or principal minor.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twupoly/field.hpp"
#include "twupoly/twuality.hpp"

namespace twupoly {

struct RunConfig {
    std::string command;               // compute | transform | check | kn
    std::string input_path;
    std::string format = "matrix";     // matrix | graft | bouquet
    std::optional<Field> field;        // narrows check suites; unset = all fields
    std::vector<Twuality> ops = {kAllTwualities.begin(), kAllTwualities.end()};
    std::string out_mode = "text";     // text | json
    int max_n = 24;
    int threads = 1;
    std::uint64_t seed = 0x5EED;

    std::optional<std::string> subset;     // compute --set: print exponents instead
    std::optional<std::string> pivot_set;  // transform --pivot
    bool invert = false;                   // transform --invert
    std::string suite = "all";             // check --suite
    int kn_n = 1;                          // kn --n
};

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_kn(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Maps a thrown library error to the exit-code contract.
int exit_code_for(const std::exception& e);

/// Comma-separated operator names, or "all"; throws ContractError on an
/// unknown name.
std::vector<Twuality> parse_ops(const std::string& list);

/// "gf2", "gfp:<p>" or "q".
Field parse_field_tag(const std::string& tag);

}  // namespace twupoly
