#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nilorb::verify {

// Property suites exercised by the CLI `verify` command. Each check prints
// one "ok"/"FAIL" line to the log; a suite passes when every check does.
bool run_suite(const std::string& name, std::uint64_t seed, std::ostream& log);

std::vector<std::string> suite_names();

bool suite_partitions(std::ostream& log);
bool suite_poset(std::ostream& log);
bool suite_oracle(std::ostream& log, std::uint64_t seed);
bool suite_slice(std::ostream& log, std::uint64_t seed);
bool suite_quiver(std::ostream& log, std::uint64_t seed);
bool suite_reduction(std::ostream& log, std::uint64_t seed);
bool suite_specht(std::ostream& log);

}  // namespace nilorb::verify
