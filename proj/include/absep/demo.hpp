#pragma once

#include <string>
#include <vector>

namespace absep {

// A self-checking reproduction of one published number or claim the library
// implements; the demo subcommand runs them all and prints a table.
struct DemoResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

std::vector<std::string> demo_ids();
DemoResult run_demo_check(const std::string& id);
std::vector<DemoResult> run_all_demos();

}  // namespace absep
