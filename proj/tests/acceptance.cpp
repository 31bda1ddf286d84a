// Acceptance suite: runs every built-in check and prints one line per
// criterion. Exits nonzero if any check fails.

#include <iostream>

#include "algkit/selftest.hpp"

int main() {
    bool ok = algkit::print_selftest(std::cout);
    return ok ? 0 : 1;
}
