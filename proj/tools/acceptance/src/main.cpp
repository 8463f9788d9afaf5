#include <iostream>

#include "logpair/acceptance/acceptance.hpp"

int main() { return logpair::acceptance::print_report(logpair::acceptance::run_all(), std::cout) ? 0 : 1; }
