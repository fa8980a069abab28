// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "qstat_cli.hpp"

int main(int argc, char** argv) { return qstat::cli::run(argc, argv, std::cout, std::cerr); }
