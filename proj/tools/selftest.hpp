#pragma once

// Built-in oracle suite behind the `selftest` subcommand: quick
// independent checks (sampling moments, brute-force maximizer, finite
// differences, reputation bounds) against the library implementations.
// Returns the number of failed checks.
int run_selftest();
