#include <benchmark/benchmark.h>

// The distribution's benchmark_main archive carries LTO bytecode tied to one
// compiler build; a local main avoids linking it.
BENCHMARK_MAIN();
