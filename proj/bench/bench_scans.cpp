// Compares the serial reference kernels against the OpenMP ones on the
// exhaustive table scans. Results must agree exactly; times are wall clock.
//
//   ./cayley_bench [max_zadd_n] [--sym6]

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "cayley/checks.hpp"
#include "cayley/families.hpp"

using namespace cayley;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F> double time_ms(F&& f) {
  const double t0 = now_ms();
  f();
  return now_ms() - t0;
}

void report(const std::string& name, int n, double serial_ms, double parallel_ms,
            bool agree) {
  std::printf("%-10s n=%-5d serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
              name.c_str(), n, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "ok" : "MISMATCH");
}

int bench_table(const RawTable& t) {
  const auto map = scan::element_index_map(t.elements());
  const auto idx = scan::index_table(t, map, Exec::Serial);
  int mismatches = 0;

  {
    decltype(scan::closure_cex_serial(idx)) a, b;
    const double s = time_ms([&] { a = scan::closure_cex_serial(idx); });
    const double p = time_ms([&] { b = scan::closure_cex_parallel(idx); });
    report("closure", idx.n, s, p, a == b);
    mismatches += a != b;
  }
  {
    decltype(scan::assoc_cex_serial(idx)) a, b;
    const double s = time_ms([&] { a = scan::assoc_cex_serial(idx); });
    const double p = time_ms([&] { b = scan::assoc_cex_parallel(idx); });
    report("assoc", idx.n, s, p, a == b);
    mismatches += a != b;
  }
  {
    decltype(scan::inverses_cex_serial(idx)) a, b;
    const double s = time_ms([&] { a = scan::inverses_cex_serial(idx); });
    const double p = time_ms([&] { b = scan::inverses_cex_parallel(idx); });
    report("inverses", idx.n, s, p, a == b);
    mismatches += a != b;
  }
  {
    decltype(scan::abelian_cex_serial(idx)) a, b;
    const double s = time_ms([&] { a = scan::abelian_cex_serial(idx); });
    const double p = time_ms([&] { b = scan::abelian_cex_parallel(idx); });
    report("abelian", idx.n, s, p, a == b);
    mismatches += a != b;
  }
  return mismatches;
}

} // namespace

int main(int argc, char** argv) {
  int max_zadd = 512;
  bool sym6 = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--sym6") == 0)
      sym6 = true;
    else
      max_zadd = std::stoi(argv[i]);
  }

  int mismatches = 0;
  for (int n = 128; n <= max_zadd; n *= 2) {
    std::printf("-- zadd(%d)\n", n);
    mismatches += bench_table(build_light(zadd_spec(), n));
  }

  std::printf("-- sym(5)\n");
  mismatches += bench_table(build_light(sym_spec(), 5));

  if (sym6) {
    std::printf("-- sym(6)\n");
    mismatches += bench_table(build_light(sym_spec(), 6));
  }

  if (mismatches) {
    std::printf("%d kernel mismatches\n", mismatches);
    return 1;
  }
  return 0;
}
