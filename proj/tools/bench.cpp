// Compares the OpenMP-parallel character-table builders against their serial
// reference implementations: wall time for each, plus an exact equality check
// of the produced tables.  On a single-core host the timings coincide; the
// point of the harness is the comparison itself.

#include <chrono>
#include <cstdio>
#include <functional>

#include "pbasic/symchar.hpp"
#include "pbasic/wreath.hpp"

namespace {

double seconds(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count();
}

}  // namespace

int main() {
  using namespace pbasic;
  bool all_equal = true;

  for (int n : {10, 11, 12}) {
    SymTable serial, parallel;
    double ts = seconds([&] { serial = sym_table_serial(n); });
    double tp = seconds([&] { parallel = sym_table(n); });
    bool same = serial.values == parallel.values;
    all_equal = all_equal && same;
    std::printf("S_%-2d  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n",
                n, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
  }

  struct {
    int p, w;
  } cases[] = {{3, 3}, {3, 4}, {5, 2}};
  for (auto [p, w] : cases) {
    BaseGroup base = base_group_semidirect(p);
    WreathTable serial, parallel;
    double ts = seconds([&] { serial = wreath_table_serial(base, w); });
    double tp = seconds([&] { parallel = wreath_table(base, w); });
    bool same = serial.values == parallel.values;
    all_equal = all_equal && same;
    std::printf("G(%d,%d) serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n",
                p, w, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
  }

  return all_equal ? 0 : 1;
}
