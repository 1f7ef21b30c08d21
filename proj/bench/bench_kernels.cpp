// Serial vs OpenMP timings for the two parallel kernels.
#include <chrono>
#include <cstdio>

#include <omp.h>

#include "multibase/bases.hpp"
#include "multibase/expansions.hpp"

using namespace multibase;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  for (int M : {5, 7, 8}) {
    size_t a = 0, b = 0;
    double ts = seconds([&] { a = sweep_window(M, 8).size(); });
    double tp = seconds([&] { b = sweep_window_omp(M, 8).size(); });
    std::printf("sweep M=%d K=8      serial %.3fs  omp %.3fs  hits %zu/%zu\n", M, ts, tp, a, b);
  }
  for (int M : {3, 4}) {
    BaseContext ctx = make_context(M, p2(M));
    auto seqs = enumerate_canonical(M, 5, 4);
    std::vector<char> a, b;
    double ts = seconds([&] { a = classify_unique(seqs, ctx.alpha_seq(), ctx.alphabet); });
    double tp = seconds([&] { b = classify_unique_omp(seqs, ctx.alpha_seq(), ctx.alphabet); });
    std::printf("classify M=%d n=%zu  serial %.3fs  omp %.3fs  %s\n", M, seqs.size(), ts, tp,
                a == b ? "agree" : "DIFFER");
  }
  return 0;
}
