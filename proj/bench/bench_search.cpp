// Times the serial reference enumeration against the OpenMP kernel on the
// fixture and checks that both return the same ranking.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "aps/ingest.hpp"
#include "aps/select.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double seconds(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool same(const aps::select::SearchResult& a, const aps::select::SearchResult& b) {
  if (a.top.size() != b.top.size() || a.candidates_evaluated != b.candidates_evaluated) return false;
  for (std::size_t i = 0; i < a.top.size(); ++i) {
    if (a.top[i].datasets != b.top[i].datasets || a.top[i].score != b.top[i].score) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : APS_FIXTURE_DIR "/ndcg10_results.csv";
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "cannot open %s\n", path.c_str());
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const auto matrix = aps::ingest::parse_table(buf.str(), aps::ingest::TableFormat::Auto);

  std::printf("%-5s %-4s %10s %12s %12s %8s %s\n", "size", "mode", "subsets", "serial_s", "omp_s", "speedup",
              "match");
  bool all_match = true;
  for (std::size_t size = 2; size <= 4; ++size) {
    for (auto mode : {aps::select::SearchMode::Max, aps::select::SearchMode::Min}) {
      aps::select::SearchOptions options;
      options.top_k = 10;
      aps::select::SearchResult serial, parallel;
      const double ts = seconds([&] { serial = aps::select::exhaustive_search_reference(matrix, size, mode, options); });
      const double tp = seconds([&] { parallel = aps::select::exhaustive_search(matrix, size, mode, options); });
      const bool ok = same(serial, parallel);
      all_match = all_match && ok;
      std::printf("%-5zu %-4s %10llu %12.4f %12.4f %8.2f %s\n", size,
                  std::string(aps::select::to_string(mode)).c_str(),
                  static_cast<unsigned long long>(parallel.candidates_evaluated), ts, tp, tp > 0 ? ts / tp : 0.0,
                  ok ? "yes" : "NO");
    }
  }
  std::printf("threads: %d\n", omp_get_max_threads());
  return all_match ? 0 : 1;
}
