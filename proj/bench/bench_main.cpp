// Serial reference vs OpenMP kernels on the two hot paths: orbit-table
// construction and the two-sided counting sweep. Outputs one line per
// workload with both timings and checks the results agree exactly.

#include <chrono>
#include <string>
#include <iostream>

#include "hallq/green.hpp"
#include "hallq/iso_table.hpp"
#include "hallq/table_cache.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hallq;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool tables_equal(const IsoClassTable& a, const IsoClassTable& b) {
    if (a.num_classes() != b.num_classes()) return false;
    for (size_t i = 0; i < a.num_classes(); ++i) {
        const auto& ea = a.entry(int(i));
        const auto& eb = b.entry(int(i));
        if (ea.rep_code != eb.rep_code || ea.orbit_size != eb.orbit_size ||
            ea.aut_order != eb.aut_order)
            return false;
    }
    return true;
}

void bench_orbit(const std::string& name, const std::string& preset, long long q,
                 const DimVector& dim) {
    auto quiver = preset_quiver(preset);
    auto field = GaloisField::make(q);
    const long long budget = 50'000'000;

    auto t0 = Clock::now();
    auto serial = IsoClassTable::build_serial(quiver, field, dim, budget);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    auto parallel = IsoClassTable::build_parallel(quiver, field, dim, budget);
    double tp = seconds_since(t0);

    bool same = tables_equal(*serial, *parallel);
    std::cout << "orbit " << name << ": points=" << serial->num_points()
              << " classes=" << serial->num_classes() << " serial=" << ts << "s parallel=" << tp
              << "s speedup=" << (tp > 0 ? ts / tp : 0) << " identical=" << (same ? "yes" : "NO")
              << "\n";
}

void bench_green(const std::string& preset, long long q, int bound) {
    auto quiver = preset_quiver(preset);

    HallContext ctx_s(quiver, q);
    auto t0 = Clock::now();
    auto serial = sweep_green(ctx_s, bound, false);
    double ts = seconds_since(t0);

    HallContext ctx_p(quiver, q);
    t0 = Clock::now();
    auto parallel = sweep_green(ctx_p, bound, true);
    double tp = seconds_since(t0);

    bool same = serial.instances.size() == parallel.instances.size() && serial.all_equal &&
                parallel.all_equal;
    for (size_t i = 0; same && i < serial.instances.size(); ++i)
        same = serial.instances[i].lhs == parallel.instances[i].lhs &&
               serial.instances[i].rhs == parallel.instances[i].rhs;
    std::cout << "green " << preset << " q=" << q << " bound=" << bound
              << ": instances=" << serial.instances.size() << " serial=" << ts
              << "s parallel=" << tp << "s speedup=" << (tp > 0 ? ts / tp : 0)
              << " identical=" << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    bool big = argc > 1 && std::string(argv[1]) == "--big";
#ifdef _OPENMP
    std::cout << "threads=" << omp_get_max_threads() << "\n";
#else
    std::cout << "threads=1 (no OpenMP)\n";
#endif
    bench_orbit("jordan q=3 dim=3", "jordan", 3, DimVector({3}));
    bench_orbit("jordan q=5 dim=3", "jordan", 5, DimVector({3}));
    bench_orbit("kronecker q=2 dim=(3,3)", "kronecker", 2, DimVector({3, 3}));
    bench_orbit("a2 q=4 dim=(2,2)", "a2", 4, DimVector({2, 2}));
    if (big) bench_orbit("kronecker q=7 dim=(2,2)", "kronecker", 7, DimVector({2, 2}));
    bench_green("jordan", 3, 3);
    bench_green("kronecker", 2, 3);
    return 0;
}
