#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "ualg/corpus.hpp"
#include "ualg/kernels.hpp"

using namespace ualg;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& f, int repeat) {
    double best = 1e18;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = Clock::now();
        f();
        auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& kernel, const std::string& workload, double serial_ms,
         double parallel_ms, bool equal) {
    std::printf("%-12s %-26s %10.2f ms %10.2f ms %7.2fx  %s\n", kernel.c_str(),
                workload.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

void bench_identity(int size, int repeat) {
    FiniteAlgebra a = corpus::chain_lattice(size);
    // distributivity over four variables keeps the scan at size^4 assignments
    Term lhs = parse_term("(meet x (join y (join z w)))", a.sig);
    Term rhs = parse_term("(join (meet x y) (meet x (join z w)))", a.sig);
    const std::vector<std::string> vars = {"w", "x", "y", "z"};
    std::optional<int64_t> rs, rp;
    double s = run_ms([&] { rs = kernels::identity_violation_serial(a, lhs, rhs, vars); }, repeat);
    double p = run_ms([&] { rp = kernels::identity_violation_omp(a, lhs, rhs, vars); }, repeat);
    row("identity", "chain" + std::to_string(size) + ", size^4 scan", s, p, rs == rp);
}

void bench_compat(int size, int repeat) {
    FiniteAlgebra a = corpus::z_n_ring(size);
    std::vector<std::vector<int>> blocks(2);
    for (int i = 0; i < size; ++i) blocks[static_cast<std::size_t>(i % 2)].push_back(i);
    Partition p = Partition::from_blocks(size, blocks);
    std::optional<std::pair<int, int64_t>> rs, rp;
    double ts = run_ms([&] { rs = kernels::incompatibility_serial(a, p); }, repeat);
    double tp = run_ms([&] { rp = kernels::incompatibility_omp(a, p); }, repeat);
    row("compat", "z" + std::to_string(size) + ", mod-2 partition", ts, tp, rs == rp);
}

void bench_principal(int size, int repeat) {
    FiniteAlgebra a = corpus::z_n_ring(size);
    std::vector<Partition> rs, rp;
    double ts = run_ms([&] { rs = kernels::principal_congruences_serial(a); }, repeat);
    double tp = run_ms([&] { rp = kernels::principal_congruences_omp(a); }, repeat);
    row("principal", "z" + std::to_string(size) + ", all pairs", ts, tp, rs == rp);
}

void bench_joinclosure(int exponent, int repeat) {
    FiniteAlgebra a = corpus::join_semilattice_cube(exponent);
    std::vector<Partition> base = kernels::principal_congruences_serial(a);
    std::vector<Partition> rs, rp;
    double ts = run_ms([&] { rs = kernels::congruence_join_closure_serial(a, base); }, repeat);
    double tp = run_ms([&] { rp = kernels::congruence_join_closure_omp(a, base); }, repeat);
    row("joinclosure", "slcube" + std::to_string(exponent) + ", Con lattice", ts, tp, rs == rp);
}

void bench_central(int size, int repeat) {
    FiniteAlgebra a = corpus::z_n_ring(size);
    PierceContext ctx = corpus::materialize(corpus::ring_context(), a.sig);
    std::vector<CentralPair> rs, rp;
    double ts = run_ms([&] { rs = kernels::equational_pair_scan_serial(a, ctx); }, repeat);
    double tp = run_ms([&] { rp = kernels::equational_pair_scan_omp(a, ctx); }, repeat);
    bool equal = rs.size() == rp.size();
    for (std::size_t i = 0; equal && i < rs.size(); ++i)
        equal = rs[i].e == rp[i].e && rs[i].f == rp[i].f;
    row("central", "z" + std::to_string(size) + ", pair scan", ts, tp, equal);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel comparison"};
    std::string kernel = "all";
    int size = 0;
    int repeat = 2;
    int threads = 0;
    app.add_option("--kernel", kernel, "identity | compat | principal | joinclosure | central | all");
    app.add_option("--size", size, "workload size (kernel-specific default)");
    app.add_option("--repeat", repeat, "repetitions, best-of");
    app.add_option("--threads", threads, "OpenMP thread count");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels fall back to serial\n");
#endif
    std::printf("%-12s %-26s %13s %13s %8s\n", "kernel", "workload", "serial", "parallel",
                "speedup");

    if (kernel == "identity" || kernel == "all") bench_identity(size > 0 ? size : 48, repeat);
    if (kernel == "compat" || kernel == "all") bench_compat(size > 0 ? size : 300, repeat);
    if (kernel == "principal" || kernel == "all") bench_principal(size > 0 ? size : 64, repeat);
    if (kernel == "joinclosure" || kernel == "all") bench_joinclosure(size > 0 ? size : 4, repeat);
    if (kernel == "central" || kernel == "all") bench_central(size > 0 ? size : 12, repeat);
    return 0;
}
