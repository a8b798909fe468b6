// Times the OpenMP table kernel against the serial reference and checks
// that they produce identical output.

#include <CLI11.hpp>

#include "flagq/grobner.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

namespace {

std::vector<int> parse_degrees(const std::string& text, int n) {
    std::vector<int> d;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ','))
        d.push_back(std::stoi(piece));
    if (static_cast<int>(d.size()) != n - 1)
        throw std::invalid_argument("expected n-1 comma-separated degrees");
    return d;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: parallel vs serial Gromov-Witten table"};
    int n = 4;
    std::string max_d_text = "1,1,1";
    int repeat = 1;
    app.add_option("--n", n);
    app.add_option("--max-d", max_d_text);
    app.add_option("--repeat", repeat);
    CLI11_PARSE(app, argc, argv);

    const auto max_d = parse_degrees(max_d_text, n);
    std::cout << "building tables for n=" << n << " ...\n";
    const flagq::GwContext ctx(n);

    // warm allocator and caches so neither kernel pays first-run costs
    (void)flagq::gw_table_serial(ctx, max_d);
    (void)flagq::gw_table(ctx, max_d);

    double best_serial = 0, best_parallel = 0;
    std::size_t entries = 0;
    mpz_class checksum_serial = 0, checksum_parallel = 0;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = flagq::gw_table_serial(ctx, max_d);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const auto parallel = flagq::gw_table(ctx, max_d);
        const double tp = seconds_since(t0);

        if (serial.size() != parallel.size()) {
            std::cerr << "MISMATCH: table sizes differ\n";
            return 1;
        }
        checksum_serial = 0;
        checksum_parallel = 0;
        for (std::size_t i = 0; i < serial.size(); ++i) {
            if (!(serial[i].u == parallel[i].u && serial[i].v == parallel[i].v &&
                  serial[i].w == parallel[i].w && serial[i].d == parallel[i].d &&
                  serial[i].value == parallel[i].value)) {
                std::cerr << "MISMATCH at entry " << i << "\n";
                return 1;
            }
            checksum_serial += serial[i].value;
            checksum_parallel += parallel[i].value;
        }
        entries = serial.size();
        best_serial = (r == 0) ? ts : std::min(best_serial, ts);
        best_parallel = (r == 0) ? tp : std::min(best_parallel, tp);
    }

    std::cout << "entries      : " << entries << "\n";
    std::cout << "value sum    : " << checksum_serial.get_str() << "\n";
    std::cout << "serial       : " << best_serial << " s\n";
    std::cout << "parallel     : " << best_parallel << " s\n";
    if (best_parallel > 0)
        std::cout << "speedup      : " << best_serial / best_parallel << "x\n";
    std::cout << "outputs match: yes\n";
    return checksum_serial == checksum_parallel ? 0 : 1;
}
