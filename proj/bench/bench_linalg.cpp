// Compares the OpenMP-parallel elimination kernel against the serial
// reference on random F_p matrices and checks that they agree exactly.

#include "tccert/matrix.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace tccert;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<long long> dist(0, 1000);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(f, dist(rng));
    return m;
}

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool same(const EchelonForm& a, const EchelonForm& b) {
    if (a.rank != b.rank || a.pivots != b.pivots) return false;
    for (std::size_t r = 0; r < a.rref.rows(); ++r)
        for (std::size_t c = 0; c < a.rref.cols(); ++c)
            if (a.rref.at(r, c) != b.rref.at(r, c)) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? static_cast<std::size_t>(std::stoul(argv[1])) : 400;
    FieldSpec f = FieldSpec::prime(1000003);
    std::mt19937_64 rng(12345);

    std::cout << "elimination over F_p, p = " << f.characteristic() << "\n";
    std::cout << "size\tserial(ms)\tparallel(ms)\tspeedup\tagree\n";
    for (std::size_t size : {n / 4, n / 2, n}) {
        Matrix m = random_matrix(f, size, size + size / 4, rng);
        EchelonForm serial, parallel;
        double ts = time_ms([&] { serial = reduce_echelon_serial(m); });
        double tp = time_ms([&] { parallel = reduce_echelon(m); });
        std::cout << size << "x" << m.cols() << "\t" << ts << "\t" << tp << "\t"
                  << (tp > 0 ? ts / tp : 0.0) << "\t" << (same(serial, parallel) ? "yes" : "NO")
                  << "\n";
        if (!same(serial, parallel)) return 1;
    }
    return 0;
}
