#pragma once

#include <cstddef>
#include <string>

// Low-level dense kernels used by the solvers and the attack pipeline.
//
// Every kernel has a scalar reference implementation and, where the host CPU
// supports it, a SIMD variant (AVX2 on x86-64, NEON on aarch64). The variant
// is selected once at startup from CPU feature detection; tests and the
// GRADINV_KERNELS environment variable (values: scalar, avx2, neon) can force
// a specific backend. All variants use a fixed reduction order, so results
// are deterministic for a given backend.

namespace gradinv::kernels {

enum class Backend { scalar, avx2, neon };

Backend active_backend();
bool backend_available(Backend b);
// Throws std::invalid_argument if the backend is not available on this CPU.
void force_backend(Backend b);
std::string backend_name(Backend b);

// y . x over n entries.
double dot(const double* a, const double* b, std::size_t n);
// sum of squares.
double nrm2sq(const double* a, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// x *= alpha
void scal(double alpha, double* x, std::size_t n);
// Plane rotation of two vectors: (x, y) <- (c*x - s*y, s*x + c*y).
void rot(double* x, double* y, double c, double s, std::size_t n);
// Fused column statistics for one-sided Jacobi: uu = u.u, vv = v.v, uv = u.v.
void dot3(const double* u, const double* v, std::size_t n, double& uu, double& vv, double& uv);
// y = A x with A row-major rows x cols.
void matvec(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
// y = A^T x with A row-major rows x cols (y has cols entries).
void matvec_t(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);

namespace detail {

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    double (*nrm2sq)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scal)(double, double*, std::size_t);
    void (*rot)(double*, double*, double, double, std::size_t);
    void (*dot3)(const double*, const double*, std::size_t, double&, double&, double&);
};

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

} // namespace detail

} // namespace gradinv::kernels
