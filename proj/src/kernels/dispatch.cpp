#include "angmax/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace angmax::kernels {

void poisson_abs_batch_scalar(const FuncView&, double, const double*, int, double*);
void stieltjes_abs_batch_scalar(const FuncView&, double, const double*, int, double*);
void laplace_abs_batch_scalar(const FuncView&, double, const double*, int, double*);

#ifdef ANGMAX_HAVE_AVX2
void poisson_abs_batch_avx2(const FuncView&, double, const double*, int, double*);
void stieltjes_abs_batch_avx2(const FuncView&, double, const double*, int, double*);
void laplace_abs_batch_avx2(const FuncView&, double, const double*, int, double*);
#endif

namespace {

bool cpu_has_avx2()
{
#if defined(ANGMAX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_default()
{
    const char* env = std::getenv("ANGMAX_KERNEL_BACKEND");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (env != nullptr && std::strcmp(env, "avx2") == 0) {
        if (!cpu_has_avx2())
            throw std::runtime_error("ANGMAX_KERNEL_BACKEND=avx2 but AVX2 is unavailable");
        return Backend::Avx2;
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current()
{
    static std::atomic<Backend> b{pick_default()};
    return b;
}

} // namespace

const char* backend_name(Backend b)
{
    return b == Backend::Scalar ? "scalar" : "avx2";
}

bool backend_available(Backend b)
{
    return b == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b)
{
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + backend_name(b));
    current().store(b, std::memory_order_relaxed);
}

BatchFn poisson_fn(Backend b)
{
#ifdef ANGMAX_HAVE_AVX2
    if (b == Backend::Avx2) return &poisson_abs_batch_avx2;
#endif
    (void)b;
    return &poisson_abs_batch_scalar;
}

BatchFn stieltjes_fn(Backend b)
{
#ifdef ANGMAX_HAVE_AVX2
    if (b == Backend::Avx2) return &stieltjes_abs_batch_avx2;
#endif
    (void)b;
    return &stieltjes_abs_batch_scalar;
}

BatchFn laplace_fn(Backend b)
{
#ifdef ANGMAX_HAVE_AVX2
    if (b == Backend::Avx2) return &laplace_abs_batch_avx2;
#endif
    (void)b;
    return &laplace_abs_batch_scalar;
}

void poisson_abs_batch(const FuncView& f, double rho, const double* thetas, int count, double* out)
{
    poisson_fn(active_backend())(f, rho, thetas, count, out);
}

void stieltjes_abs_batch(const FuncView& f, double rho, const double* thetas, int count, double* out)
{
    stieltjes_fn(active_backend())(f, rho, thetas, count, out);
}

void laplace_abs_batch(const FuncView& f, double rho, const double* thetas, int count, double* out)
{
    laplace_fn(active_backend())(f, rho, thetas, count, out);
}

} // namespace angmax::kernels
