#pragma once

#include <cstddef>
#include <string>

namespace angmax::kernels {

/// Raw view of a piecewise-constant function prepared for batch evaluation.
/// breakpoints has pieces+1 entries; val_re/val_im have pieces entries each.
struct FuncView {
    const double* breakpoints;
    const double* val_re;
    const double* val_im;
    int pieces;
};

/// Batched moduli of the transforms along an angular scan: given a fixed
/// radius rho and a batch of angles, writes |T f(rho e^{i theta_j})| to
/// out[j]. These are the inner loops of the angular maximal search; each has
/// a scalar reference implementation and a vectorized variant selected at
/// runtime.
void poisson_abs_batch(const FuncView& f, double rho,
                       const double* thetas, int count, double* out);
void stieltjes_abs_batch(const FuncView& f, double rho,
                         const double* thetas, int count, double* out);
void laplace_abs_batch(const FuncView& f, double rho,
                       const double* thetas, int count, double* out);

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);

/// True when the instruction set is present on this CPU (and the variant was
/// compiled in).
bool backend_available(Backend b);

/// Backend used by the batch entry points above. The default is the best
/// available one; the environment variable ANGMAX_KERNEL_BACKEND
/// (scalar|avx2|auto) overrides it at startup.
Backend active_backend();
void set_backend(Backend b); // throws std::invalid_argument if unavailable

/// Direct handles for equivalence tests.
using BatchFn = void (*)(const FuncView&, double, const double*, int, double*);
BatchFn poisson_fn(Backend b);
BatchFn stieltjes_fn(Backend b);
BatchFn laplace_fn(Backend b);

} // namespace angmax::kernels
