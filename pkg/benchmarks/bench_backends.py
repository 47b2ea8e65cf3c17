"""Compare the JIT kernels against the pure numpy fallback.

Times the individual word kernels on synthetic data and one end-to-end
normal-form workload under each backend.  Run from the repository root:

    python benchmarks/bench_backends.py
"""

import random
import time

import numpy as np

import freeconj as fc
from freeconj import backend


def random_raw(rng, n, span=6):
    return np.array(
        [2 * rng.randint(1, span) + rng.randint(0, 1) for _ in range(n)],
        dtype=np.int64,
    )


def bench_kernel(impl, name, args_list, repeat=5):
    fn = getattr(impl, name)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_comparison():
    rng = random.Random(0)
    reduce_args = [(random_raw(rng, n),) for n in rng.sample(range(10, 400), 200)]
    concat_args = []
    for _ in range(200):
        from freeconj import _kernels_py as ref

        a = ref.free_reduce(random_raw(rng, rng.randint(5, 200)))
        b = ref.free_reduce(random_raw(rng, rng.randint(5, 200)))
        concat_args.append((a, b))
    cases = {"free_reduce": reduce_args, "concat_reduce": concat_args}

    impls = {}
    from freeconj import _kernels_py

    impls["numpy"] = _kernels_py
    try:
        from freeconj import _kernels_numba

        # trigger compilation outside the timed region
        _kernels_numba.free_reduce(random_raw(rng, 8))
        _kernels_numba.concat_reduce(
            _kernels_py.free_reduce(random_raw(rng, 8)),
            _kernels_py.free_reduce(random_raw(rng, 8)),
        )
        impls["numba"] = _kernels_numba
    except ImportError:
        print("numba not importable; kernel comparison covers numpy only")

    print(f"{'kernel':<16} " + " ".join(f"{k:>12}" for k in impls))
    for name, args_list in cases.items():
        times = [bench_kernel(impl, name, args_list) for impl in impls.values()]
        row = " ".join(f"{t * 1e3:>9.2f} ms" for t in times)
        print(f"{name:<16} {row}")
        if len(times) == 2 and times[1] > 0:
            print(f"{'':<16} speedup x{times[0] / times[1]:.1f}")


def end_to_end(backend_name, n_pairs=40):
    backend.use_backend(backend_name)
    ctx = fc.artin(5)
    rng = random.Random(1)

    def rand_word(max_len):
        return fc.Word(
            [(rng.randint(1, 4), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))]
        )

    pairs = []
    for _ in range(n_pairs):
        v = fc.element(ctx, rng.randint(-2, 2), rand_word(6))
        c = fc.element(ctx, rng.randint(-10, 10), rand_word(5))
        pairs.append((v, fc.ext_conjugate(ctx, v, c)))
    t0 = time.perf_counter()
    for v, w in pairs:
        ok, _ = fc.are_conjugate(ctx, v, w)
        assert ok
    return time.perf_counter() - t0


def main():
    print("== kernel microbenchmarks ==")
    kernel_comparison()
    print()
    print("== end to end: conjugacy decisions in the index-5 Artin preset ==")
    results = {}
    names = ["numpy"]
    try:
        import numba  # noqa: F401

        names.append("numba")
    except ImportError:
        pass
    for name in names:
        results[name] = end_to_end(name)
        print(f"{name:>8}: {results[name]:.2f} s for 40 decisions")
    if len(results) == 2:
        print(f"speedup: x{results['numpy'] / results['numba']:.1f}")
    backend.use_backend("auto")


if __name__ == "__main__":
    main()
