"""Time each series kernel on the numba and numpy backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The numba column excludes compilation (one warmup call first). Parity of the
returned sums is printed alongside so a fast-but-wrong kernel stands out.
"""
import argparse
import time

from derivgamma import _accel

CASES = [
    ("digamma z=0.5, 1e6 terms", "digamma_terms_sum", (0.5 + 0j, 10**6, 0.0, 3)),
    ("digamma z=2.5-1i, tol 1e-12", "digamma_terms_sum", (2.5 - 1j, 10**6, 1e-12, 5)),
    ("3F2(1,1,1;2,2;1), 1e6 terms", "hyp3f2_terms_sum", (1 + 0j, 1 + 0j, 1 + 0j, 2 + 0j, 2 + 0j, 10**6, 0.0, 1.0, 3)),
    ("polygamma l=3 z=0.7, 2e5 terms", "polygamma_terms_sum", (0.7 + 0j, 3, 2 * 10**5, 0.0, 7)),
    ("beta series (.5,.5), 1e6 terms", "beta_terms_sum", (0.5 + 0j, 0.5 + 0j, 10**6)),
    ("Weierstrass h=1e-3, 1e6 factors", "weierstrass_product", (1e-3 + 0j, 10**6)),
    ("classical sum z=0.5, 1e6 terms", "classical_sum", (0.5 + 0j, 10**6)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def head(result):
    return result[0] if isinstance(result, tuple) else result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = _accel.available()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':34s} " + " ".join(f"{b:>11s}" for b in backends) + "   speedup  |diff|")
    for label, name, call in CASES:
        times, values = [], []
        for b in backends:
            with _accel.use_backend(b):
                fn = getattr(_accel.kernels(), name)
                fn(*call)  # warmup / compile
                t, out = best_of(fn, call, args.repeat)
            times.append(t)
            values.append(head(out))
        cols = " ".join(f"{t * 1e3:9.2f}ms" for t in times)
        if len(times) == 2:
            extra = f"  {times[1] / times[0]:7.1f}x  {abs(values[0] - values[1]):.1e}"
        else:
            extra = ""
        print(f"{label:34s} {cols}{extra}")


if __name__ == "__main__":
    main()
