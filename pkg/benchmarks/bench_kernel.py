"""Compiled vs pure-Python product kernel.

Expands sigma_a * sigma_b for every pair a <= b of a rectangle with each
backend, checks the two agree, and prints wall times.

    python3 benchmarks/bench_kernel.py --strata 3:5,4:6
"""

import argparse
import time

from hornlab import kernel, young


def run(module, r, k, pairs):
    start = time.perf_counter()
    out = [module.quantum_expand(a, b, r, k) for a, b in pairs]
    return time.perf_counter() - start, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--strata", default="3:5,4:5,4:6", help="comma list r:k")
    ap.add_argument("--limit", type=int, default=0, help="cap the number of pairs per stratum (0 = all)")
    args = ap.parse_args()

    backends = kernel.backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    print(f"{'stratum':>8} {'pairs':>7} " + " ".join(f"{name:>10}" for name in backends) + "   speedup")
    for item in args.strata.split(","):
        r, k = (int(x) for x in item.split(":"))
        parts = young.enumerate_partitions(r, k)
        pairs = [(a, b) for i, a in enumerate(parts) for b in parts[i:]]
        if args.limit:
            pairs = pairs[: args.limit]
        times = {}
        results = {}
        for name, module in backends.items():
            times[name], results[name] = run(module, r, k, pairs)
        if len(results) == 2 and results["python"] != results["compiled"]:
            raise SystemExit(f"backends disagree on stratum {r}:{k}")
        speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else ""
        cols = " ".join(f"{times[name]:9.3f}s" for name in backends)
        print(f"{r}:{k:<6} {len(pairs):>7} {cols}   {speed}", flush=True)


if __name__ == "__main__":
    main()
