"""Compare the numba kernels with the numpy fallback.

Each backend runs in its own interpreter because the choice is made at
import time through MONOPOLE_SPECTRA_JIT.  Compilation is done once in a
warm-up pass and excluded from the timings.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
import monopole_spectra as ms
from monopole_spectra.special_functions import (EllipticInvariants, complete_K, jacobi_sncndn,
                                                wp_and_prime, segment_integral, cubic_roots)
from monopole_spectra import platonic, charge2

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)
ks = rng.uniform(0.01, 0.99, 2000)
us = rng.uniform(-3, 3, 2000)
zs = rng.normal(size=400) * 0.3 + 1j * rng.normal(size=400) * 0.3
inv = EllipticInvariants(4.0, 1.0)

def elliptic():
    for k, u in zip(ks, us):
        complete_K(k)
        jacobi_sncndn(u, k)

def weierstrass():
    for z in zs:
        wp_and_prime(complex(z), inv)

def mass_relation():
    for m in (0.3, 0.9, 1.7, 2.5):
        platonic.alpha_from_mass("tetra", m)
        platonic.alpha_from_mass("octa", m)

def reciprocity():
    for m in (0.5, 1.5):
        for k in (0.2, 0.5, 0.8):
            charge2.verify_triviality(m, k)

out = {"backend": ms.backend_name()}
for name, fn in [("elliptic", elliptic), ("weierstrass", weierstrass),
                 ("mass_relation", mass_relation), ("reciprocity", reciprocity)]:
    fn()  # warm-up, includes compilation
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out[name] = best
print(json.dumps(out))
"""


def run_backend(flag: str, repeat: int) -> dict:
    env = dict(os.environ, MONOPOLE_SPECTRA_JIT=flag)
    p = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], capture_output=True,
                       text=True, env=env, check=True)
    return json.loads(p.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    jit = run_backend("1", args.repeat)
    ref = run_backend("0", args.repeat)
    print(f"{'workload':<16}{jit['backend']:>12}{ref['backend']:>12}{'speedup':>10}")
    for key in jit:
        if key == "backend":
            continue
        print(f"{key:<16}{jit[key] * 1e3:>10.1f}ms{ref[key] * 1e3:>10.1f}ms{ref[key] / jit[key]:>9.2f}x")


if __name__ == "__main__":
    main()
