#!/usr/bin/env python3
"""Random-circuit agreement experiment.

Samples random valid circuits, computes the full matrix by brute-force
counting, by Groebner counting and by the dense oracle, and reports exact
agreement plus timing and structural-invariant statistics.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter

from pathpoly import (
    ExactMatrix,
    Method,
    circuit_unitary,
    compile_circuit,
    full_matrix,
    random_circuit,
    row_counts,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--circuits", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-qubits", type=int, default=4)
    parser.add_argument("--max-columns", type=int, default=6)
    parser.add_argument("--max-h", type=int, default=10)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    circuits = [
        random_circuit(rng, args.max_qubits, args.max_columns, args.max_h)
        for _ in range(args.circuits)
    ]
    print(f"{len(circuits)} circuits, h histogram:",
          dict(sorted(Counter(c.h for c in circuits).items())))

    timings = {}
    t0 = time.perf_counter()
    brute = [full_matrix(c, Method.BRUTE) for c in circuits]
    timings["brute"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    groeb = [full_matrix(c, Method.GB) for c in circuits]
    timings["groebner"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    oracle = [circuit_unitary(c) for c in circuits]
    timings["oracle"] = time.perf_counter() - t0

    mismatches = sum(
        not (mb == mg == tuple(u.report_rows()))
        for mb, mg, u in zip(brute, groeb, oracle)
    )
    print(f"matrix mismatches: {mismatches} / {len(circuits)}")

    conserved = unitary = 0
    for circuit, u in zip(circuits, oracle):
        ps = compile_circuit(circuit)
        pairs = row_counts(ps, "0" * circuit.n_qubits)
        conserved += sum(p.n0 + p.n1 for p in pairs) == 1 << circuit.h
        unitary += (u.transpose() @ u) == ExactMatrix.identity(u.dim)
    print(f"path conservation holds: {conserved} / {len(circuits)}")
    print(f"exact unitarity holds:   {unitary} / {len(circuits)}")
    for name, seconds in timings.items():
        print(f"{name:9s} {seconds:7.2f}s")


if __name__ == "__main__":
    main()
