"""Exact transition amplitudes <b|U|a> = (N0 - N1)/sqrt(2)^h.

N0 and N1 count the path-variable assignments x that reach output b from
input a with phase 0 and 1 respectively.  Counting is available two ways:
brute force over all 2^h assignments, and Groebner-based root counting of
the bound systems F0/F1.  Amplitudes live in the subring of Z[1/sqrt(2)]
of values m * sqrt(2)^(-e); all arithmetic is exact and no floating point
appears anywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .circuit import Circuit
from .compiler import PolySystem, compile_circuit, parse_bits
from .errors import CapExceeded
from .gf2poly import Poly, input_var
from .groebner import (
    ROOT_COUNT_VARIABLE_CAP,
    _count_standard,
    _gb_masks,
)

BRUTE_HADAMARD_CAP = 24
MATRIX_QUBIT_CAP = 10


class Method(Enum):
    """Counting back end for amplitude computations."""

    BRUTE = "brute"
    GB = "gb"


@dataclass(frozen=True)
class Amplitude:
    """Exact value m * sqrt(2)^(-e), normalized so e is minimal.

    Normalization divides out factors of 2 (two units of e at a time), so
    equality of normalized values is exact equality in Z[1/sqrt(2)].  Zero
    is canonically (0, 0).
    """

    m: int
    e: int = 0

    def __post_init__(self) -> None:
        m, e = self.m, self.e
        if e < 0:
            raise ValueError("exponent e must be nonnegative")
        if m == 0:
            m, e = 0, 0
        else:
            while e >= 2 and m % 2 == 0:
                m //= 2
                e -= 2
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "e", e)

    @property
    def is_zero(self) -> bool:
        return self.m == 0

    def __add__(self, other: "Amplitude") -> "Amplitude":
        if not isinstance(other, Amplitude):
            return NotImplemented
        if self.m == 0:
            return other
        if other.m == 0:
            return self
        if (self.e - other.e) % 2:
            raise ValueError(
                f"cannot add {self} and {other}: sqrt(2) scales of different parity"
            )
        e = max(self.e, other.e)
        return Amplitude(
            (self.m << ((e - self.e) // 2)) + (other.m << ((e - other.e) // 2)), e
        )

    def __neg__(self) -> "Amplitude":
        return Amplitude(-self.m, self.e)

    def __sub__(self, other: "Amplitude") -> "Amplitude":
        if not isinstance(other, Amplitude):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Amplitude") -> "Amplitude":
        if not isinstance(other, Amplitude):
            return NotImplemented
        return Amplitude(self.m * other.m, self.e + other.e)

    def render(self) -> str:
        """Canonical text: 0, m, m/2^j, m/sqrt2, or m/(2^j*sqrt2)."""
        if self.m == 0:
            return "0"
        if self.e == 0:
            return str(self.m)
        j, odd = divmod(self.e, 2)
        if not odd:
            return f"{self.m}/{1 << j}"
        if j == 0:
            return f"{self.m}/√2"
        return f"{self.m}/({1 << j}·√2)"

    def __str__(self) -> str:
        return self.render()


AMP_ZERO = Amplitude(0)
AMP_ONE = Amplitude(1)


@dataclass(frozen=True)
class CountPair:
    """Path counts with phase 0 (n0) and phase 1 (n1)."""

    n0: int
    n1: int

    def __post_init__(self) -> None:
        if self.n0 < 0 or self.n1 < 0:
            raise ValueError("counts must be nonnegative")


def _bound_x_masks(
    ps: PolySystem, abits: Sequence[int]
) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """Bind a into the system and project monomial masks onto the x-block.

    Path variables occupy the high bits of the circuit universe, so after
    substituting the a_i every mask shifts right by 2n into a compact
    h-variable mask space with x_k on bit h-k.
    """
    bindings = {input_var(i): bit for i, bit in enumerate(abits, 1)}
    shift = 2 * ps.n
    rows = [
        tuple(m >> shift for m in p.substitute(bindings).monomial_masks)
        for p in ps.row_polys
    ]
    phase = tuple(m >> shift for m in ps.phase.substitute(bindings).monomial_masks)
    return rows, phase


def _eval_masks(masks: Sequence[int], sigma: int) -> int:
    value = 0
    for m in masks:
        value ^= (m & ~sigma) == 0
    return value


def count_bruteforce(
    ps: PolySystem,
    a: "str | Sequence[int]",
    b: "str | Sequence[int]",
    h_cap: int = BRUTE_HADAMARD_CAP,
) -> CountPair:
    """Enumerate all 2^h path assignments, comparing each row value with b."""
    if ps.h > h_cap:
        raise CapExceeded(f"brute force over 2^{ps.h} assignments exceeds cap 2^{h_cap}")
    abits = parse_bits(a, ps.n, "a")
    bbits = parse_bits(b, ps.n, "b")
    rows, phase = _bound_x_masks(ps, abits)
    targets = list(zip(rows, bbits))
    n0 = n1 = 0
    for sigma in range(1 << ps.h):
        if all(_eval_masks(masks, sigma) == bit for masks, bit in targets):
            if _eval_masks(phase, sigma):
                n1 += 1
            else:
                n0 += 1
    return CountPair(n0, n1)


def _count_roots_masks(gens: list[tuple[int, ...]], h: int) -> int:
    """Root count of bound mask systems over the h compact path variables."""
    if h > ROOT_COUNT_VARIABLE_CAP:
        raise CapExceeded(
            f"root counting over {h} variables exceeds the cap of "
            f"{ROOT_COUNT_VARIABLE_CAP}"
        )
    basis = _gb_masks(gens, h)
    lms = [g[0] for g in basis]
    return _count_standard(lms, (1 << h) - 1)


def _toggle_constant(masks: tuple[int, ...], bit: int) -> tuple[int, ...]:
    """XOR a constant 0/1 into a mask polynomial (constant monomial has mask 0)."""
    if not bit:
        return masks
    if masks and masks[-1] == 0:
        return masks[:-1]
    return (*masks, 0)


def count_groebner(
    ps: PolySystem, a: "str | Sequence[int]", b: "str | Sequence[int]"
) -> CountPair:
    """Count roots of the bound systems F0 and F1 via Groebner bases."""
    abits = parse_bits(a, ps.n, "a")
    bbits = parse_bits(b, ps.n, "b")
    rows, phase = _bound_x_masks(ps, abits)
    f = [_toggle_constant(masks, bit) for masks, bit in zip(rows, bbits)]
    n0 = _count_roots_masks([*f, phase], ps.h)
    n1 = _count_roots_masks([*f, _toggle_constant(phase, 1)], ps.h)
    return CountPair(n0, n1)


def count_paths(
    ps: PolySystem,
    a: "str | Sequence[int]",
    b: "str | Sequence[int]",
    method: Method = Method.BRUTE,
    h_cap: int = BRUTE_HADAMARD_CAP,
) -> CountPair:
    """Count paths by the chosen method."""
    if method is Method.BRUTE:
        return count_bruteforce(ps, a, b, h_cap=h_cap)
    return count_groebner(ps, a, b)


def element(
    circuit: Circuit,
    a: "str | Sequence[int]",
    b: "str | Sequence[int]",
    method: Method = Method.BRUTE,
    h_cap: int = BRUTE_HADAMARD_CAP,
) -> Amplitude:
    """The exact matrix element <b|U|a> = (N0 - N1) * sqrt(2)^(-h)."""
    ps = compile_circuit(circuit)
    pair = count_paths(ps, a, b, method=method, h_cap=h_cap)
    return Amplitude(pair.n0 - pair.n1, ps.h)


def _truth_table_patterns(h: int) -> list[int]:
    """Pattern p: bit sigma is set iff bit p of sigma is set, over 2^h points."""
    width = 1 << h
    patterns = []
    for p in range(h):
        block = 1 << p
        period = ((1 << block) - 1) << block
        repeats = ((1 << width) - 1) // ((1 << (2 * block)) - 1)
        patterns.append(period * repeats)
    return patterns


def _truth_table(masks: Sequence[int], patterns: list[int], width: int) -> int:
    full = (1 << width) - 1
    table = 0
    for m in masks:
        indicator = full
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            indicator &= patterns[low.bit_length() - 1]
        table ^= indicator
    return table


def row_counts(
    ps: PolySystem,
    a: "str | Sequence[int]",
    method: Method = Method.BRUTE,
    h_cap: int = BRUTE_HADAMARD_CAP,
) -> tuple[CountPair, ...]:
    """CountPairs for all 2^N outputs b (ascending big-endian), fixed input a.

    The brute path builds one 2^h-bit truth table per row polynomial and per
    phase, then each b is an AND of matched tables: the same enumeration as
    count_bruteforce, batched across all outputs.
    """
    abits = parse_bits(a, ps.n, "a")
    if method is Method.GB:
        rows, phase = _bound_x_masks(ps, abits)
        out = []
        for bidx in range(1 << ps.n):
            f = [
                _toggle_constant(masks, (bidx >> (ps.n - 1 - i)) & 1)
                for i, masks in enumerate(rows)
            ]
            n0 = _count_roots_masks([*f, phase], ps.h)
            n1 = _count_roots_masks([*f, _toggle_constant(phase, 1)], ps.h)
            out.append(CountPair(n0, n1))
        return tuple(out)
    if ps.h > h_cap:
        raise CapExceeded(f"brute force over 2^{ps.h} assignments exceeds cap 2^{h_cap}")
    rows, phase = _bound_x_masks(ps, abits)
    width = 1 << ps.h
    full = (1 << width) - 1
    patterns = _truth_table_patterns(ps.h)
    row_tables = [_truth_table(masks, patterns, width) for masks in rows]
    phase_table = _truth_table(phase, patterns, width)
    out = []
    for bidx in range(1 << ps.n):
        match = full
        for i, table in enumerate(row_tables):
            bit = (bidx >> (ps.n - 1 - i)) & 1
            match &= table if bit else table ^ full
        n1 = (match & phase_table).bit_count()
        out.append(CountPair(match.bit_count() - n1, n1))
    return tuple(out)


def full_matrix(
    circuit: Circuit,
    method: Method = Method.BRUTE,
    qubit_cap: int = MATRIX_QUBIT_CAP,
    h_cap: int = BRUTE_HADAMARD_CAP,
) -> tuple[tuple[Amplitude, ...], ...]:
    """The 2^N x 2^N matrix of <b|U|a>: rows indexed by a, columns by b."""
    if circuit.n_qubits > qubit_cap:
        raise CapExceeded(
            f"matrix over {circuit.n_qubits} qubits exceeds the cap of {qubit_cap}"
        )
    ps = compile_circuit(circuit)
    matrix = []
    for aidx in range(1 << ps.n):
        abits = tuple((aidx >> (ps.n - 1 - i)) & 1 for i in range(ps.n))
        pairs = row_counts(ps, abits, method=method, h_cap=h_cap)
        matrix.append(tuple(Amplitude(p.n0 - p.n1, ps.h) for p in pairs))
    return tuple(matrix)


def bit_label(index: int, n: int) -> str:
    """Big-endian bit string of length n for a basis index."""
    return format(index, f"0{n}b") if n else ""


def render_matrix_table(matrix: Sequence[Sequence[Amplitude]], n: int) -> str:
    """Aligned text table: rows labeled by a, columns by b, big-endian."""
    labels = [bit_label(i, n) for i in range(1 << n)]
    cells = [[amp.render() for amp in row] for row in matrix]
    widths = [
        max(len(labels[j]), max(len(row[j]) for row in cells)) for j in range(len(labels))
    ]
    head_width = max(len("a\\b"), n)
    lines = ["  ".join(["a\\b".ljust(head_width)] + [l.rjust(w) for l, w in zip(labels, widths)])]
    for label, row in zip(labels, cells):
        lines.append("  ".join([label.ljust(head_width)] + [c.rjust(w) for c, w in zip(row, widths)]))
    return "\n".join(lines) + "\n"


def render_matrix_json(matrix: Sequence[Sequence[Amplitude]]) -> str:
    """JSON array of rows of rendered amplitude strings."""
    return json.dumps([[amp.render() for amp in row] for row in matrix], ensure_ascii=False)
