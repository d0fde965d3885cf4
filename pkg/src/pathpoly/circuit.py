"""Rectangular circuit grids over the nine elementary cell gates.

A circuit is an N x M table of gates, one row per qubit and one column per
time step.  Within a column, vertical signals implement multi-controlled-X
logic: a source cell (Iv or I^) emits its row value toward the target, pass
and multiply cells forward it, and an add cell (Av or A^) XORs it into its
own row.  Every signal must be produced and consumed exactly once, which
validate_column enforces and column_chains reifies.  H cells are scalar and
never interact with vertical signals.

Gate tokens (case-sensitive): I, I+, Iv, I^, Mv, M^, Av, A^, H.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Gate(Enum):
    """The nine cell-level gates."""

    IDENTITY = "I"
    CROSS = "I+"
    EMIT_DOWN = "Iv"
    EMIT_UP = "I^"
    MUL_DOWN = "Mv"
    MUL_UP = "M^"
    ADD_DOWN = "Av"
    ADD_UP = "A^"
    HADAMARD = "H"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "Gate":
        try:
            return cls(token)
        except ValueError:
            raise ValueError(f"unknown gate token {token!r}") from None


class CircuitError(Exception):
    """Base class for circuit construction and validation failures."""


class CircuitSyntaxError(CircuitError):
    """Malformed circuit text; carries the offending line (and token column)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", token {column}"
            where += ": "
        super().__init__(where + message)


class BrokenChain(CircuitError):
    """A vertical signal was produced or consumed incorrectly.

    reason is one of: 'missing-source', 'missing-sink', 'blocked-by <token>',
    'dangling-emitter'.  Rows and columns are 1-based.
    """

    def __init__(self, column: int, row: int, reason: str):
        self.column = column
        self.row = row
        self.reason = reason
        super().__init__(f"column {column}, row {row}: {reason}")


class PlacementUnsupported(CircuitError):
    """Requested placement cannot be expressed in a single column."""


class PlacementConflict(CircuitError):
    """Requested placement would overwrite a non-identity cell."""


@dataclass(frozen=True, slots=True)
class Chain:
    """One vertical signal: source row, multiply rows, and the add-gate target.

    controls lists the rows whose values are multiplied into the signal
    (the source row plus all multiply rows), ascending.
    """

    source: int
    target: int
    controls: tuple[int, ...]
    descending: bool


def _sweep(column: Sequence[Gate], column_index: int, descending: bool) -> list[Chain]:
    """Simulate one signal direction down (or up) a column, collecting chains."""
    n = len(column)
    if descending:
        rows = range(1, n + 1)
        source_gate, mul_gate, add_gate = Gate.EMIT_DOWN, Gate.MUL_DOWN, Gate.ADD_DOWN
        boundary = n
    else:
        rows = range(n, 0, -1)
        source_gate, mul_gate, add_gate = Gate.EMIT_UP, Gate.MUL_UP, Gate.ADD_UP
        boundary = 1
    chains: list[Chain] = []
    source: int | None = None
    muls: list[int] = []
    for r in rows:
        g = column[r - 1]
        if g is source_gate:
            if source is not None:
                raise BrokenChain(column_index, r, f"blocked-by {g.token}")
            source = r
            muls = []
        elif g is mul_gate:
            if source is None:
                raise BrokenChain(column_index, r, "missing-source")
            muls.append(r)
        elif g is add_gate:
            if source is None:
                raise BrokenChain(column_index, r, "missing-source")
            chains.append(
                Chain(source, r, tuple(sorted([source, *muls])), descending)
            )
            source = None
        elif g is Gate.CROSS:
            pass
        elif source is not None:
            raise BrokenChain(column_index, r, f"blocked-by {g.token}")
    if source is not None:
        reason = "dangling-emitter" if source == boundary else "missing-sink"
        raise BrokenChain(column_index, boundary, reason)
    return chains


def validate_column(column: Sequence[Gate], n: int | None = None, column_index: int = 1) -> None:
    """Raise BrokenChain unless every vertical signal is well-formed."""
    if n is not None and len(column) != n:
        raise ValueError(f"column has {len(column)} cells, expected {n}")
    _sweep(column, column_index, descending=True)
    _sweep(column, column_index, descending=False)


def column_chains(column: Sequence[Gate], column_index: int = 1) -> tuple[Chain, ...]:
    """All vertical chains of a column (validating it), sorted by source row."""
    down = _sweep(column, column_index, descending=True)
    up = _sweep(column, column_index, descending=False)
    return tuple(sorted(down + up, key=lambda ch: ch.source))


@dataclass(frozen=True)
class Circuit:
    """An immutable N x M gate grid; grid[r][c] is qubit row r+1, column c+1.

    Construction validates every column.  h counts the Hadamard cells; path
    variables are numbered 1..h column-major, top to bottom.
    """

    n_qubits: int
    n_columns: int
    grid: tuple[tuple[Gate, ...], ...]

    def __post_init__(self) -> None:
        if self.n_qubits < 1 or self.n_columns < 1:
            raise ValueError("circuit dimensions must be positive")
        if len(self.grid) != self.n_qubits or any(
            len(row) != self.n_columns for row in self.grid
        ):
            raise ValueError("grid shape does not match declared dimensions")
        for c in range(1, self.n_columns + 1):
            validate_column(self.column(c), self.n_qubits, column_index=c)

    @classmethod
    def empty(cls, n_qubits: int, n_columns: int) -> "Circuit":
        row = (Gate.IDENTITY,) * n_columns
        return cls(n_qubits, n_columns, (row,) * n_qubits)

    def column(self, c: int) -> tuple[Gate, ...]:
        """Gates of 1-based column c, top to bottom."""
        return tuple(self.grid[r][c - 1] for r in range(self.n_qubits))

    def gate_at(self, row: int, column: int) -> Gate:
        return self.grid[row - 1][column - 1]

    @property
    def h(self) -> int:
        """Number of Hadamard cells."""
        return sum(g is Gate.HADAMARD for row in self.grid for g in row)

    def with_cells(self, column: int, cells: dict[int, Gate]) -> "Circuit":
        """A copy with the given {row: gate} assignments in one column."""
        grid = [list(row) for row in self.grid]
        for r, g in cells.items():
            grid[r - 1][column - 1] = g
        return Circuit(self.n_qubits, self.n_columns, tuple(tuple(row) for row in grid))


def _check_rows_in_range(circuit: Circuit, rows: Iterable[int]) -> None:
    for r in rows:
        if not 1 <= r <= circuit.n_qubits:
            raise ValueError(f"row {r} out of range 1..{circuit.n_qubits}")


def place_toffoli(circuit: Circuit, column: int, controls: Iterable[int], target: int) -> Circuit:
    """Place a multi-controlled-X as one vertical chain in the given column.

    The control farthest from the target becomes the signal source (Iv or
    I^), remaining controls multiply (Mv or M^), intervening non-control rows
    pass (I+), and the target adds (Av or A^).  The target must lie strictly
    above or strictly below every control.
    """
    ctrl = sorted(set(controls))
    if not ctrl:
        raise ValueError("at least one control row is required")
    if not 1 <= column <= circuit.n_columns:
        raise ValueError(f"column {column} out of range 1..{circuit.n_columns}")
    _check_rows_in_range(circuit, [*ctrl, target])
    if target in ctrl:
        raise ValueError(f"target row {target} is also a control")
    if target > ctrl[-1]:
        descending = True
        source = ctrl[0]
        lo, hi = ctrl[0], target
    elif target < ctrl[0]:
        descending = False
        source = ctrl[-1]
        lo, hi = target, ctrl[-1]
    else:
        raise PlacementUnsupported(
            f"target row {target} lies between controls {ctrl}; "
            "a single-column chain must be monotone"
        )
    cells: dict[int, Gate] = {}
    ctrl_set = set(ctrl)
    for r in range(lo, hi + 1):
        if r == source:
            cells[r] = Gate.EMIT_DOWN if descending else Gate.EMIT_UP
        elif r == target:
            cells[r] = Gate.ADD_DOWN if descending else Gate.ADD_UP
        elif r in ctrl_set:
            cells[r] = Gate.MUL_DOWN if descending else Gate.MUL_UP
        else:
            cells[r] = Gate.CROSS
    for r in cells:
        occupied = circuit.gate_at(r, column)
        if occupied is not Gate.IDENTITY:
            raise PlacementConflict(
                f"column {column}, row {r} already holds {occupied.token}"
            )
    return circuit.with_cells(column, cells)


def place_hadamard(circuit: Circuit, column: int, row: int) -> Circuit:
    """Place an H cell on an identity cell."""
    if not 1 <= column <= circuit.n_columns:
        raise ValueError(f"column {column} out of range 1..{circuit.n_columns}")
    _check_rows_in_range(circuit, [row])
    occupied = circuit.gate_at(row, column)
    if occupied is not Gate.IDENTITY:
        raise PlacementConflict(f"column {column}, row {row} already holds {occupied.token}")
    return circuit.with_cells(column, {row: Gate.HADAMARD})


def _parse_header(line_no: int, tokens: list[str], keyword: str) -> int:
    if len(tokens) != 2 or tokens[0] != keyword or not tokens[1].isdigit() or int(tokens[1]) < 1:
        raise CircuitSyntaxError(f"expected '{keyword} <positive integer>'", line=line_no)
    return int(tokens[1])


def parse_circuit(text: str) -> Circuit:
    """Parse the line-oriented circuit format.

    Two header lines ('qubits N', 'columns M') followed by N rows of M
    whitespace-separated gate tokens; '#' starts a comment.
    """
    lines: list[tuple[int, list[str]]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((line_no, tokens))
    if len(lines) < 2:
        raise CircuitSyntaxError("missing 'qubits' and 'columns' header lines", line=1)
    n = _parse_header(*lines[0], "qubits")
    m = _parse_header(*lines[1], "columns")
    rows = lines[2:]
    if len(rows) != n:
        bad_line = rows[n][0] if len(rows) > n else lines[-1][0]
        raise CircuitSyntaxError(f"expected {n} grid rows, found {len(rows)}", line=bad_line)
    grid: list[tuple[Gate, ...]] = []
    for line_no, tokens in rows:
        if len(tokens) != m:
            raise CircuitSyntaxError(
                f"expected {m} gate tokens, found {len(tokens)}", line=line_no
            )
        row: list[Gate] = []
        for col_no, token in enumerate(tokens, 1):
            try:
                row.append(Gate(token))
            except ValueError:
                raise CircuitSyntaxError(
                    f"unknown gate token {token!r}", line=line_no, column=col_no
                ) from None
        grid.append(tuple(row))
    return Circuit(n, m, tuple(grid))


def format_circuit(circuit: Circuit) -> str:
    """Render a circuit in the text format; parse(format(c)) == c."""
    widths = [
        max(len(circuit.grid[r][c].token) for r in range(circuit.n_qubits))
        for c in range(circuit.n_columns)
    ]
    lines = [f"qubits {circuit.n_qubits}", f"columns {circuit.n_columns}"]
    for row in circuit.grid:
        lines.append("  ".join(g.token.ljust(w) for g, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def random_circuit(
    rng: random.Random,
    max_qubits: int = 4,
    max_columns: int = 6,
    max_h: int = 10,
) -> Circuit:
    """Generate a random valid circuit by sampling column segments.

    Each column is built top-down from independent segments: identity cells,
    H cells (limited by a per-circuit budget drawn from 0..max_h), bare
    crosses, and monotone chains with random direction, multiply/pass
    interiors.  Every grammar production is exercised, including multi-control
    chains and multiple chains per column.
    """
    n = rng.randint(1, max_qubits)
    m = rng.randint(1, max_columns)
    h_left = rng.randint(0, max_h)
    columns: list[list[Gate]] = []
    for _ in range(m):
        col: list[Gate] = []
        while len(col) < n:
            room = n - len(col)
            kinds = ["I", "I", "I+"]
            if h_left > 0:
                kinds += ["H"] * 4
            if room >= 2:
                kinds += ["chain"] * 4
            kind = rng.choice(kinds)
            if kind == "chain":
                length = rng.randint(2, room)
                descending = rng.random() < 0.5
                interior = [
                    rng.choice([Gate.CROSS, Gate.MUL_DOWN if descending else Gate.MUL_UP])
                    for _ in range(length - 2)
                ]
                if descending:
                    col += [Gate.EMIT_DOWN, *interior, Gate.ADD_DOWN]
                else:
                    col += [Gate.ADD_UP, *interior, Gate.EMIT_UP]
            elif kind == "H":
                col.append(Gate.HADAMARD)
                h_left -= 1
            else:
                col.append(Gate(kind))
        columns.append(col)
    grid = tuple(tuple(columns[c][r] for c in range(m)) for r in range(n))
    return Circuit(n, m, grid)
