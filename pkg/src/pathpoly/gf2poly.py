"""Multivariate polynomials over Z2 with idempotent variables (x^2 = x).

Everything lives in the Boolean quotient ring Z2[v1..vk]/<v_i^2 - v_i>, so a
monomial is a squarefree product of variables and a polynomial is an XOR of
distinct monomials.  A universe fixes the precedence order of its variables;
each variable is assigned one bit position, with the highest-precedence
variable on the most significant bit.  A monomial is then a bitmask, and
comparing two masks as plain integers is exactly the lexicographic order on
monomials.  Polynomials store their masks sorted descending, which makes the
canonical form unique and the leading monomial the first entry.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence, Union


class VarKind(Enum):
    """The three variable families: path (x), input (a), output (b)."""

    PATH = "x"
    INPUT = "a"
    OUTPUT = "b"


@dataclass(frozen=True, slots=True)
class Variable:
    """A named indeterminate such as x3, a1 or b2.  Indices start at 1."""

    kind: VarKind
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"

    def __repr__(self) -> str:
        return f"Variable({self})"

    @classmethod
    def parse(cls, token: str) -> "Variable":
        """Parse a token like 'x12' into a Variable."""
        m = re.fullmatch(r"([xab])([0-9]+)", token)
        if m is None or m.group(2).startswith("0"):
            raise ValueError(f"not a variable token: {token!r}")
        return cls(VarKind(m.group(1)), int(m.group(2)))


def path_var(index: int) -> Variable:
    return Variable(VarKind.PATH, index)


def input_var(index: int) -> Variable:
    return Variable(VarKind.INPUT, index)


def output_var(index: int) -> Variable:
    return Variable(VarKind.OUTPUT, index)


class VarUniverse:
    """An ordered registry of distinct variables, highest precedence first.

    The variable at position i of the sequence owns bit (size-1-i), so the
    first (highest) variable sits on the most significant bit and integer
    comparison of monomial masks realises the lexicographic term order.
    """

    __slots__ = ("variables", "_bits", "_hash")

    def __init__(self, variables: Iterable[Variable]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variables in universe")
        self.variables = vs
        size = len(vs)
        self._bits = {v: size - 1 - i for i, v in enumerate(vs)}
        self._hash = hash(vs)

    @classmethod
    def for_circuit(cls, h: int, n: int) -> "VarUniverse":
        """The standard universe x1..xh, a1..an, b1..bn in that precedence."""
        return cls(
            [path_var(i) for i in range(1, h + 1)]
            + [input_var(i) for i in range(1, n + 1)]
            + [output_var(i) for i in range(1, n + 1)]
        )

    @classmethod
    def of_paths(cls, h: int) -> "VarUniverse":
        """A universe holding only the path variables x1..xh."""
        return cls([path_var(i) for i in range(1, h + 1)])

    @property
    def size(self) -> int:
        return len(self.variables)

    def __contains__(self, v: Variable) -> bool:
        return v in self._bits

    def bit(self, v: Variable) -> int:
        """Bit position owned by v (0 = least significant)."""
        try:
            return self._bits[v]
        except KeyError:
            raise ValueError(f"variable {v} not in universe") from None

    def mask_of(self, variables: Iterable[Variable]) -> int:
        mask = 0
        for v in variables:
            mask |= 1 << self.bit(v)
        return mask

    def variables_of(self, mask: int) -> tuple[Variable, ...]:
        """Variables of a monomial mask, highest precedence first."""
        size = len(self.variables)
        return tuple(v for i, v in enumerate(self.variables) if mask >> (size - 1 - i) & 1)

    @property
    def path_mask(self) -> int:
        return self.mask_of(v for v in self.variables if v.kind is VarKind.PATH)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarUniverse) and self.variables == other.variables

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VarUniverse({', '.join(map(str, self.variables))})"


def _check_same_universe(a: "VarUniverse", b: "VarUniverse") -> None:
    if a != b:
        raise ValueError("operands live in different universes")


@dataclass(frozen=True, slots=True)
class Monomial:
    """A squarefree product of variables, encoded as a bitmask over a universe."""

    universe: VarUniverse
    mask: int

    @classmethod
    def of(cls, universe: VarUniverse, variables: Iterable[Variable]) -> "Monomial":
        return cls(universe, universe.mask_of(variables))

    @classmethod
    def one(cls, universe: VarUniverse) -> "Monomial":
        return cls(universe, 0)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def variables(self) -> tuple[Variable, ...]:
        return self.universe.variables_of(self.mask)

    @property
    def is_one(self) -> bool:
        return self.mask == 0

    def divides(self, other: "Monomial") -> bool:
        _check_same_universe(self.universe, other.universe)
        return self.mask & other.mask == self.mask

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        _check_same_universe(self.universe, other.universe)
        return Monomial(self.universe, self.mask | other.mask)

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        return "*".join(str(v) for v in self.variables)

    def __repr__(self) -> str:
        return f"Monomial({self})"


class OrderKind(Enum):
    LEX = "lex"
    BLOCK_ELIM = "elim"


class TermOrder:
    """A monomial order given by a comparison sequence of the variables.

    key(mask) permutes the bits of a monomial mask so that integer comparison
    of keys realises the order.  For the native sequence (the universe's own
    precedence) the key is the identity, which the kernels exploit.

    Lex compares variables in the given sequence.  The block elimination
    order puts the path-variable block ahead of all input/output variables
    and is lex inside each block, so eliminating the path block leaves the
    parameter subring.
    """

    __slots__ = ("kind", "universe", "sequence", "_fwd", "_rev")

    def __init__(self, kind: OrderKind, universe: VarUniverse, sequence: tuple[Variable, ...]):
        if set(sequence) != set(universe.variables) or len(sequence) != universe.size:
            raise ValueError("order sequence must be a permutation of the universe")
        self.kind = kind
        self.universe = universe
        self.sequence = sequence
        size = universe.size
        if sequence == universe.variables:
            self._fwd = None
            self._rev = None
        else:
            fwd = [0] * size
            rev = [0] * size
            for i, v in enumerate(sequence):
                src = universe.bit(v)
                dst = size - 1 - i
                fwd[src] = dst
                rev[dst] = src
            self._fwd = tuple(fwd)
            self._rev = tuple(rev)

    @classmethod
    def lex(cls, universe: VarUniverse, sequence: Sequence[Variable] | None = None) -> "TermOrder":
        seq = universe.variables if sequence is None else tuple(sequence)
        return cls(OrderKind.LEX, universe, seq)

    @classmethod
    def block_elim(
        cls, universe: VarUniverse, sequence: Sequence[Variable] | None = None
    ) -> "TermOrder":
        seq = universe.variables if sequence is None else tuple(sequence)
        paths = tuple(v for v in seq if v.kind is VarKind.PATH)
        rest = tuple(v for v in seq if v.kind is not VarKind.PATH)
        return cls(OrderKind.BLOCK_ELIM, universe, paths + rest)

    @property
    def native(self) -> bool:
        """True when key() is the identity on masks."""
        return self._fwd is None

    def _permute(self, mask: int, table: tuple[int, ...]) -> int:
        out = 0
        while mask:
            low = mask & -mask
            mask ^= low
            out |= 1 << table[low.bit_length() - 1]
        return out

    def key(self, mask: int) -> int:
        """Monotone bijection from masks to integers realising the order."""
        if self._fwd is None:
            return mask
        return self._permute(mask, self._fwd)

    def unkey(self, key: int) -> int:
        if self._rev is None:
            return key
        return self._permute(key, self._rev)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TermOrder)
            and self.kind is other.kind
            and self.universe == other.universe
            and self.sequence == other.sequence
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.universe, self.sequence))

    def __repr__(self) -> str:
        return f"TermOrder({self.kind.value}, {', '.join(map(str, self.sequence))})"


PolyLike = Union["Poly", Monomial, int]

_TERM_SPLIT = re.compile(r"\+|⊕")


class Poly:
    """A canonical Z2 polynomial: a descending tuple of distinct monomial masks.

    Addition is XOR of monomial sets; multiplication ORs masks pairwise and
    cancels duplicates, which is exactly idempotent squarefree multiplication.
    Construction canonicalises, so two equal polynomials are structurally
    identical.
    """

    __slots__ = ("universe", "_masks")

    def __init__(self, universe: VarUniverse, masks: Iterable[int] = ()):
        acc: set[int] = set()
        for m in masks:
            if m in acc:
                acc.discard(m)
            else:
                acc.add(m)
        self.universe = universe
        self._masks = tuple(sorted(acc, reverse=True))

    @classmethod
    def zero(cls, universe: VarUniverse) -> "Poly":
        return cls(universe)

    @classmethod
    def one(cls, universe: VarUniverse) -> "Poly":
        return cls(universe, (0,))

    @classmethod
    def constant(cls, universe: VarUniverse, bit: int) -> "Poly":
        if bit not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {bit!r}")
        return cls(universe, (0,) if bit else ())

    @classmethod
    def variable(cls, universe: VarUniverse, v: Variable) -> "Poly":
        return cls(universe, (1 << universe.bit(v),))

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> "Poly":
        ms = list(monomials)
        if not ms:
            raise ValueError("cannot infer universe from no monomials; use Poly.zero")
        u = ms[0].universe
        for m in ms:
            _check_same_universe(u, m.universe)
        return cls(u, (m.mask for m in ms))

    @property
    def monomial_masks(self) -> tuple[int, ...]:
        """Masks in descending order; the canonical internal form."""
        return self._masks

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.universe, m) for m in self._masks)

    @property
    def is_zero(self) -> bool:
        return not self._masks

    @property
    def is_one(self) -> bool:
        return self._masks == (0,)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._masks:
            return -1
        return max(m.bit_count() for m in self._masks)

    @property
    def variables(self) -> tuple[Variable, ...]:
        """The support: variables occurring in some monomial."""
        support = 0
        for m in self._masks:
            support |= m
        return self.universe.variables_of(support)

    def leading_monomial(self, order: TermOrder | None = None) -> Monomial:
        """Largest monomial under the order (native lex when omitted)."""
        if not self._masks:
            raise ValueError("the zero polynomial has no leading monomial")
        if order is None or order.native:
            return Monomial(self.universe, self._masks[0])
        if order.universe != self.universe:
            raise ValueError("order universe does not match polynomial universe")
        return Monomial(self.universe, max(self._masks, key=order.key))

    def _coerce(self, other: PolyLike) -> "Poly | None":
        if isinstance(other, Poly):
            _check_same_universe(self.universe, other.universe)
            return other
        if isinstance(other, Monomial):
            _check_same_universe(self.universe, other.universe)
            return Poly(self.universe, (other.mask,))
        if isinstance(other, int):
            return Poly.constant(self.universe, other & 1) if other in (0, 1) else None
        return None

    def __add__(self, other: PolyLike) -> "Poly":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        small, large = sorted((set(self._masks), set(p._masks)), key=len)
        return Poly(self.universe, large.symmetric_difference(small))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other: PolyLike) -> "Poly":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        acc: set[int] = set()
        for ma in self._masks:
            for mb in p._masks:
                m = ma | mb
                if m in acc:
                    acc.discard(m)
                else:
                    acc.add(m)
        return Poly(self.universe, acc)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.universe == other.universe
            and self._masks == other._masks
        )

    def __hash__(self) -> int:
        return hash((self.universe, self._masks))

    def __bool__(self) -> bool:
        return bool(self._masks)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def evaluate(self, point: Mapping[Variable, int]) -> int:
        """Value in {0,1} at a point binding every variable of the support."""
        ones = 0
        bound = 0
        for v, val in point.items():
            if val not in (0, 1):
                raise ValueError(f"value for {v} must be 0 or 1, got {val!r}")
            if v in self.universe:
                bit = 1 << self.universe.bit(v)
                bound |= bit
                if val:
                    ones |= bit
        parity = 0
        for m in self._masks:
            unbound = m & ~bound
            if unbound:
                missing = self.universe.variables_of(unbound)[0]
                raise ValueError(f"evaluate: variable {missing} is unbound")
            parity ^= (m & ~ones) == 0
        return parity

    def substitute(self, bindings: Mapping[Variable, "Poly | int"]) -> "Poly":
        """Simultaneously replace variables by polynomials of the same universe.

        Replacement polynomials must not mention any substituted variable, so
        the result is well defined without iteration.
        """
        table: dict[int, tuple[int, ...] | int] = {}
        key_mask = 0
        for v, val in bindings.items():
            bit = self.universe.bit(v)
            key_mask |= 1 << bit
            if isinstance(val, Poly):
                _check_same_universe(self.universe, val.universe)
                table[bit] = val._masks
            elif val in (0, 1):
                table[bit] = val
            else:
                raise ValueError(f"binding for {v} must be a Poly, 0 or 1, got {val!r}")
        for val in table.values():
            if isinstance(val, tuple):
                for m in val:
                    if m & key_mask:
                        raise ValueError("substitute: replacement mentions a substituted variable")
        result: set[int] = set()
        for m in self._masks:
            parts = [m & ~key_mask]
            dead = False
            rest = m & key_mask
            while rest:
                low = rest & -rest
                rest ^= low
                val = table[low.bit_length() - 1]
                if val == 1:
                    continue
                if val == 0:
                    dead = True
                    break
                nxt: set[int] = set()
                for pa in parts:
                    for pb in val:
                        t = pa | pb
                        if t in nxt:
                            nxt.discard(t)
                        else:
                            nxt.add(t)
                parts = list(nxt)
            if dead:
                continue
            for t in parts:
                if t in result:
                    result.discard(t)
                else:
                    result.add(t)
        return Poly(self.universe, result)

    def __str__(self) -> str:
        if not self._masks:
            return "0"
        return " + ".join(str(Monomial(self.universe, m)) for m in self._masks)

    def __repr__(self) -> str:
        return f"Poly({self})"

    @classmethod
    def parse(cls, text: str, universe: VarUniverse | None = None) -> "Poly":
        """Parse display syntax like 'x1*x2 + a1 + 1' (⊕ also accepted as +).

        With no universe given, one is inferred from the mentioned variables
        in the standard precedence (paths, then inputs, then outputs, each by
        index).
        """
        terms: list[list[str] | None] = []
        stripped = text.strip()
        if not stripped:
            raise ValueError("empty polynomial text")
        for chunk in _TERM_SPLIT.split(stripped):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty term in polynomial text: {text!r}")
            factors = [f.strip() for f in chunk.split("*")]
            if any(not f for f in factors):
                raise ValueError(f"empty factor in term {chunk!r}")
            terms.append(factors)
        parsed: list[list[Variable] | int] = []
        mentioned: set[Variable] = set()
        for factors in terms:
            if factors == ["1"]:
                parsed.append(1)
                continue
            if factors == ["0"]:
                parsed.append(0)
                continue
            vs = [Variable.parse(f) for f in factors]
            mentioned.update(vs)
            parsed.append(vs)
        if universe is None:
            ordered = sorted(mentioned, key=lambda v: (list(VarKind).index(v.kind), v.index))
            universe = VarUniverse(ordered)
        masks: list[int] = []
        for term in parsed:
            if term == 0:
                continue
            if term == 1:
                masks.append(0)
                continue
            masks.append(universe.mask_of(term))
        return cls(universe, masks)
