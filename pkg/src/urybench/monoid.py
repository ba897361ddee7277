"""Distance monoids: ordered commutative monoids used as distance ranges.

Values are encoded per monoid so that Python's built-in ordering coincides
with the monoid order, which keeps comparisons in hot loops cheap:

* ``NatStar``       non-negative ``int``; infinity is ``math.inf``.
* ``TruncatedNat``  ``int`` in ``0..n``; ``n`` absorbs, there is no infinity.
* ``QStar``         pair ``(magnitude, flag)`` with ``magnitude`` a
                    non-negative ``Fraction`` and ``flag == 1`` marking the
                    immediate successor of the magnitude; infinity is
                    ``(math.inf, 0)``.  Tuple order gives q < q+ < q'.
* ``TableMonoid``   index into an ascending finite carrier; addition is a
                    lookup table.  Built from an explicit table or induced
                    from a finite distance set by truncated addition.

Text forms accepted by ``parse`` and produced by ``format``: a non-negative
integer (``17``), a fraction (``3/2``), a trailing ``+`` for successors
(``3/2+``), and the literal ``inf``.

Designators name monoids on the command line and in space files:
``nat-star``, ``trunc:<n>``, ``q-star``, ``set:<v1,v2,...>``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, StructuralError
from .reports import CheckResult, ValidationReport

INFINITY = math.inf
Q_INF = (math.inf, 0)


def _parse_scalar(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad numeric literal {text!r}") from exc
    if value < 0:
        raise DomainError(f"negative distance value {text!r}")
    return value


def _format_scalar(value) -> str:
    if value == INFINITY:
        return "inf"
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


class Monoid:
    """Common interface; concrete classes fix the value encoding."""

    kind: str = ""

    # -- structure -------------------------------------------------------

    @property
    def designator(self) -> str:
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def infinity(self):
        """Absorbing maximal element, or None when the monoid has none."""
        return None

    @property
    def top(self):
        """Largest carrier element (infinity when present)."""
        raise NotImplementedError

    @property
    def least_positive(self):
        """Smallest element above zero."""
        raise NotImplementedError

    def contains(self, value) -> bool:
        raise NotImplementedError

    def add(self, r, s):
        raise NotImplementedError

    def fold(self, r, k: int):
        """k-fold sum of r; k = 0 gives zero."""
        if k < 0:
            raise DomainError("fold count must be non-negative")
        acc = self.zero
        for _ in range(k):
            acc = self.add(acc, r)
        return acc

    # -- text ---------------------------------------------------------------

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    def require(self, value):
        if not self.contains(value):
            raise DomainError(f"value {value!r} is not in the carrier of {self.designator}")
        return value

    # -- enumeration and sampling -------------------------------------------

    def enumerate_values(self) -> Iterator:
        """Deterministic carrier sweep: zero, extremes, then increasing values.

        Finite monoids yield every element exactly once; infinite ones never
        stop, so callers bound the sweep themselves.
        """
        raise NotImplementedError

    def least_factor(self, v, w):
        """Smallest x with v <= x (+) w.  Total: returns zero when v <= w."""
        raise NotImplementedError

    def sample_between(self, rng, lo, hi):
        """Uniform-ish carrier point in [lo, hi]; hi must not be infinity."""
        raise NotImplementedError


class NatStar(Monoid):
    """Natural numbers with an absorbing infinity adjoined."""

    kind = "nat-star"

    @property
    def designator(self) -> str:
        return "nat-star"

    @property
    def zero(self):
        return 0

    @property
    def infinity(self):
        return INFINITY

    @property
    def top(self):
        return INFINITY

    @property
    def least_positive(self):
        return 1

    def contains(self, value) -> bool:
        return (isinstance(value, int) and value >= 0) or value == INFINITY

    def add(self, r, s):
        return r + s

    def parse(self, text: str):
        if text == "inf":
            return INFINITY
        value = _parse_scalar(text)
        if value.denominator != 1:
            raise DomainError(f"{text!r} is not a natural number")
        return value.numerator

    def format(self, value) -> str:
        return _format_scalar(value)

    def enumerate_values(self) -> Iterator:
        yield 0
        yield INFINITY
        yield from itertools.count(1)

    def least_factor(self, v, w):
        if v <= w:
            return 0
        if v == INFINITY:
            return INFINITY
        return v - w

    def sample_between(self, rng, lo, hi):
        if hi == INFINITY:
            raise DomainError("cannot sample from an unbounded interval")
        return rng.randint(lo, hi)

    def __eq__(self, other):
        return isinstance(other, NatStar)

    def __hash__(self):
        return hash(NatStar)


class TruncatedNat(Monoid):
    """Naturals 0..n with saturating addition; n is absorbing, no infinity."""

    kind = "trunc"

    def __init__(self, bound: int):
        if not isinstance(bound, int) or bound < 1:
            raise DomainError("truncation bound must be a positive integer")
        self.bound = bound

    @property
    def designator(self) -> str:
        return f"trunc:{self.bound}"

    @property
    def zero(self):
        return 0

    @property
    def top(self):
        return self.bound

    @property
    def least_positive(self):
        return 1

    def contains(self, value) -> bool:
        return isinstance(value, int) and 0 <= value <= self.bound

    def add(self, r, s):
        t = r + s
        return t if t < self.bound else self.bound

    def parse(self, text: str):
        value = _parse_scalar(text)
        if value.denominator != 1 or value.numerator > self.bound:
            raise DomainError(f"{text!r} is not in 0..{self.bound}")
        return value.numerator

    def format(self, value) -> str:
        return str(value)

    def enumerate_values(self) -> Iterator:
        return iter(range(self.bound + 1))

    def least_factor(self, v, w):
        return v - w if v > w else 0

    def sample_between(self, rng, lo, hi):
        return rng.randint(lo, hi)

    def __eq__(self, other):
        return isinstance(other, TruncatedNat) and other.bound == self.bound

    def __hash__(self):
        return hash((TruncatedNat, self.bound))


class QStar(Monoid):
    """Non-negative rationals, each with a formal immediate successor, plus infinity.

    The successor q+ of q satisfies q < q+ < q' for every rational q' > q,
    and addition treats it as "q plus an infinitesimal":

        p (+) q+ = (p + q)+        p+ (+) q+ = (p + q)+

    so the successor flag propagates through sums by logical or.
    """

    kind = "q-star"

    @property
    def designator(self) -> str:
        return "q-star"

    @property
    def zero(self):
        return (Fraction(0), 0)

    @property
    def infinity(self):
        return Q_INF

    @property
    def top(self):
        return Q_INF

    @property
    def least_positive(self):
        # zero's immediate successor: the least strictly positive element
        return (Fraction(0), 1)

    def contains(self, value) -> bool:
        if value == Q_INF:
            return True
        if not (isinstance(value, tuple) and len(value) == 2):
            return False
        mag, flag = value
        return isinstance(mag, Fraction) and mag >= 0 and flag in (0, 1)

    def add(self, r, s):
        if r == Q_INF or s == Q_INF:
            return Q_INF
        return (r[0] + s[0], r[1] | s[1])

    def parse(self, text: str):
        if text == "inf":
            return Q_INF
        if text.endswith("+"):
            return (_parse_scalar(text[:-1]), 1)
        return (_parse_scalar(text), 0)

    def format(self, value) -> str:
        if value == Q_INF:
            return "inf"
        mag, flag = value
        return _format_scalar(mag) + ("+" if flag else "")

    def enumerate_values(self) -> Iterator:
        yield self.zero
        yield (Fraction(0), 1)
        yield Q_INF
        total = 2
        while True:
            for den in range(1, total):
                num = total - den
                if math.gcd(num, den) != 1:
                    continue
                mag = Fraction(num, den)
                yield (mag, 0)
                yield (mag, 1)
            total += 1

    def least_factor(self, v, w):
        if v <= w:
            return self.zero
        if v == Q_INF:
            return Q_INF
        return (v[0] - w[0], 1 if v[1] > w[1] else 0)

    def sample_between(self, rng, lo, hi):
        if hi == Q_INF:
            raise DomainError("cannot sample from an unbounded interval")
        if lo == hi:
            return lo
        # draw from the half-integer grid and clamp to the interval, so the
        # endpoints (which may carry successor flags) stay reachable
        start = math.ceil(lo[0] * 2)
        stop = math.floor(hi[0] * 2)
        if start > stop:
            return lo if rng.random() < 0.5 else hi
        point = (Fraction(rng.randint(start, stop), 2), 0)
        if point < lo:
            return lo
        if point > hi:
            return hi
        return point

    def __eq__(self, other):
        return isinstance(other, QStar)

    def __hash__(self):
        return hash(QStar)


@dataclass(frozen=True)
class DistanceSet:
    """Finite ascending set of rational values starting at 0."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise StructuralError("distance set must be non-empty")
        if any(not isinstance(v, Fraction) or v < 0 for v in self.values):
            raise DomainError("distance set values must be non-negative rationals")
        if self.values[0] != 0:
            raise DomainError("distance set must contain 0 as its least element")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise StructuralError("distance set values must be strictly ascending")

    @classmethod
    def from_text(cls, text: str) -> "DistanceSet":
        parts = [p for p in text.replace(",", " ").split() if p]
        if not parts:
            raise StructuralError("empty distance set")
        return cls.from_values(_parse_scalar(p) for p in parts)

    @classmethod
    def from_values(cls, values: Iterable) -> "DistanceSet":
        items = sorted({Fraction(v) for v in values})
        return cls(tuple(items))

    def __contains__(self, value) -> bool:
        return Fraction(value) in set(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def describe(self) -> str:
        return ",".join(_format_scalar(v) for v in self.values)


def truncated_sum(dset: DistanceSet, u, v):
    """Largest element of the set that is <= u + v."""
    u = Fraction(u)
    v = Fraction(v)
    values = dset.values
    if u not in dset or v not in dset:
        raise DomainError("truncated sum arguments must lie in the set")
    total = u + v
    # 0 is always present, so the search never comes up empty
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if values[mid] <= total:
            lo = mid
        else:
            hi = mid - 1
    return values[lo]


def is_fraisse_distance_set(dset: DistanceSet):
    """Whether truncated addition over the set is associative.

    Triples are scanned over growing prefixes of the ascending value list
    (every triple involving a new value is checked before the next value is
    admitted), so the returned witness is minimal in its largest entry.
    Returns ``(True, None)`` or ``(False, (u, v, w))``.
    """
    values = dset.values
    for k, top in enumerate(values):
        prefix = values[: k + 1]
        for u in prefix:
            for v in prefix:
                for w in prefix:
                    if top not in (u, v, w):
                        continue
                    left = truncated_sum(dset, truncated_sum(dset, u, v), w)
                    right = truncated_sum(dset, u, truncated_sum(dset, v, w))
                    if left != right:
                        return False, (u, v, w)
    return True, None


class TableMonoid(Monoid):
    """Finite monoid given by an explicit addition table over ascending labels.

    Values are carrier indices; the table is validated for totality and
    closure at construction, while the algebraic laws are left to
    ``validate_monoid`` so broken tables can be inspected.
    """

    kind = "table"

    def __init__(self, labels: Iterable[str], table: Iterable[Iterable[int]],
                 designator: str | None = None):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels) or not self.labels:
            raise StructuralError("table labels must be non-empty and distinct")
        rows = tuple(tuple(row) for row in table)
        n = len(self.labels)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise StructuralError(f"addition table must be {n}x{n}")
        for row in rows:
            for entry in row:
                if not isinstance(entry, int) or not 0 <= entry < n:
                    raise StructuralError(f"table entry {entry!r} is not a carrier index")
        self.table = rows
        self._designator = designator or f"table:{','.join(self.labels)}"
        self._by_label = {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_distance_set(cls, dset: DistanceSet) -> "TableMonoid":
        """Induced monoid of a finite distance set under truncated addition.

        Requires the truncated sum to be associative; otherwise the set does
        not carry a monoid structure and a DomainError reports the witness.
        """
        ok, witness = is_fraisse_distance_set(dset)
        if not ok:
            pretty = tuple(_format_scalar(w) for w in witness)
            raise DomainError(
                f"distance set {dset.describe()} is not associative under "
                f"truncated addition; witness {pretty}",
                witness=witness,
            )
        values = dset.values
        index = {v: i for i, v in enumerate(values)}
        table = tuple(
            tuple(index[truncated_sum(dset, u, v)] for v in values) for u in values
        )
        mono = cls([_format_scalar(v) for v in values], table,
                   designator=f"set:{dset.describe()}")
        mono.scalars = values
        return mono

    @property
    def designator(self) -> str:
        return self._designator

    @property
    def zero(self):
        return 0

    @property
    def top(self):
        return len(self.labels) - 1

    @property
    def least_positive(self):
        if len(self.labels) < 2:
            raise DomainError("monoid has no positive element")
        return 1

    def contains(self, value) -> bool:
        return isinstance(value, int) and 0 <= value < len(self.labels)

    def add(self, r, s):
        return self.table[r][s]

    def parse(self, text: str):
        if text in self._by_label:
            return self._by_label[text]
        # tolerate numerically equal spellings like 2/1 for label 2
        try:
            canonical = _format_scalar(_parse_scalar(text))
        except DomainError:
            canonical = None
        if canonical is not None and canonical in self._by_label:
            return self._by_label[canonical]
        raise DomainError(f"value {text!r} is not in the carrier of {self.designator}")

    def format(self, value) -> str:
        return self.labels[value]

    def enumerate_values(self) -> Iterator:
        return iter(range(len(self.labels)))

    def least_factor(self, v, w):
        row_w = [self.table[x][w] for x in range(len(self.labels))]
        for x, total in enumerate(row_w):
            if v <= total:
                return x
        return self.top

    def sample_between(self, rng, lo, hi):
        return rng.randint(lo, hi)

    def __eq__(self, other):
        return (isinstance(other, TableMonoid) and other.labels == self.labels
                and other.table == self.table)

    def __hash__(self):
        return hash((TableMonoid, self.labels, self.table))


def monoid_from_designator(text: str) -> Monoid:
    """Build a monoid from its command-line designator."""
    text = text.strip()
    if text == "nat-star":
        return NatStar()
    if text == "q-star":
        return QStar()
    if text.startswith("trunc:"):
        tail = text[len("trunc:"):]
        try:
            bound = int(tail)
        except ValueError as exc:
            raise DomainError(f"bad truncation bound {tail!r}") from exc
        return TruncatedNat(bound)
    if text.startswith("set:"):
        return TableMonoid.from_distance_set(DistanceSet.from_text(text[len("set:"):]))
    raise DomainError(f"unknown monoid designator {text!r}")


def extend_monoid(kind) -> Monoid:
    """Unified factory: designator string, DistanceSet, or Monoid (identity)."""
    if isinstance(kind, Monoid):
        return kind
    if isinstance(kind, DistanceSet):
        return TableMonoid.from_distance_set(kind)
    if isinstance(kind, str):
        return monoid_from_designator(kind)
    raise DomainError(f"cannot build a monoid from {kind!r}")


def ext_add(monoid: Monoid, r, s):
    """Carrier-checked addition."""
    monoid.require(r)
    monoid.require(s)
    return monoid.add(r, s)


def ext_leq(monoid: Monoid, r, s) -> bool:
    """Carrier-checked order comparison."""
    monoid.require(r)
    monoid.require(s)
    return r <= s


# how many values an infinite carrier contributes to the law checks below
_SAMPLE_BOUND = 20


def validate_monoid(monoid: Monoid, sample_bound: int = _SAMPLE_BOUND) -> ValidationReport:
    """Check the ordered-monoid laws on a carrier sample.

    Finite monoids are checked exhaustively; infinite ones on the first
    ``sample_bound`` values of their enumeration.  Each law reports the
    first counterexample in enumeration order.
    """
    sample = list(itertools.islice(monoid.enumerate_values(), sample_bound))
    fmt = monoid.format
    checks: list[CheckResult] = []

    def run(name: str, witness) -> None:
        checks.append(CheckResult(name, witness is None,
                                  None if witness is None else tuple(fmt(v) for v in witness)))

    def first(pred, arity: int):
        for combo in itertools.product(sample, repeat=arity):
            if not pred(*combo):
                return combo
        return None

    run("closure", first(lambda r, s: monoid.contains(monoid.add(r, s)), 2))
    run("zero-identity", first(
        lambda r: monoid.add(monoid.zero, r) == r and monoid.add(r, monoid.zero) == r, 1))
    run("zero-least", first(lambda r: monoid.zero <= r, 1))
    run("commutativity", first(lambda r, s: monoid.add(r, s) == monoid.add(s, r), 2))
    run("associativity", first(
        lambda r, s, t: monoid.add(monoid.add(r, s), t) == monoid.add(r, monoid.add(s, t)), 3))
    run("order-totality", first(
        lambda r, s: (r <= s or s <= r) and not (r <= s and s <= r and r != s), 2))
    run("add-invariance", first(
        lambda r, s, t: not r <= s or monoid.add(r, t) <= monoid.add(s, t), 3))
    if monoid.infinity is not None:
        inf = monoid.infinity
        run("infinity-absorption", first(
            lambda r, s: (monoid.add(r, s) == inf) == (r == inf or s == inf), 2))
    return ValidationReport(subject=monoid.designator, checks=checks)


def threshold_is_equivalence(monoid: Monoid, r, n: int) -> bool:
    """Whether the n-fold and (n-1)-fold sums of r coincide.

    When true, "distance below n copies of r" is transitive, so the r-balls
    of that radius tile the space; r must be a positive carrier value.
    """
    monoid.require(r)
    if r == monoid.zero:
        raise DomainError("threshold scalar must be positive")
    if n < 2:
        raise DomainError("threshold count must be at least 2")
    return monoid.fold(r, n - 1) == monoid.fold(r, n)


def sop_scalar_witness(monoid: Monoid, n: int, search_bound: int = 64):
    """First positive carrier value r with (n-1)-fold sum strictly below n-fold.

    Such an r separates the n-fold sums enough to order arbitrarily long
    chains.  Returns None when no witness exists in the first
    ``search_bound`` enumerated values (exhaustive for finite monoids).
    """
    if n < 3:
        raise DomainError("chain length must be at least 3")
    for r in itertools.islice(monoid.enumerate_values(), search_bound):
        if r == monoid.zero:
            continue
        if monoid.fold(r, n - 1) < monoid.fold(r, n):
            return r
    return None
