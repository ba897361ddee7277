"""Finite extended-metric spaces over a distance monoid.

A space is a finite point set with a symmetric distance matrix valued in a
monoid carrier.  Distances between distinct points may be infinite when the
monoid has an infinity; two points at infinite distance sit in different
metric components.

Spaces serialize to a small line format (extension ``.dms``):

    monoid nat-star
    points a b c
    d a b 1
    d a c 2
    d b c 3

Line one names the monoid by designator, line two lists the points, then
one ``d`` line per unordered pair in point-list order.  ``#`` starts a
comment.  Serialization is canonical: parse and re-serialize is the
identity on the emitted bytes.

Instances are treated as immutable; every operation returns a new Space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (DomainError, PreconditionError, StructuralError,
                     UnsupportedOperationError)
from .monoid import Monoid, monoid_from_designator
from .reports import CheckResult, ValidationReport


class Space:
    """Finite point set with a monoid-valued distance matrix."""

    __slots__ = ("monoid", "points", "dist", "_index")

    def __init__(self, monoid: Monoid, points: tuple[str, ...],
                 dist: tuple[tuple[object, ...], ...]):
        self.monoid = monoid
        self.points = points
        self.dist = dist
        self._index: dict[str, int] | None = None

    # -- lookup ------------------------------------------------------------

    @property
    def index(self) -> dict[str, int]:
        if self._index is None:
            self._index = {p: i for i, p in enumerate(self.points)}
        return self._index

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, name: str) -> bool:
        return name in self.index

    def point_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise DomainError(f"unknown point {name!r}") from None

    def d(self, x: str, y: str):
        return self.dist[self.point_index(x)][self.point_index(y)]

    def __eq__(self, other):
        return (isinstance(other, Space) and other.monoid == self.monoid
                and other.points == self.points and other.dist == self.dist)

    def __repr__(self):
        return f"Space({self.monoid.designator}, {len(self)} points)"

    # -- derived spaces ------------------------------------------------------

    def restrict(self, names) -> "Space":
        idxs = [self.point_index(n) for n in names]
        if len(set(idxs)) != len(idxs):
            raise DomainError("duplicate points in restriction")
        rows = tuple(tuple(self.dist[i][j] for j in idxs) for i in idxs)
        return Space(self.monoid, tuple(self.points[i] for i in idxs), rows)

    def rename(self, mapping: dict[str, str]) -> "Space":
        new_points = tuple(mapping.get(p, p) for p in self.points)
        if len(set(new_points)) != len(new_points):
            raise DomainError("renaming collapses points")
        return Space(self.monoid, new_points, self.dist)

    # -- text ---------------------------------------------------------------

    def serialize(self) -> str:
        fmt = self.monoid.format
        lines = [f"monoid {self.monoid.designator}",
                 "points " + " ".join(self.points)]
        n = len(self.points)
        for i in range(n):
            for j in range(i + 1, n):
                lines.append(f"d {self.points[i]} {self.points[j]} {fmt(self.dist[i][j])}")
        return "\n".join(lines) + "\n"


def _check_name(name: str) -> str:
    if not name or any(c.isspace() for c in name) or "#" in name:
        raise StructuralError(f"bad point identifier {name!r}")
    return name


def build_space(monoid: Monoid, points, entries) -> Space:
    """Assemble a space from an unordered-pair distance map.

    ``entries`` maps frozenset-like pairs (any 2-iterable of names) to
    carrier values; every unordered pair of distinct points must appear
    exactly once.  Distance values are carrier-checked but the metric laws
    are not enforced here; run ``validate_space`` for that.
    """
    pts = tuple(_check_name(p) for p in points)
    if len(set(pts)) != len(pts):
        raise StructuralError("duplicate point identifiers")
    index = {p: i for i, p in enumerate(pts)}
    n = len(pts)
    rows = [[monoid.zero] * n for _ in range(n)]
    seen = set()
    for key, value in entries.items():
        x, y = key
        if x not in index or y not in index:
            raise DomainError(f"distance entry names unknown point in ({x}, {y})")
        i, j = index[x], index[y]
        if i == j:
            raise StructuralError(f"self-distance entry for {x!r}")
        pair = (min(i, j), max(i, j))
        if pair in seen:
            raise StructuralError(f"duplicate distance entry for ({x}, {y})")
        seen.add(pair)
        monoid.require(value)
        rows[i][j] = value
        rows[j][i] = value
    expected = n * (n - 1) // 2
    if len(seen) != expected:
        raise StructuralError(f"expected {expected} distance entries, got {len(seen)}")
    return Space(monoid, pts, tuple(tuple(row) for row in rows))


def parse_dms(text: str) -> Space:
    """Parse the line format documented on this module."""
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise StructuralError("empty space description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "monoid":
        raise StructuralError("first line must be 'monoid <designator>'")
    monoid = monoid_from_designator(head[1])
    if len(lines) < 2:
        raise StructuralError("missing points line")
    plist = lines[1].split()
    if not plist or plist[0] != "points":
        raise StructuralError("second line must be 'points <p1> <p2> ...'")
    points = plist[1:]
    if not points:
        raise StructuralError("space must have at least one point")
    entries = {}
    for body in lines[2:]:
        parts = body.split()
        if len(parts) != 4 or parts[0] != "d":
            raise StructuralError(f"bad distance line {body!r}")
        _, x, y, value = parts
        key = (x, y)
        if (x, y) in entries or (y, x) in entries:
            raise StructuralError(f"duplicate distance entry for ({x}, {y})")
        entries[key] = monoid.parse(value)
    return build_space(monoid, points, entries)


def validate_space(space: Space) -> ValidationReport:
    """Check the extended-metric laws; witnesses name points."""
    m = space.monoid
    n = len(space.points)
    dist = space.dist
    checks: list[CheckResult] = []

    def witness_names(idxs) -> tuple[str, ...]:
        return tuple(space.points[i] for i in idxs)

    carrier = None
    for i in range(n):
        for j in range(n):
            if not m.contains(dist[i][j]):
                carrier = (i, j)
                break
        if carrier:
            break
    checks.append(CheckResult("carrier", carrier is None,
                              witness_names(carrier) if carrier else None))

    diag = next(((i,) for i in range(n) if dist[i][i] != m.zero), None)
    checks.append(CheckResult("zero-diagonal", diag is None,
                              witness_names(diag) if diag else None))

    sym = next(((i, j) for i in range(n) for j in range(i + 1, n)
                if dist[i][j] != dist[j][i]), None)
    checks.append(CheckResult("symmetry", sym is None,
                              witness_names(sym) if sym else None))

    pos = next(((i, j) for i in range(n) for j in range(i + 1, n)
                if dist[i][j] == m.zero), None)
    checks.append(CheckResult("positivity", pos is None,
                              witness_names(pos) if pos else None))

    tri = None
    add = m.add
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            dij = dist[i][j]
            for k in range(n):
                if k == i or k == j:
                    continue
                if not dist[i][k] <= add(dij, dist[j][k]):
                    tri = (i, j, k)
                    break
            if tri:
                break
        if tri:
            break
    checks.append(CheckResult("triangle", tri is None,
                              witness_names(tri) if tri else None))
    return ValidationReport(subject=f"space on {n} points", checks=checks)


def _subset_indices(space: Space, names) -> tuple[int, ...]:
    idxs = tuple(space.point_index(n) for n in names)
    if len(set(idxs)) != len(idxs):
        raise DomainError("duplicate points in subset")
    return idxs


def dist_to_set(space: Space, a: str, base) -> object:
    """Distance from a point to a finite set: the minimum over members.

    The empty set sits at the monoid's top (infinity when present), so
    "finite distance to the base" silently fails for an empty base only
    when the monoid lacks an infinity.
    """
    i = space.point_index(a)
    idxs = _subset_indices(space, base)
    if not idxs:
        return space.monoid.top
    row = space.dist[i]
    return min(row[j] for j in idxs)


def d_max(space: Space, a: str, b: str, base) -> object:
    """Largest distance between a and b consistent with their base distances.

    This is the free-amalgamation value: the infimum of d(a,c) (+) d(c,b)
    over c in the base, and the monoid top when the base is empty.
    """
    i = space.point_index(a)
    j = space.point_index(b)
    idxs = _subset_indices(space, base)
    m = space.monoid
    if not idxs:
        return m.top
    add = m.add
    di = space.dist[i]
    dj = space.dist[j]
    return min(add(di[c], dj[c]) for c in idxs)


def isometric_over(space: Space, left, right, base) -> bool:
    """Whether two point tuples realize the same distances, fixing the base.

    Checks all within-tuple pairs and all tuple-to-base pairs under the
    correspondence left[i] -> right[i].
    """
    li = _subset_indices(space, left)
    ri = _subset_indices(space, right)
    if len(li) != len(ri):
        raise DomainError("tuples must have equal length")
    bi = _subset_indices(space, base)
    dist = space.dist
    for s in range(len(li)):
        for t in range(s + 1, len(li)):
            if dist[li[s]][li[t]] != dist[ri[s]][ri[t]]:
                return False
        row_l = dist[li[s]]
        row_r = dist[ri[s]]
        for c in bi:
            if row_l[c] != row_r[c]:
                return False
    return True


def free_amalgam(left: Space, right: Space, common) -> Space:
    """Glue two spaces along a shared subspace at maximal cross distances.

    The common part must be non-empty, carried by both spaces with equal
    distances, and the remaining identifiers must not collide.  Cross
    distances are the largest values the triangle law allows.
    """
    if left.monoid != right.monoid:
        raise DomainError("amalgamation requires a shared monoid")
    m = left.monoid
    common = tuple(common)
    if not common:
        raise PreconditionError("amalgamation base must be non-empty")
    ci_left = _subset_indices(left, common)
    ci_right = _subset_indices(right, common)
    for s in range(len(common)):
        for t in range(s + 1, len(common)):
            if left.dist[ci_left[s]][ci_left[t]] != right.dist[ci_right[s]][ci_right[t]]:
                raise DomainError(
                    f"common part distances disagree on ({common[s]}, {common[t]})")
    common_set = set(common)
    overlap = (set(left.points) & set(right.points)) - common_set
    if overlap:
        raise DomainError(f"identifiers outside the common part collide: {sorted(overlap)}")

    fresh = [p for p in right.points if p not in common_set]
    points = left.points + tuple(fresh)
    nl = len(left.points)
    n = nl + len(fresh)
    rows = [[m.zero] * n for _ in range(n)]
    for i in range(nl):
        row = rows[i]
        for j in range(nl):
            row[j] = left.dist[i][j]
    ri = [right.point_index(p) for p in fresh]
    for s in range(len(fresh)):
        for t in range(s + 1, len(fresh)):
            v = right.dist[ri[s]][ri[t]]
            rows[nl + s][nl + t] = v
            rows[nl + t][nl + s] = v
    add = m.add
    for s in range(len(fresh)):
        row_r = right.dist[ri[s]]
        for i in range(nl):
            if left.points[i] in common_set:
                v = row_r[right.point_index(left.points[i])]
            else:
                # free amalgamation: largest consistent value over the base
                row_l = left.dist[i]
                v = min(add(row_l[ci_left[t]], row_r[ci_right[t]])
                        for t in range(len(common)))
            rows[i][nl + s] = v
            rows[nl + s][i] = v
    return Space(m, points, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class OnePointSpec:
    """Proposed distances from one new point to every existing point."""

    name: str
    distances: dict[str, object] = field(default_factory=dict)


def one_point_extend(space: Space, spec: OnePointSpec) -> Space:
    """Adjoin one point with prescribed distances to all existing points.

    The proposed distances must be positive carrier values and satisfy both
    triangle directions against the existing matrix; a violation is
    rejected with the offending pair (in point order) as witness.
    """
    m = space.monoid
    name = _check_name(spec.name)
    if name in space:
        raise DomainError(f"point {name!r} already exists")
    missing = [p for p in space.points if p not in spec.distances]
    extra = [p for p in spec.distances if p not in space]
    if missing or extra:
        raise StructuralError(
            f"distances must cover existing points exactly (missing {missing}, extra {extra})")
    prop = [m.require(spec.distances[p]) for p in space.points]
    for v, p in zip(prop, space.points):
        if v == m.zero:
            raise DomainError(f"proposed distance to {p!r} must be positive")
    n = len(space.points)
    add = m.add
    for i in range(n):
        for j in range(i + 1, n):
            dij = space.dist[i][j]
            if not (prop[i] <= add(prop[j], dij) and prop[j] <= add(prop[i], dij)):
                raise PreconditionError(
                    "proposed distances violate the triangle law",
                    witness=(space.points[i], space.points[j]))
    rows = [list(row) + [prop[i]] for i, row in enumerate(space.dist)]
    rows.append(prop + [m.zero])
    return Space(m, space.points + (name,), tuple(tuple(row) for row in rows))


def disjoint_union_at_infinity(left: Space, right: Space) -> Space:
    """Place two spaces side by side with all cross distances infinite."""
    if left.monoid != right.monoid:
        raise DomainError("union requires a shared monoid")
    m = left.monoid
    if m.infinity is None:
        raise UnsupportedOperationError(
            f"monoid {m.designator} has no infinity; spaces cannot be split")
    overlap = set(left.points) & set(right.points)
    if overlap:
        raise DomainError(f"identifiers collide: {sorted(overlap)}")
    inf = m.infinity
    nl, nr = len(left.points), len(right.points)
    rows = []
    for i in range(nl):
        rows.append(list(left.dist[i]) + [inf] * nr)
    for j in range(nr):
        rows.append([inf] * nl + list(right.dist[j]))
    return Space(m, left.points + right.points, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class RandomSpaceParams:
    """Knobs for the random space sampler.

    ``max_finite`` caps sampled finite distances (a carrier value; defaults
    to 8 clamped to the carrier).  ``max_components`` bounds how many
    infinite-distance components the sampler may create when the monoid has
    an infinity.
    """

    max_finite: object | None = None
    max_components: int = 3


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"p{i + 1}" for i in range(n))


def _default_max_finite(m: Monoid):
    try:
        return m.parse("8")
    except DomainError:
        # finite carrier smaller than 8: fall back to its largest element
        return m.top


def random_space(monoid: Monoid, n: int, params: RandomSpaceParams | None = None,
                 seed: int = 0) -> Space:
    """Sample a valid n-point space, deterministically in the seed.

    Points are first split into metric components (when the monoid has an
    infinity); within a component each new point is placed by sampling a
    distance to every earlier point from the interval the triangle law
    leaves open, tightest constraint first.
    """
    if n < 1:
        raise DomainError("space size must be at least 1")
    params = params or RandomSpaceParams()
    if params.max_components < 1:
        raise DomainError("max_components must be at least 1")
    m = monoid
    max_finite = params.max_finite
    if max_finite is None:
        max_finite = _default_max_finite(m)
    m.require(max_finite)
    if n > 1:
        if m.infinity is not None and max_finite == m.infinity:
            raise DomainError("max_finite must be a finite carrier value")
        if max_finite == m.zero:
            raise DomainError("max_finite must be positive")

    rng = random.Random(seed)
    names = _default_names(n)
    if m.infinity is not None and params.max_components > 1 and n > 1:
        k = rng.randint(1, min(params.max_components, n))
        comp = [rng.randrange(k) for _ in range(n)]
    else:
        comp = [0] * n

    inf = m.infinity
    add = m.add
    least_factor = m.least_factor
    sample = m.sample_between
    lp = m.least_positive
    rows = [[m.zero] * n for _ in range(n)]
    for j in range(1, n):
        cj = comp[j]
        row_j = rows[j]
        placed = []
        for i in range(j):
            if comp[i] != cj:
                row_j[i] = inf
                rows[i][j] = inf
                continue
            lo = lp
            hi = None
            for q in placed:
                a = row_j[q]
                b = rows[q][i]
                s = add(a, b)
                if hi is None or s < hi:
                    hi = s
                f = least_factor(a, b)
                if f > lo:
                    lo = f
                f = least_factor(b, a)
                if f > lo:
                    lo = f
            if hi is None or hi > max_finite:
                hi = max_finite
            if hi < lo:
                hi = lo
            v = sample(rng, lo, hi)
            row_j[i] = v
            rows[i][j] = v
            placed.append(i)
    return Space(m, names, tuple(tuple(row) for row in rows))
