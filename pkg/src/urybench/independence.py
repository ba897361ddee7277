"""Ternary independence relations on finite extended-metric spaces.

Two relations are implemented, both evaluated on a configuration
(ambient space, subsets A, B, C):

* ``alg``    set-theoretic independence: A and B meet only inside C.
* ``infty``  metric independence: for every a in A, touching B forces
             touching C (d(a,B)=0 implies d(a,C)=0), and infinite distance
             to C forces infinite distance to B.  Needs a monoid with
             infinity, since the empty set sits at distance infinity.

``infty`` implies ``alg`` on every configuration, and the 2-point space
with one finite distance separates them (``counterexample_cor35``): with
empty base, the single cross pair is alg-independent but not
infty-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PreconditionError, UnsupportedOperationError
from .monoid import Monoid
from .space import Space, build_space

RELATION_IDS = ("alg", "infty")


def _subset(space: Space, names) -> tuple[int, ...]:
    idxs = tuple(space.point_index(n) for n in names)
    if len(set(idxs)) != len(idxs):
        raise DomainError("duplicate points in subset")
    return idxs


@dataclass(frozen=True)
class Config:
    """Ambient space with subsets A, B, C and an optional chain subset D.

    When D is given the chain shape D <= C <= B (as sets) is enforced; the
    chain-style axioms (base monotonicity, transitivity) evaluate their
    hypotheses on it.
    """

    ambient: Space
    a: tuple[str, ...]
    b: tuple[str, ...]
    c: tuple[str, ...]
    d: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        object.__setattr__(self, "a_idx", _subset(self.ambient, self.a))
        object.__setattr__(self, "b_idx", _subset(self.ambient, self.b))
        object.__setattr__(self, "c_idx", _subset(self.ambient, self.c))
        if self.d is not None:
            object.__setattr__(self, "d", tuple(self.d))
            object.__setattr__(self, "d_idx", _subset(self.ambient, self.d))
            if not set(self.d_idx) <= set(self.c_idx) <= set(self.b_idx):
                raise DomainError("chain subsets must satisfy D <= C <= B")
        else:
            object.__setattr__(self, "d_idx", None)

    def serialize(self) -> str:
        lines = [self.ambient.serialize().rstrip("\n")]
        for label, names in (("A", self.a), ("B", self.b), ("C", self.c)):
            lines.append((label + " " + " ".join(names)).rstrip())
        if self.d is not None:
            lines.append(("D " + " ".join(self.d)).rstrip())
        return "\n".join(lines) + "\n"


def parse_config(text: str) -> Config:
    """Inverse of Config.serialize."""
    from .space import parse_dms

    space_lines = []
    subset_lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.split()[0] in ("A", "B", "C", "D"):
            subset_lines.append(body)
        else:
            space_lines.append(body)
    space = parse_dms("\n".join(space_lines))
    subsets: dict[str, tuple[str, ...]] = {}
    for body in subset_lines:
        parts = body.split()
        if parts[0] in subsets:
            raise DomainError(f"duplicate subset line {parts[0]}")
        subsets[parts[0]] = tuple(parts[1:])
    missing = [k for k in ("A", "B", "C") if k not in subsets]
    if missing:
        raise DomainError(f"missing subset lines: {missing}")
    return Config(space, subsets["A"], subsets["B"], subsets["C"], subsets.get("D"))


# -- verdict kernels (index tuples, no validation) ---------------------------


def _verdict_alg(space: Space, a_idx, b_idx, c_idx) -> bool:
    b_set = set(b_idx)
    c_set = set(c_idx)
    return all(i in c_set for i in a_idx if i in b_set)


def _verdict_infty(space: Space, a_idx, b_idx, c_idx) -> bool:
    dist = space.dist
    m = space.monoid
    zero = m.zero
    inf = m.infinity
    for i in a_idx:
        row = dist[i]
        db = min((row[j] for j in b_idx), default=inf)
        dc = min((row[j] for j in c_idx), default=inf)
        if db == zero and dc != zero:
            return False
        if dc == inf and db != inf:
            return False
    return True


@dataclass(frozen=True)
class Relation:
    """A pluggable ternary relation: verdict kernel plus witness builders."""

    rel_id: str
    requires_infinity: bool
    verdict: object      # (space, a_idx, b_idx, c_idx) -> bool
    local_base: object   # (space, a_idx, b_idx) -> tuple of indices


def _local_base_alg(space: Space, a_idx, b_idx) -> tuple[int, ...]:
    b_set = set(b_idx)
    return tuple(i for i in sorted(set(a_idx)) if i in b_set)


def _local_base_infty(space: Space, a_idx, b_idx) -> tuple[int, ...]:
    # nearest point of B per point of A, first index winning ties
    if not b_idx:
        return ()
    dist = space.dist
    chosen = set()
    for i in a_idx:
        row = dist[i]
        best = None
        best_d = None
        for j in sorted(b_idx):
            if best_d is None or row[j] < best_d:
                best = j
                best_d = row[j]
        chosen.add(best)
    return tuple(sorted(chosen))


ALG = Relation("alg", False, _verdict_alg, _local_base_alg)
INFTY = Relation("infty", True, _verdict_infty, _local_base_infty)
_RELATIONS = {"alg": ALG, "infty": INFTY}


def get_relation(rel_id: str, monoid: Monoid | None = None) -> Relation:
    if isinstance(rel_id, Relation):
        rel = rel_id
    else:
        try:
            rel = _RELATIONS[rel_id]
        except KeyError:
            raise DomainError(f"unknown relation {rel_id!r}; expected one of "
                              f"{RELATION_IDS}") from None
    if rel.requires_infinity and monoid is not None and monoid.infinity is None:
        raise UnsupportedOperationError(
            f"relation {rel.rel_id!r} needs a monoid with infinity; "
            f"{monoid.designator} has none")
    return rel


def indep(cfg: Config, rel_id: str) -> bool:
    rel = get_relation(rel_id, cfg.ambient.monoid)
    return rel.verdict(cfg.ambient, cfg.a_idx, cfg.b_idx, cfg.c_idx)


def indep_a(cfg: Config) -> bool:
    """A and B intersect inside C."""
    return _verdict_alg(cfg.ambient, cfg.a_idx, cfg.b_idx, cfg.c_idx)


def indep_infty(cfg: Config) -> bool:
    """Metric independence of A from B over C; see the module docstring."""
    get_relation("infty", cfg.ambient.monoid)
    return _verdict_infty(cfg.ambient, cfg.a_idx, cfg.b_idx, cfg.c_idx)


# -- constructive witnesses ---------------------------------------------------


def _free_extension(space: Space, a_idx, base_idx):
    """Place copies of the points ``a_idx`` freely over ``base_idx``.

    Each copy keeps its distances to the base and to its fellow copies; every
    other distance is the largest value the triangle law allows over the base
    (the monoid top when the base is empty).  Points already in the base are
    reused rather than copied.  Returns the extended space and the copy names
    aligned with ``a_idx``.
    """
    m = space.monoid
    n = len(space.points)
    base_set = set(base_idx)
    used = set(space.points)
    copy_names: list[str] = []
    fresh: list[tuple[int, str]] = []
    for a in a_idx:
        if a in base_set:
            copy_names.append(space.points[a])
            continue
        cand = space.points[a] + "'"
        while cand in used:
            cand += "'"
        used.add(cand)
        copy_names.append(cand)
        fresh.append((a, cand))
    if not fresh:
        return space, tuple(copy_names)

    dist = space.dist
    add = m.add
    top = m.top
    cols = []
    for a, _ in fresh:
        row_a = dist[a]
        col = []
        for x in range(n):
            if x in base_set:
                col.append(row_a[x])
            else:
                row_x = dist[x]
                v = top
                for c in base_idx:
                    s = add(row_a[c], row_x[c])
                    if s < v:
                        v = s
                col.append(v)
        cols.append(col)
    k = len(fresh)
    rows = [list(dist[i]) + [cols[t][i] for t in range(k)] for i in range(n)]
    for t, (a, _) in enumerate(fresh):
        tail = [dist[a][fresh[s][0]] for s in range(k)]
        rows.append(cols[t] + tail)
    points = space.points + tuple(name for _, name in fresh)
    return Space(m, points, tuple(tuple(r) for r in rows)), tuple(copy_names)


def extension_witness(cfg: Config, bhat) -> tuple[Space, tuple[str, ...]]:
    """Copy A off the enlarged side while fixing B and C.

    Requires ``indep_infty(cfg)`` and B <= Bhat; returns an extended ambient
    containing a copy A' of A that realizes the same distances over B and C
    and is infty-independent from Bhat over C.
    """
    space = cfg.ambient
    bhat_idx = _subset(space, bhat)
    if not set(cfg.b_idx) <= set(bhat_idx):
        raise DomainError("Bhat must contain B")
    m = space.monoid
    get_relation("infty", m)
    dist = space.dist
    zero = m.zero
    inf = m.infinity
    for pos, i in enumerate(cfg.a_idx):
        row = dist[i]
        db = min((row[j] for j in cfg.b_idx), default=inf)
        dc = min((row[j] for j in cfg.c_idx), default=inf)
        if db == zero and dc != zero:
            raise PreconditionError(
                f"not infty-independent: d({cfg.a[pos]},B)=0 but d({cfg.a[pos]},C)>0")
        if dc == inf and db != inf:
            raise PreconditionError(
                f"not infty-independent: d({cfg.a[pos]},C)=inf but d({cfg.a[pos]},B)<inf")
    base = tuple(sorted(set(cfg.b_idx) | set(cfg.c_idx)))
    return _free_extension(space, cfg.a_idx, base)


def local_character_base(rel_id, a, b, space: Space) -> tuple[str, ...]:
    """Small base C <= B over which A is already independent from B.

    For ``infty`` this is the nearest point of B for each point of A (ties to
    the smallest index), so the distances to C and to B agree; for ``alg`` it
    is the intersection of A and B.  At most |A| points either way.
    """
    rel = get_relation(rel_id, space.monoid)
    a_idx = _subset(space, a)
    b_idx = _subset(space, b)
    return tuple(space.points[i] for i in rel.local_base(space, a_idx, b_idx))


def counterexample_cor35(monoid: Monoid):
    """Two points at distance one, over the empty base: alg holds, infty fails.

    Returns ``(config, verdict_alg, verdict_infty)``; the verdicts are always
    ``(True, False)``, exhibiting that the two relations differ.
    """
    get_relation("infty", monoid)
    one = monoid.parse("1")
    space = build_space(monoid, ("a", "b"), {("a", "b"): one})
    cfg = Config(space, ("a",), ("b",), ())
    return cfg, indep_a(cfg), indep_infty(cfg)
