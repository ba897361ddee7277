"""Randomized property-test harness for the nine independence axioms.

Each axiom has a trial strategy: sample an ambient space and subsets from a
per-trial RNG, evaluate the axiom's implication, and report a violation with
the offending configuration when it fails.  Axioms are identified by the
roman numerals i-ix:

    i    invariance          relabeled isometric copy keeps the verdict
    ii   monotonicity        shrinking A and B keeps independence
    iii  base monotonicity   enlarging the base within B keeps independence
    iv   transitivity        independence composes along a chain D <= C <= B
    v    extension           the free copy of A over B u C works for Bhat
    vi   finite character    the verdict equals the conjunction over subsets of A
    vii  local character     a base of size <= |A| inside B suffices
    viii symmetry            independence of A from B gives B from A
    ix   anti-reflexivity    a independent from itself only over a base containing it

Trials are deterministic: trial t of a run with master seed s uses the
64-bit mix of (s, t), reported with each violation so it can be replayed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import DomainError
from .independence import Config, Relation, _free_extension, get_relation
from .monoid import Monoid
from .space import (RandomSpaceParams, Space, disjoint_union_at_infinity,
                    isometric_over, random_space)

AXIOM_IDS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")
AXIOM_NAMES = {
    "i": "invariance",
    "ii": "monotonicity",
    "iii": "base-monotonicity",
    "iv": "transitivity",
    "v": "extension",
    "vi": "finite-character",
    "vii": "local-character",
    "viii": "symmetry",
    "ix": "anti-reflexivity",
}

_MASK = (1 << 64) - 1


def mix_seed(master: int, index: int) -> int:
    """Stable 64-bit mix of the master seed and a trial index."""
    z = ((master & _MASK) + (index + 1) * 0x9E3779B97F4A7C15) & _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


@dataclass(frozen=True)
class Violation:
    trial: int
    seed: int
    config_text: str
    detail: str


@dataclass
class SuiteReport:
    """Result of one (relation, axiom) sweep."""

    relation: str
    axiom: str
    trials: int
    seed: int
    violations: list[Violation] = field(default_factory=list)
    kappa_bound_observed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def line(self) -> str:
        return (f"AXIOM {self.relation} {self.axiom} trials={self.trials} "
                f"violations={len(self.violations)} seed={self.seed}")

    def render(self) -> str:
        parts = [self.line()]
        for v in self.violations:
            parts.append(f"violation trial={v.trial} seed={v.seed} detail={v.detail}")
            parts.append(v.config_text.rstrip("\n"))
            parts.append("end")
        return "\n".join(parts) + "\n"


# -- sampling helpers ---------------------------------------------------------


def _space(m: Monoid, size: int, rng, params) -> Space:
    return random_space(m, size, params, seed=rng.getrandbits(64))


def _pick(rng, n: int, lo: int, hi: int) -> tuple[int, ...]:
    k = rng.randint(lo, min(hi, n))
    return tuple(sorted(rng.sample(range(n), k)))


def _sub(rng, idxs) -> tuple[int, ...]:
    k = rng.randint(0, len(idxs))
    return tuple(sorted(rng.sample(idxs, k)))


def _names(sp: Space, idxs) -> tuple[str, ...]:
    return tuple(sp.points[i] for i in idxs)


def _cfg(sp: Space, a, b, c, d=None) -> Config:
    return Config(sp, _names(sp, a), _names(sp, b), _names(sp, c),
                  None if d is None else _names(sp, d))


# -- per-axiom trials ----------------------------------------------------------
# Each returns (violation, kappa) where violation is None or (Config, detail).


def _trial_invariance(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a, b, c = _pick(rng, size, 1, 3), _pick(rng, size, 0, 4), _pick(rng, size, 0, 3)
    v1 = rel.verdict(sp, a, b, c)
    order = rng.sample(range(size), size)
    copy_points = tuple(f"q{t + 1}" for t in range(size))
    copy_dist = tuple(tuple(sp.dist[i][j] for j in order) for i in order)
    copy = Space(m, copy_points, copy_dist)
    pos = {old: new for new, old in enumerate(order)}
    if m.infinity is not None:
        ambient = disjoint_union_at_infinity(sp, copy)
        off = size
    else:
        ambient = copy
        off = 0
    a2 = tuple(off + pos[i] for i in a)
    b2 = tuple(off + pos[i] for i in b)
    c2 = tuple(off + pos[i] for i in c)
    v2 = rel.verdict(ambient, a2, b2, c2)
    if v1 != v2:
        return (_cfg(sp, a, b, c),
                f"verdict {v1} but relabeled copy gives {v2}"), None
    return None, None


def _trial_monotonicity(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a, b, c = _pick(rng, size, 1, 3), _pick(rng, size, 0, 4), _pick(rng, size, 0, 3)
    if not rel.verdict(sp, a, b, c):
        return None, None
    a0 = _sub(rng, a)
    b0 = _sub(rng, b)
    if not rel.verdict(sp, a0, b0, c):
        return (_cfg(sp, a, b, c),
                f"holds but fails on subsets A'={_names(sp, a0)} B'={_names(sp, b0)}"), None
    return None, None


def _chain(rng, size):
    b = _pick(rng, size, 0, 5)
    c = _sub(rng, b)
    d = _sub(rng, c)
    return b, c, d


def _trial_base_monotonicity(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a = _pick(rng, size, 1, 3)
    b, c, d = _chain(rng, size)
    if rel.verdict(sp, a, b, d) and not rel.verdict(sp, a, b, c):
        return (_cfg(sp, a, b, c, d),
                "independent over D but not over the larger base C"), None
    return None, None


def _trial_transitivity(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a = _pick(rng, size, 1, 3)
    b, c, d = _chain(rng, size)
    if (rel.verdict(sp, a, c, d) and rel.verdict(sp, a, b, c)
            and not rel.verdict(sp, a, b, d)):
        return (_cfg(sp, a, b, c, d),
                "independent from C over D and from B over C, not from B over D"), None
    return None, None


def _trial_extension(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a, b, c = _pick(rng, size, 1, 3), _pick(rng, size, 0, 4), _pick(rng, size, 0, 3)
    if not rel.verdict(sp, a, b, c):
        return None, None
    rest = [i for i in range(size) if i not in set(b)]
    extra = rng.sample(rest, rng.randint(0, min(2, len(rest))))
    bhat = tuple(sorted(set(b) | set(extra)))
    base = tuple(sorted(set(b) | set(c)))
    sp2, copies = _free_extension(sp, a, base)
    a2 = tuple(sp2.point_index(p) for p in copies)
    if not isometric_over(sp2, copies, _names(sp, a), _names(sp, base)):
        return (_cfg(sp, a, b, c), "extension copy is not isometric over B u C"), None
    if not rel.verdict(sp2, a2, bhat, c):
        return (_cfg(sp, a, bhat, c),
                f"extension copy {copies} not independent from Bhat"), None
    return None, None


def _trial_finite_character(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a, b, c = _pick(rng, size, 1, 3), _pick(rng, size, 0, 4), _pick(rng, size, 0, 3)
    v = rel.verdict(sp, a, b, c)
    conj = all(rel.verdict(sp, a0, b, c)
               for k in range(1, len(a) + 1)
               for a0 in itertools.combinations(a, k))
    if v != conj:
        return (_cfg(sp, a, b, c),
                f"verdict {v} but conjunction over subsets of A gives {conj}"), None
    return None, None


def _trial_local_character(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a = _pick(rng, size, 1, 3)
    b = _pick(rng, size, 0, 5)
    base = rel.local_base(sp, a, b)
    kappa = len(base)
    if kappa > len(a):
        return (_cfg(sp, a, b, base), f"base size {kappa} exceeds |A|={len(a)}"), kappa
    if not rel.verdict(sp, a, b, base):
        return (_cfg(sp, a, b, base), "chosen base does not witness independence"), kappa
    return None, kappa


def _trial_symmetry(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a, b, c = _pick(rng, size, 1, 3), _pick(rng, size, 1, 3), _pick(rng, size, 0, 3)
    if rel.verdict(sp, a, b, c) and not rel.verdict(sp, b, a, c):
        return (_cfg(sp, a, b, c), "holds for (A,B) but not for (B,A)"), None
    return None, None


def _trial_anti_reflexivity(rel, m, size, rng, params):
    sp = _space(m, size, rng, params)
    a = (rng.randrange(size),)
    c = _pick(rng, size, 0, 3)
    if rel.verdict(sp, a, a, c) and a[0] not in set(c):
        return (_cfg(sp, a, a, c),
                f"{sp.points[a[0]]} independent from itself over a base not containing it"), None
    return None, None


_TRIALS = {
    "i": _trial_invariance,
    "ii": _trial_monotonicity,
    "iii": _trial_base_monotonicity,
    "iv": _trial_transitivity,
    "v": _trial_extension,
    "vi": _trial_finite_character,
    "vii": _trial_local_character,
    "viii": _trial_symmetry,
    "ix": _trial_anti_reflexivity,
}

# planted fixture: declares everything independent, so anti-reflexivity must fail
CONSTANT_TRUE = Relation("const-true", False,
                         lambda sp, a, b, c: True,
                         lambda sp, a, b: ())


def check_axiom(rel_id, axiom: str, monoid: Monoid, trials: int, size: int,
                seed: int, params: RandomSpaceParams | None = None) -> SuiteReport:
    """Run one axiom's strategy for `trials` seeded trials."""
    rel = get_relation(rel_id, monoid)
    if axiom not in _TRIALS:
        raise DomainError(f"unknown axiom {axiom!r}; expected one of {AXIOM_IDS}")
    if size < 3:
        raise DomainError("ambient size must be at least 3")
    if trials < 1:
        raise DomainError("trial count must be positive")
    params = params or RandomSpaceParams()
    fn = _TRIALS[axiom]
    report = SuiteReport(rel.rel_id, axiom, trials, seed)
    for t in range(trials):
        trial_seed = mix_seed(seed, t)
        violation, kappa = fn(rel, monoid, size, random.Random(trial_seed), params)
        if kappa is not None:
            if report.kappa_bound_observed is None or kappa > report.kappa_bound_observed:
                report.kappa_bound_observed = kappa
        if violation is not None:
            cfg, detail = violation
            report.violations.append(Violation(t, trial_seed, cfg.serialize(), detail))
    return report


def replay_trial(rel_id, axiom: str, monoid: Monoid, size: int, trial_seed: int,
                 params: RandomSpaceParams | None = None):
    """Re-run a single trial from its reported seed.

    Returns None when the trial passes, else ``(config, detail)`` matching
    the original violation.
    """
    rel = get_relation(rel_id, monoid)
    if axiom not in _TRIALS:
        raise DomainError(f"unknown axiom {axiom!r}; expected one of {AXIOM_IDS}")
    params = params or RandomSpaceParams()
    violation, _ = _TRIALS[axiom](rel, monoid, size, random.Random(trial_seed), params)
    return violation


def run_all_axioms(rel_id, monoid: Monoid, trials: int, size: int, seed: int,
                   params: RandomSpaceParams | None = None) -> list[SuiteReport]:
    """One SuiteReport per axiom, in the order i through ix."""
    return [check_axiom(rel_id, axiom, monoid, trials, size, seed, params)
            for axiom in AXIOM_IDS]
