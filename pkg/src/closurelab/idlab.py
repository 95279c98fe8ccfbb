"""Enumeration of closure operators and equation testing over model
families.

Closure operators on a ground set correspond to their fixed-point
families: collections of subsets containing the ground set and closed
under intersection.  Enumerating families is exponentially cheaper
than filtering all functions, and converting a family back to a table
is the smallest-enclosing-member map.  The counts are cross-checked in
the tests against a brute-force filter over every function at tiny
sizes.

Equations between words are tested over scopes: exhaustive pair
enumerations at small ground sizes, seeded random samples beyond, or
explicit fixture lists.  The outcome is always a certificate that
names its evidence; "holds" never claims more than the scope it names,
because the underlying membership problem (which equations are valid
for every commuting closure pair) is open.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .models import ClosurePairModel
from .opalg import (
    OperatorTable,
    closure_from_fixed_points,
    commutes,
    complement_table,
    elements_of,
    eval_word,
    eval_word_on,
)
from . import monoid as monoid_mod
from .words import BLOCK_CHOICES, theorem2_word

DEFAULT_SEED = 20250816

#: the six classic two-closure collapse identities, each equivalent to
#: the short word pqcpq over commuting closure pairs
FIXTURE_EQUATIONS = (
    ("pqcpcqcqcpcpq", "pqcpq"),
    ("pqcpcpcqcqcpq", "pqcpq"),
    ("pqcqcqcpcpcpcqcpq", "pqcpq"),
    ("pqcqcpcpcpcqcpqcpq", "pqcpq"),
    ("pqcqcqcpcqcqcpcqcqcpq", "pqcpq"),
    ("pqcpcpcqcpcpcqcpcpcpq", "pqcpq"),
)

ENUMERATION_CAP = 4
PAIR_ENUMERATION_CAP = 3
SAMPLING_CAP = 12


@lru_cache(maxsize=None)
def _moore_family_masks(n: int) -> tuple[int, ...]:
    # A family is a bitmask over the 2^n subset masks: bit s set iff
    # subset s belongs.  Intersection-closure is a pairwise screen.
    size = 1 << n
    fams = np.arange(1 << size, dtype=np.int64)
    ok = ((fams >> (size - 1)) & 1).astype(bool)  # must contain the full set
    for a in range(size):
        for b in range(a + 1, size):
            meet = a & b
            if meet == a or meet == b:
                continue
            bad = ((fams >> a) & (fams >> b) & ~(fams >> meet) & 1).astype(bool)
            ok &= ~bad
    return tuple(int(f) for f in fams[ok])


@lru_cache(maxsize=None)
def _closures(n: int) -> tuple[OperatorTable, ...]:
    if not 0 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"exhaustive closure enumeration supports n <= {ENUMERATION_CAP}"
        )
    size = 1 << n
    tables = [
        closure_from_fixed_points(n, [s for s in range(size) if (fam >> s) & 1])
        for fam in _moore_family_masks(n)
    ]
    tables.sort(key=lambda t: t.entries.tolist())
    return tuple(tables)


def enumerate_closures(n: int) -> list[OperatorTable]:
    """Every closure operator at ground size n, exactly once, ordered
    lexicographically by entry array.  n <= 4."""
    return list(_closures(n))


@lru_cache(maxsize=None)
def _commuting_index_pairs(n: int) -> tuple[tuple[int, int], ...]:
    closures = _closures(n)
    out = []
    for i, p in enumerate(closures):
        for j, q in enumerate(closures):
            if commutes(p, q):
                out.append((i, j))
    return tuple(out)


def _pair_model(n: int, i: int, j: int, commuting: bool) -> ClosurePairModel:
    closures = _closures(n)
    return ClosurePairModel(
        provenance="enumerated",
        p=closures[i],
        q=closures[j],
        label=f"n={n} p#{i} q#{j}",
        commuting=commuting,
    )


def enumerate_commuting_pairs(n: int) -> list[ClosurePairModel]:
    """All ordered pairs (p, q) of enumerated closures at ground size n
    that commute, in canonical (p index, q index) order.  n <= 3."""
    if not 0 <= n <= PAIR_ENUMERATION_CAP:
        raise ValueError(
            f"exhaustive pair enumeration supports n <= {PAIR_ENUMERATION_CAP}"
        )
    return [_pair_model(n, i, j, True) for i, j in _commuting_index_pairs(n)]


def enumerate_all_pairs(n: int) -> list[ClosurePairModel]:
    """All ordered closure pairs at ground size n, commuting or not."""
    if not 0 <= n <= PAIR_ENUMERATION_CAP:
        raise ValueError(
            f"exhaustive pair enumeration supports n <= {PAIR_ENUMERATION_CAP}"
        )
    closures = _closures(n)
    commuting = set(_commuting_index_pairs(n))
    return [
        _pair_model(n, i, j, (i, j) in commuting)
        for i in range(len(closures))
        for j in range(len(closures))
    ]


def sample_commuting_pair(n: int, seed: int, max_tries: int = 2000) -> ClosurePairModel:
    """Seeded rejection sampler for a commuting closure pair.

    Each candidate closure comes from a random subset collection plus
    the ground set, intersection-closed by construction of the
    smallest-enclosing-member table.  Every closure at the given n has
    positive probability, so long seed sweeps cover the whole space.
    """
    if not 0 <= n <= SAMPLING_CAP:
        raise ValueError(f"sampling supports n <= {SAMPLING_CAP}")
    rng = random.Random(seed)
    size = 1 << n

    def random_closure() -> OperatorTable:
        count = rng.randint(0, min(size, 16))
        members = [rng.randrange(size) for _ in range(count)]
        members.append(size - 1)
        return closure_from_fixed_points(n, members)

    for _ in range(max_tries):
        p = random_closure()
        q = random_closure()
        if commutes(p, q):
            return ClosurePairModel(
                provenance="custom",
                p=p,
                q=q,
                label=f"sampled n={n} seed={seed}",
                commuting=True,
            )
    raise RuntimeError(f"no commuting pair found in {max_tries} tries (seed {seed})")


# ---------------------------------------------------------------------------
# scopes


@dataclass(frozen=True)
class Scope:
    """A named, replayable stream of models."""

    description: str
    _source: Callable[[], Iterator[ClosurePairModel]]

    def models(self) -> Iterator[ClosurePairModel]:
        return self._source()

    @staticmethod
    def exhaustive(max_n: int, commuting: bool = True) -> "Scope":
        kind = "commuting" if commuting else "all"

        def source():
            for n in range(max_n + 1):
                pairs = (
                    enumerate_commuting_pairs(n) if commuting else enumerate_all_pairs(n)
                )
                yield from pairs

        return Scope(f"exhaustive-{kind}-n<={max_n}", source)

    @staticmethod
    def exhaustive_at(n: int, commuting: bool = True) -> "Scope":
        kind = "commuting" if commuting else "all"

        def source():
            yield from (
                enumerate_commuting_pairs(n) if commuting else enumerate_all_pairs(n)
            )

        return Scope(f"exhaustive-{kind}-n={n}", source)

    @staticmethod
    def sampled(n: int, count: int, seed: int = DEFAULT_SEED) -> "Scope":
        def source():
            for i in range(count):
                yield sample_commuting_pair(n, seed + i)

        return Scope(f"sampled(n={n},count={count},seed={seed})", source)

    @staticmethod
    def fixtures(models: Iterable[ClosurePairModel], label: str = "fixtures") -> "Scope":
        models = list(models)

        def source():
            yield from models

        return Scope(f"fixtures({label})", source)

    def __add__(self, other: "Scope") -> "Scope":
        def source():
            yield from self.models()
            yield from other.models()

        return Scope(f"{self.description} + {other.description}", source)


# ---------------------------------------------------------------------------
# equation certificates


@dataclass
class EquationCertificate:
    lhs: str
    rhs: str
    scope: str
    status: str  # "holds" | "counterexample"
    model: Optional[ClosurePairModel] = None
    witness: Optional[int] = None
    models_checked: int = 0

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def summary(self) -> str:
        if self.holds:
            return f"no counterexample found ({self.scope})"
        return (
            f"refuted: {self.lhs} != {self.rhs} on {self.model.label or self.model.provenance}"
            f" at {sorted(elements_of(self.witness))}"
        )

    def to_json(self) -> dict:
        out = {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "scope": self.scope,
            "status": self.status,
            "models_checked": self.models_checked,
            "counterexample": None,
        }
        if not self.holds:
            out["counterexample"] = {
                "model": self.model.to_json(),
                "witness": elements_of(self.witness),
            }
        return out


def test_equation(lhs, rhs, family: Scope) -> EquationCertificate:
    """Evaluate both words on every model in the family; stop at the
    first disagreement.  The witness is the smallest differing subset
    (mask order) on the first refuting model in scope order."""
    lhs, rhs = str(lhs), str(rhs)
    checked = 0
    for model in family.models():
        checked += 1
        t1 = eval_word(lhs, model.p, model.q)
        t2 = eval_word(rhs, model.p, model.q)
        diff = np.flatnonzero(t1.entries != t2.entries)
        if diff.size:
            return EquationCertificate(
                lhs, rhs, family.description, "counterexample",
                model=model, witness=int(diff[0]), models_checked=checked,
            )
    return EquationCertificate(
        lhs, rhs, family.description, "holds", models_checked=checked
    )


def replay_certificate(cert: EquationCertificate, family: Optional[Scope] = None,
                       sample: int = 10) -> bool:
    """Re-check what a certificate asserts.

    counterexample: the witness subset must still separate the words on
    the stored model.  holds: re-evaluate on up to sample models of the
    (re-supplied) family and expect agreement.
    """
    if not cert.holds:
        a = eval_word_on(cert.lhs, cert.model.p, cert.model.q, cert.witness)
        b = eval_word_on(cert.rhs, cert.model.p, cert.model.q, cert.witness)
        return a != b
    if family is None:
        return True
    for i, model in enumerate(family.models()):
        if i >= sample:
            break
        if eval_word(cert.lhs, model.p, model.q) != eval_word(
            cert.rhs, model.p, model.q
        ):
            return False
    return True


def test_theorem2_family(n_max: int, family: Scope) -> list[EquationCertificate]:
    """Certificates for the whole collapse family up to n_max inner
    block pairs: every tuple in {p,q,pq}^(2n) for n = 1..n_max against
    the short form pqcpq."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    certs = []
    for n in range(1, n_max + 1):
        for tup in product(BLOCK_CHOICES, repeat=2 * n):
            w = theorem2_word(tup)
            certs.append(test_equation(w, "pqcpq", family))
    return certs


def sigma_probe(equations, samples: int = 25, seed: int = DEFAULT_SEED):
    """Batch-test formal equations over the standard evidence scope:
    exhaustive commuting pairs at n <= 3 plus seeded samples at n = 4
    and n = 5.  Purely empirical; a "holds" outcome means no
    counterexample found in scope, nothing more."""
    scope = (
        Scope.exhaustive(3, commuting=True)
        + Scope.sampled(4, samples, seed)
        + Scope.sampled(5, samples, seed + 1000)
    )
    return [test_equation(lhs, rhs, scope) for lhs, rhs in equations]


# ---------------------------------------------------------------------------
# identity search over reduced words


def _reduced_successors(word: str):
    last = word[-1] if word else ""
    for ch in "cpq":
        if ch != last:
            yield ch


def search_identities(maxlen: int, n: int = 2, limit: Optional[int] = None):
    """Shortlex survey of reduced words (no cc, pp, qq factor), bucketed
    by their joint evaluation over every commuting pair at sizes <= n.

    The first word reaching a bucket is its canonical representative;
    every later arrival yields the equation "word = canonical", which
    holds across the whole exhaustive scope by construction.  Returns
    (equations, scope description, words examined).
    """
    if maxlen < 0:
        raise ValueError("maxlen must be nonnegative")
    models = []
    for size in range(n + 1):
        models.extend(enumerate_commuting_pairs(size))
    scope_desc = f"exhaustive-commuting-n<={n}"

    def state_of(tables) -> bytes:
        return b"".join(t.tobytes() for t in tables)

    start_tables = tuple(
        np.arange(1 << m.ground_size, dtype=np.int64) for m in models
    )
    letter_tables = [
        {
            "c": complement_table(m.ground_size).entries,
            "p": m.p.entries,
            "q": m.q.entries,
        }
        for m in models
    ]

    canon: dict[bytes, str] = {}
    equations: list[tuple[str, str]] = []
    examined = 0

    frontier = [("", start_tables)]
    canon[state_of(start_tables)] = ""
    examined += 1

    for _ in range(maxlen):
        new_frontier = []
        for word, tabs in frontier:
            for ch in _reduced_successors(word):
                # appending a letter on the right applies it first
                new_tabs = tuple(
                    t[lt[ch]] for t, lt in zip(tabs, letter_tables)
                )
                new_word = word + ch
                examined += 1
                key = state_of(new_tabs)
                seen = canon.get(key)
                if seen is None:
                    canon[key] = new_word
                else:
                    equations.append((new_word, seen))
                new_frontier.append((new_word, new_tabs))
        frontier = new_frontier

    if limit is not None:
        equations = equations[:limit]
    return equations, scope_desc, examined


def search_counterexample(lhs, rhs, max_n: int = 2,
                          commuting: bool = False) -> EquationCertificate:
    """Hunt for a model refuting lhs = rhs over the exhaustive pair
    enumeration (all pairs by default, so commutation failures are in
    scope)."""
    return test_equation(lhs, rhs, Scope.exhaustive(max_n, commuting=commuting))


# ---------------------------------------------------------------------------
# regeneration search for the pinned 14-element witness


WITNESS_SEARCH_BASE = 777000


def _witness_from(k: OperatorTable, n: int):
    c = complement_table(n)
    mon = monoid_mod.generate_monoid([k, c], names=("k", "c"))
    if len(mon) != 14:
        return None
    for seed in range(1 << n):
        if len({e.apply(seed) for e in mon.elements}) == 14:
            fixed = tuple(m for m in range(1 << n) if k.apply(m) == m)
            return n, fixed, seed
    return None


def find_kuratowski_witness(max_n: int = 8, trials: int = 30000):
    """Search for a closure whose monoid with complement has exactly 14
    elements together with a seed subset taking 14 pairwise distinct
    images, smallest ground size first.

    Ground sizes up to 4 are swept exhaustively in canonical order;
    monoid size 14 already occurs there, but no seed separates all 14
    operators.  Beyond that the canonical enumeration is out of reach,
    so the search walks seeded random fixed-point families, which makes
    the first hit reproducible.  Returns (n, fixed point masks, seed).
    This is the regeneration path for the pinned fixture in the models
    module.
    """
    for n in range(1, max_n + 1):
        if n <= ENUMERATION_CAP:
            for k in _closures(n):
                hit = _witness_from(k, n)
                if hit:
                    return hit
            continue
        size = 1 << n
        for trial in range(trials):
            rng = random.Random(WITNESS_SEARCH_BASE + trial)
            count = rng.randint(1, min(size, 3 * n))
            members = [rng.randrange(size) for _ in range(count)]
            members.append(size - 1)
            hit = _witness_from(closure_from_fixed_points(n, members), n)
            if hit:
                return hit
    raise RuntimeError(f"no separating 14-element witness found at n <= {max_n}")
