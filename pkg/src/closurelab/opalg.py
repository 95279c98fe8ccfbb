"""Operators on the powerset of a finite ground set, as lookup tables.

Subsets of the ground set {0, ..., n-1} are bitmasks: bit i set means
element i is in the subset.  An operator is a total map from masks to
masks, stored as a numpy array of 2**n entries so that composition is a
single fancy-indexing pass and the operator axioms (expanding,
monotone, idempotent, and their interior duals) reduce to vectorized
screens.

Materialized tables are capped at ground size 20 (2**20 entries).  Two
escape hatches exist for larger ground sets: FnOperator wraps a plain
mask function, and AdditiveOperator represents a union-preserving map
by its images on singletons, which composes exactly without ever
touching the full powerset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

import numpy as np

MAX_GROUND_SIZE = 20

Mask = int


def full_mask(n: int) -> Mask:
    """Bitmask of the whole ground set {0, ..., n-1}."""
    _check_ground_size(n)
    return (1 << n) - 1


def mask_of(elements: Iterable[int], n: int) -> Mask:
    """Bitmask of the given elements, validated against ground size n."""
    m = 0
    for e in elements:
        if not 0 <= e < n:
            raise ValueError(f"element {e} outside ground set of size {n}")
        m |= 1 << e
    return m


def elements_of(mask: Mask) -> list[int]:
    """Sorted list of elements in a bitmask."""
    if mask < 0:
        raise ValueError("negative mask")
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def _check_ground_size(n: int) -> None:
    if not 0 <= n <= MAX_GROUND_SIZE:
        raise ValueError(
            f"ground size {n} outside supported range 0..{MAX_GROUND_SIZE}"
        )


class OperatorTable:
    """A powerset operator materialized as a table of 2**n masks.

    entries[a] is the image of subset a.  The array is immutable;
    compose() and the word evaluators build new tables via indexing.
    """

    __slots__ = ("ground_size", "entries")

    def __init__(self, ground_size: int, entries, _validate: bool = True):
        _check_ground_size(ground_size)
        arr = np.asarray(entries, dtype=np.int64)
        if _validate:
            size = 1 << ground_size
            if arr.shape != (size,):
                raise ValueError(
                    f"table for ground size {ground_size} needs {size} entries,"
                    f" got shape {arr.shape}"
                )
            if arr.size and (int(arr.min()) < 0 or int(arr.max()) >= size):
                raise ValueError("table entry outside the powerset")
        arr = arr.copy() if arr.base is not None or arr.flags.writeable else arr
        arr.setflags(write=False)
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorTable is immutable")

    def apply(self, a: Mask) -> Mask:
        return int(self.entries[a])

    def compose(self, other: "OperatorTable") -> "OperatorTable":
        """self after other: (self.compose(other))(a) == self(other(a))."""
        if self.ground_size != other.ground_size:
            raise ValueError("ground sizes differ")
        return OperatorTable(
            self.ground_size, self.entries[other.entries], _validate=False
        )

    def identity(self) -> "OperatorTable":
        return identity_table(self.ground_size)

    def key(self) -> bytes:
        """Hashable exact fingerprint of the table."""
        return self.entries.tobytes()

    def __eq__(self, other):
        if not isinstance(other, OperatorTable):
            return NotImplemented
        return (
            self.ground_size == other.ground_size
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.ground_size, self.key()))

    def __repr__(self):
        return f"OperatorTable(n={self.ground_size})"

    def to_json(self) -> dict:
        return {
            "n": self.ground_size,
            "entries": [format(int(e), "x") for e in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OperatorTable":
        entries = [int(e, 16) for e in obj["entries"]]
        return cls(obj["n"], entries)


@dataclass(frozen=True)
class FnOperator:
    """Powerset operator given by a plain mask function.

    No table is materialized, so the ground size may exceed the
    table cap; only pointwise application is available.
    """

    ground_size: int
    fn: Callable[[Mask], Mask]
    name: str = ""

    def apply(self, a: Mask) -> Mask:
        return self.fn(a)


class AdditiveOperator:
    """A union-preserving operator, stored by its images on singletons.

    f(A) = union of images[i] over i in A, with f(empty) = empty.  Such
    operators compose exactly through their singleton images, so they
    scale to ground sets far beyond the materialized-table cap.
    """

    __slots__ = ("ground_size", "images")

    def __init__(self, ground_size: int, images):
        if ground_size < 0:
            raise ValueError("negative ground size")
        images = tuple(int(m) for m in images)
        if len(images) != ground_size:
            raise ValueError(
                f"need {ground_size} singleton images, got {len(images)}"
            )
        full = (1 << ground_size) - 1
        for i, m in enumerate(images):
            if m < 0 or m & ~full:
                raise ValueError(f"image of singleton {i} outside the powerset")
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("AdditiveOperator is immutable")

    def apply(self, a: Mask) -> Mask:
        out = 0
        m = a
        while m:
            low = m & -m
            out |= self.images[low.bit_length() - 1]
            m ^= low
        return out

    def compose(self, other: "AdditiveOperator") -> "AdditiveOperator":
        if self.ground_size != other.ground_size:
            raise ValueError("ground sizes differ")
        return AdditiveOperator(
            self.ground_size, tuple(self.apply(m) for m in other.images)
        )

    def identity(self) -> "AdditiveOperator":
        n = self.ground_size
        return AdditiveOperator(n, tuple(1 << i for i in range(n)))

    def key(self):
        return self.images

    def to_table(self) -> OperatorTable:
        n = self.ground_size
        _check_ground_size(n)
        masks = np.arange(1 << n, dtype=np.int64)
        out = np.zeros(1 << n, dtype=np.int64)
        for i, img in enumerate(self.images):
            out |= ((masks >> i) & 1) * np.int64(img)
        return OperatorTable(n, out, _validate=False)

    def __eq__(self, other):
        if not isinstance(other, AdditiveOperator):
            return NotImplemented
        return self.ground_size == other.ground_size and self.images == other.images

    def __hash__(self):
        return hash((self.ground_size, self.images))

    def __repr__(self):
        return f"AdditiveOperator(n={self.ground_size})"


def identity_table(n: int) -> OperatorTable:
    _check_ground_size(n)
    return OperatorTable(n, np.arange(1 << n, dtype=np.int64), _validate=False)


def complement_table(n: int) -> OperatorTable:
    _check_ground_size(n)
    full = np.int64((1 << n) - 1)
    return OperatorTable(
        n, full ^ np.arange(1 << n, dtype=np.int64), _validate=False
    )


def table_from_function(n: int, fn: Callable[[Mask], Mask]) -> OperatorTable:
    """Materialize a mask function into a table (validates the range)."""
    _check_ground_size(n)
    return OperatorTable(n, [fn(a) for a in range(1 << n)])


def closure_from_fixed_points(n: int, fixed: Iterable[Mask]) -> OperatorTable:
    """Smallest-enclosing-member operator of a subset family.

    Maps A to the intersection of all family members containing A.  The
    family must contain the full ground set so the intersection is never
    empty-ranged.  The result is always a closure operator; its fixed
    points are the meet-closure of the input family.
    """
    _check_ground_size(n)
    size = 1 << n
    full = size - 1
    members = sorted(set(int(m) for m in fixed))
    if any(m < 0 or m > full for m in members):
        raise ValueError("family member outside the powerset")
    if full not in members:
        raise ValueError("family must contain the full ground set")
    masks = np.arange(size, dtype=np.int64)
    out = np.full(size, full, dtype=np.int64)
    for f in members:
        covers = (masks & ~np.int64(f)) == 0
        out[covers] &= f
    return OperatorTable(n, out, _validate=False)


def apply(f, a: Mask) -> Mask:
    """Image of subset a under operator f (table, functional, additive)."""
    return f.apply(a)


def compose(*ops):
    """Left-to-right pipeline read as usual function composition.

    compose(f, g, h)(a) == f(g(h(a))).  Accepts any operators sharing a
    compose() method and ground size.
    """
    if not ops:
        raise ValueError("compose() needs at least one operator")
    out = ops[0]
    for g in ops[1:]:
        out = out.compose(g)
    return out


def leq(f: OperatorTable, g: OperatorTable) -> bool:
    """Pointwise order: f(A) a subset of g(A) for every A."""
    if f.ground_size != g.ground_size:
        raise ValueError("ground sizes differ")
    return not np.any(f.entries & ~g.entries)


@dataclass(frozen=True)
class Check:
    """Outcome of a single axiom screen.

    witness is None on success; otherwise a mask (unary axioms) or an
    (A, B) mask pair (monotonicity), smallest in mask-integer order.
    """

    passed: bool
    witness: Union[None, Mask, tuple[Mask, Mask]] = None

    def witness_elements(self):
        if self.witness is None:
            return None
        if isinstance(self.witness, tuple):
            return [elements_of(m) for m in self.witness]
        return elements_of(self.witness)


@dataclass(frozen=True)
class ClosureReport:
    expanding: Check
    monotone: Check
    idempotent: Check

    @property
    def ok(self) -> bool:
        return self.expanding.passed and self.monotone.passed and self.idempotent.passed

    def as_dict(self) -> dict:
        return _report_dict(
            ("expanding", self.expanding),
            ("monotone", self.monotone),
            ("idempotent", self.idempotent),
        )


@dataclass(frozen=True)
class InteriorReport:
    contracting: Check
    monotone: Check
    idempotent: Check

    @property
    def ok(self) -> bool:
        return (
            self.contracting.passed and self.monotone.passed and self.idempotent.passed
        )

    def as_dict(self) -> dict:
        return _report_dict(
            ("contracting", self.contracting),
            ("monotone", self.monotone),
            ("idempotent", self.idempotent),
        )


def _report_dict(*named: tuple[str, Check]) -> dict:
    out = {}
    for name, chk in named:
        out[name] = {"passed": chk.passed, "witness": chk.witness_elements()}
    return out


def _first_true(condition) -> Optional[int]:
    idx = np.flatnonzero(condition)
    return int(idx[0]) if idx.size else None


def _monotone_fast(entries: np.ndarray, n: int) -> bool:
    # Monotonicity over all pairs A <= B follows from the single-element
    # covers A <= A + {i}, which is an n-pass vectorized screen.
    masks = np.arange(entries.size, dtype=np.int64)
    for i in range(n):
        up = entries[masks | np.int64(1 << i)]
        if np.any(entries & ~up):
            return False
    return True


def _monotone_witness(entries: np.ndarray, n: int) -> tuple[Mask, Mask]:
    # Smallest failing (A, B) in mask order: A ascending, then B over the
    # supersets of A in ascending order via the (B+1)|A enumeration.
    size = entries.size
    for a in range(size):
        fa = int(entries[a])
        b = a
        while True:
            b = (b + 1) | a
            if b >= size:
                break
            if fa & ~int(entries[b]):
                return (a, b)
    raise AssertionError("witness scan reached the end of a failing table")


def _monotone_check(entries: np.ndarray, n: int) -> Check:
    if _monotone_fast(entries, n):
        return Check(True)
    return Check(False, _monotone_witness(entries, n))


def check_closure(f: OperatorTable) -> ClosureReport:
    """Screen the three closure axioms, with smallest witnesses on failure."""
    n = f.ground_size
    masks = np.arange(1 << n, dtype=np.int64)
    e = f.entries
    bad = _first_true(masks & ~e)
    expanding = Check(True) if bad is None else Check(False, bad)
    monotone = _monotone_check(e, n)
    bad = _first_true(e[e] != e)
    idempotent = Check(True) if bad is None else Check(False, bad)
    return ClosureReport(expanding, monotone, idempotent)


def check_interior(f: OperatorTable) -> InteriorReport:
    """Screen the interior axioms (contracting, monotone, idempotent)."""
    n = f.ground_size
    masks = np.arange(1 << n, dtype=np.int64)
    e = f.entries
    bad = _first_true(e & ~masks)
    contracting = Check(True) if bad is None else Check(False, bad)
    monotone = _monotone_check(e, n)
    bad = _first_true(e[e] != e)
    idempotent = Check(True) if bad is None else Check(False, bad)
    return InteriorReport(contracting, monotone, idempotent)


def commuting_witness(f: OperatorTable, g: OperatorTable) -> Optional[Mask]:
    """Smallest A with f(g(A)) != g(f(A)), or None if they commute."""
    if f.ground_size != g.ground_size:
        raise ValueError("ground sizes differ")
    return _first_true(f.entries[g.entries] != g.entries[f.entries])


def commutes(f: OperatorTable, g: OperatorTable) -> bool:
    return commuting_witness(f, g) is None


def lift_permutation(perm) -> OperatorTable:
    """Lift a permutation of the ground set to a bijection of the powerset."""
    perm = list(perm)
    n = len(perm)
    _check_ground_size(n)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    masks = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for i, pi in enumerate(perm):
        out |= ((masks >> i) & 1) << np.int64(pi)
    return OperatorTable(n, out, _validate=False)


def conjugated_involution(perm) -> OperatorTable:
    """Complement conjugated by a lifted permutation.

    Returns lift(perm) . complement . lift(perm)^-1.  This is always an
    inclusion-reversing involution; in fact lifted permutations commute
    with complementation, so the result coincides with the complement
    table itself for every perm (a property the tests pin down).
    """
    perm = list(perm)
    n = len(perm)
    inv = [0] * n
    for i, pi in enumerate(perm):
        inv[pi] = i
    lp = lift_permutation(perm)
    lpinv = lift_permutation(inv)
    full = np.int64((1 << n) - 1)
    return OperatorTable(n, lp.entries[full ^ lpinv.entries], _validate=False)


def reversed_involution(perm) -> OperatorTable:
    """lift(perm) . complement for an involutive perm.

    For perm an involution of the ground set this is an
    inclusion-reversing involution of the powerset, and it differs from
    plain complementation whenever perm is not the identity.
    """
    perm = list(perm)
    n = len(perm)
    for i, pi in enumerate(perm):
        if perm[pi] != i:
            raise ValueError("perm is not an involution")
    lp = lift_permutation(perm)
    full = np.int64((1 << n) - 1)
    return OperatorTable(n, lp.entries[full ^ np.arange(1 << n, dtype=np.int64)],
                         _validate=False)


def is_reversing_involution(f: OperatorTable) -> bool:
    """Inclusion-reversing (A <= B implies f(B) <= f(A)) and self-inverse."""
    n = f.ground_size
    e = f.entries
    masks = np.arange(1 << n, dtype=np.int64)
    if np.any(e[e] != masks):
        return False
    for i in range(n):
        up = e[masks | np.int64(1 << i)]
        if np.any(up & ~e):
            return False
    return True


_WORD_LETTERS = frozenset("cpq")


def _word_letters(word) -> str:
    text = str(word)
    for i, ch in enumerate(text):
        if ch not in _WORD_LETTERS:
            raise ValueError(f"unknown letter {ch!r} at position {i}")
    return text


def eval_word(word, p: OperatorTable, q: OperatorTable,
              c: Optional[OperatorTable] = None) -> OperatorTable:
    """Table of a cpq-word, letters acting right-to-left as usual.

    word may be a str or anything whose str() is the letter sequence.
    c defaults to the complement table; passing another table (for
    instance a different inclusion-reversing involution) substitutes it
    for every c letter.
    """
    text = _word_letters(word)
    n = p.ground_size
    if q.ground_size != n or (c is not None and c.ground_size != n):
        raise ValueError("ground sizes differ")
    if c is None:
        c = complement_table(n)
    tables = {"c": c.entries, "p": p.entries, "q": q.entries}
    v = np.arange(1 << n, dtype=np.int64)
    for letter in reversed(text):
        v = tables[letter][v]
    return OperatorTable(n, v, _validate=False)


def eval_word_on(word, p, q, a: Mask) -> Mask:
    """Image of a single subset under a cpq-word, without materializing.

    p and q may be any operators exposing ground_size and apply(), so
    this is the evaluator of choice beyond the table cap.  c acts as
    complementation against the shared ground set.
    """
    text = _word_letters(word)
    n = p.ground_size
    if q.ground_size != n:
        raise ValueError("ground sizes differ")
    full = (1 << n) - 1
    if not 0 <= a <= full:
        raise ValueError("start mask outside the powerset")
    for letter in reversed(text):
        if letter == "c":
            a = full ^ a
        elif letter == "p":
            a = p.apply(a)
        else:
            a = q.apply(a)
    return a
