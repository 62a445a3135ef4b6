"""Commutative monad instances on finite sets.

Each instance packages the functorial action, the unit, Kleisli extension
and the lax structure map c : TX x TY -> T(X x Y), all computed exactly.
Measure-like instances carry rational tables; nothing here is assumed to
satisfy the monad laws -- `check_monad_laws` verifies them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .errors import (
    ElementNotInSet,
    NotEnumerable,
    OutOfBound,
    PayloadInvalid,
    UndecidableWithoutSolver,
)
from .finset import (
    Elem,
    FinFun,
    FinSet,
    UNIT,
    elem_to_str,
    enumerate_functions,
    identity_fun,
    pair_fun,
    product,
    swap_fun,
)
from .monoid import FiniteMonoid
from .rational import ONE, ZERO, format_rat
from .report import CheckReport

# Sampler caps: small exact values keep witnesses readable.
SAMPLE_NUM_MAX = 9
SAMPLE_DEN_MAX = 4


@dataclass(frozen=True)
class TValue:
    """An element of TX for a concrete instance, in canonical form."""

    monad: str
    base: FinSet
    payload: object

    def describe(self) -> str:
        inst_id = self.monad
        p = self.payload
        if inst_id in ("M", "M*", "D") or inst_id.startswith("F"):
            fmt = format_rat if inst_id in ("M", "M*", "D") else str
            entries = [
                f"{elem_to_str(e)}:{fmt(v)}"
                for e, v in zip(self.base.elements, p)
                if v != 0
            ]
            return f"{inst_id}{{{', '.join(entries)}}}" if entries else f"{inst_id}{{zero}}"
        if inst_id in ("P", "P*"):
            keys = sorted(elem_to_str(e) for e in p)
            return f"{inst_id}{{{', '.join(keys)}}}"
        if inst_id.startswith("writer:"):
            return f"{inst_id}({p[0]}, {elem_to_str(p[1])})"
        if inst_id == "Id":
            return f"Id({elem_to_str(p)})"
        return f"{inst_id}({p!r})"


class MonadInstance:
    """Descriptor of one commutative monad instance."""

    id: str = "?"
    enumerable: bool = False
    has_zero: bool = False  # admits an absorbing zero element of TX
    measure_like: bool = False

    # -- construction ------------------------------------------------------

    def make(self, base: FinSet, payload) -> TValue:
        return TValue(self.id, base, self.validate(base, payload))

    def validate(self, base: FinSet, payload):
        raise NotImplementedError

    # -- monad structure ---------------------------------------------------

    def unit(self, base: FinSet, x: Elem) -> TValue:
        raise NotImplementedError

    def map(self, f: FinFun, t: TValue) -> TValue:
        raise NotImplementedError

    def extend(self, col: Callable[[Elem], TValue], cod: FinSet, t: TValue) -> TValue:
        """Kleisli extension: bind t along the column function of a kernel."""
        raise NotImplementedError

    def lax_c(self, t: TValue, u: TValue) -> TValue:
        raise NotImplementedError

    def strength(self, base: FinSet, x: Elem, u: TValue) -> TValue:
        """s : X x TY -> T(X x Y), realized as c(unit(x), u)."""
        return self.lax_c(self.unit(base, x), u)

    # -- enumeration and sampling -----------------------------------------

    def enumerate_values(self, base: FinSet) -> Iterator[TValue]:
        raise NotEnumerable(f"{self.id} has no enumerator over {base.name}")

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        raise NotImplementedError

    def zero(self, base: FinSet) -> TValue:
        raise PayloadInvalid(f"{self.id} has no zero element")

    # -- solvers -----------------------------------------------------------

    def t1_inverse(self, t: TValue) -> Optional[TValue]:
        """Inverse of t in the internal monoid T1, or None."""
        if not self.enumerable:
            raise UndecidableWithoutSolver(f"{self.id}: no T1 inverse solver")
        one = self.unit(UNIT, ())
        for u in self.enumerate_values(UNIT):
            try:
                if self.lax_c(t, u) == one:
                    return u
            except OutOfBound:
                continue
        return None

    def noninvertible_t1_candidate(self) -> Optional[TValue]:
        """A preferred witness element of T1 expected to have no inverse."""
        return None

    def _check_x(self, base: FinSet, x: Elem):
        if x not in base:
            raise ElementNotInSet(f"{x!r} not in {base.name}")


class _MeasureBase(MonadInstance):
    """Shared table arithmetic for M, M* and D (payload: tuple of Fractions)."""

    measure_like = True

    def validate(self, base: FinSet, payload):
        payload = tuple(Fraction(v) for v in payload)
        if len(payload) != len(base):
            raise PayloadInvalid(f"{self.id}: table size does not match {base.name}")
        if any(v < 0 for v in payload):
            raise PayloadInvalid(f"{self.id}: negative entry")
        return payload

    def unit(self, base: FinSet, x: Elem) -> TValue:
        self._check_x(base, x)
        i = base.index(x)
        return self.make(base, tuple(ONE if j == i else ZERO for j in range(len(base))))

    def map(self, f: FinFun, t: TValue) -> TValue:
        out = [ZERO] * len(f.cod)
        for e, v in zip(t.base.elements, t.payload):
            out[f.cod.index(f(e))] += v
        return self.make(f.cod, tuple(out))

    def extend(self, col, cod: FinSet, t: TValue) -> TValue:
        out = [ZERO] * len(cod)
        for e, v in zip(t.base.elements, t.payload):
            if v == 0:
                continue
            target = col(e)
            for j, w in enumerate(target.payload):
                out[j] += v * w
        return self.make(cod, tuple(out))

    def lax_c(self, t: TValue, u: TValue) -> TValue:
        base = product([t.base, u.base])
        out = tuple(v * w for v in t.payload for w in u.payload)
        return self.make(base, out)

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        return self.make(
            base,
            tuple(
                Fraction(rng.randint(0, SAMPLE_NUM_MAX), rng.randint(1, SAMPLE_DEN_MAX))
                for _ in base
            ),
        )


class MeasureMonad(_MeasureBase):
    """Finitely supported nonnegative rational measures."""

    id = "M"
    has_zero = True

    def zero(self, base: FinSet) -> TValue:
        return self.make(base, (ZERO,) * len(base))

    def t1_inverse(self, t: TValue) -> Optional[TValue]:
        v = t.payload[0]
        if v == 0:
            return None
        return self.make(UNIT, (1 / v,))

    def noninvertible_t1_candidate(self) -> Optional[TValue]:
        return self.zero(UNIT)


class NonzeroMeasureMonad(_MeasureBase):
    """Non-zero finitely supported measures; closed under all operations
    as long as every kernel column is non-zero."""

    id = "M*"

    def validate(self, base: FinSet, payload):
        payload = super().validate(base, payload)
        if all(v == 0 for v in payload):
            raise PayloadInvalid("M*: zero table is not a valid value")
        return payload

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        while True:
            try:
                return super().sample(base, rng)
            except PayloadInvalid:
                continue

    def t1_inverse(self, t: TValue) -> Optional[TValue]:
        return self.make(UNIT, (1 / t.payload[0],))


class DistributionMonad(_MeasureBase):
    """Probability distributions: columns sum to one."""

    id = "D"

    def validate(self, base: FinSet, payload):
        payload = super().validate(base, payload)
        if sum(payload) != 1:
            raise PayloadInvalid("D: table does not sum to 1")
        return payload

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        while True:
            raw = [
                Fraction(rng.randint(0, SAMPLE_NUM_MAX), rng.randint(1, SAMPLE_DEN_MAX))
                for _ in base
            ]
            total = sum(raw)
            if total != 0:
                return self.make(base, tuple(v / total for v in raw))

    def t1_inverse(self, t: TValue) -> Optional[TValue]:
        return self.make(UNIT, (ONE,))


class IdentityMonad(MonadInstance):
    id = "Id"
    enumerable = True

    def validate(self, base: FinSet, payload):
        payload = tuple(payload)
        if payload not in base:
            raise PayloadInvalid(f"Id: {payload!r} not in {base.name}")
        return payload

    def unit(self, base: FinSet, x: Elem) -> TValue:
        self._check_x(base, x)
        return self.make(base, x)

    def map(self, f: FinFun, t: TValue) -> TValue:
        return self.make(f.cod, f(t.payload))

    def extend(self, col, cod: FinSet, t: TValue) -> TValue:
        return col(t.payload)

    def lax_c(self, t: TValue, u: TValue) -> TValue:
        return self.make(product([t.base, u.base]), t.payload + u.payload)

    def enumerate_values(self, base: FinSet) -> Iterator[TValue]:
        for e in base:
            yield self.make(base, e)

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        return self.make(base, rng.choice(base.elements))


class PowersetMonad(MonadInstance):
    """Subsets; the Kleisli category is Rel.  Payload: frozenset of elements."""

    id = "P"
    enumerable = True
    allow_empty = True
    has_zero = True

    def validate(self, base: FinSet, payload):
        payload = frozenset(tuple(e) for e in payload)
        for e in payload:
            if e not in base:
                raise PayloadInvalid(f"{self.id}: {e!r} not in {base.name}")
        if not payload and not self.allow_empty:
            raise PayloadInvalid(f"{self.id}: empty subset is not a valid value")
        return payload

    def unit(self, base: FinSet, x: Elem) -> TValue:
        self._check_x(base, x)
        return self.make(base, frozenset([x]))

    def map(self, f: FinFun, t: TValue) -> TValue:
        return self.make(f.cod, frozenset(f(e) for e in t.payload))

    def extend(self, col, cod: FinSet, t: TValue) -> TValue:
        out = frozenset().union(*(col(e).payload for e in t.payload)) if t.payload else frozenset()
        return self.make(cod, out)

    def lax_c(self, t: TValue, u: TValue) -> TValue:
        base = product([t.base, u.base])
        return self.make(base, frozenset(a + b for a in t.payload for b in u.payload))

    def enumerate_values(self, base: FinSet) -> Iterator[TValue]:
        for mask in range(2 ** len(base)):
            subset = frozenset(
                e for i, e in enumerate(base.elements) if mask >> i & 1
            )
            try:
                yield self.make(base, subset)
            except PayloadInvalid:
                continue

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        while True:
            subset = frozenset(e for e in base if rng.random() < 0.5)
            try:
                return self.make(base, subset)
            except PayloadInvalid:
                continue

    def zero(self, base: FinSet) -> TValue:
        if not self.allow_empty:
            raise PayloadInvalid(f"{self.id} has no zero element")
        return self.make(base, frozenset())

    def noninvertible_t1_candidate(self) -> Optional[TValue]:
        if self.allow_empty:
            return self.make(UNIT, frozenset())
        return None


class NonemptyPowersetMonad(PowersetMonad):
    id = "P*"
    allow_empty = False
    has_zero = False


class WriterMonad(MonadInstance):
    """A x - for a finite commutative monoid A.  Payload: (a_label, element)."""

    enumerable = True

    def __init__(self, monoid: FiniteMonoid):
        self.monoid = monoid
        self.id = f"writer:{monoid.name}"

    def validate(self, base: FinSet, payload):
        a, x = payload
        if a not in self.monoid.elements:
            raise PayloadInvalid(f"{self.id}: {a!r} not in monoid")
        x = tuple(x)
        if x not in base:
            raise PayloadInvalid(f"{self.id}: {x!r} not in {base.name}")
        return (a, x)

    def unit(self, base: FinSet, x: Elem) -> TValue:
        self._check_x(base, x)
        return self.make(base, (self.monoid.label(self.monoid.unit), x))

    def map(self, f: FinFun, t: TValue) -> TValue:
        a, x = t.payload
        return self.make(f.cod, (a, f(x)))

    def extend(self, col, cod: FinSet, t: TValue) -> TValue:
        a, x = t.payload
        b, y = col(x).payload
        return self.make(cod, (self._mul(a, b), y))

    def lax_c(self, t: TValue, u: TValue) -> TValue:
        a, x = t.payload
        b, y = u.payload
        return self.make(product([t.base, u.base]), (self._mul(a, b), x + y))

    def _mul(self, a: str, b: str) -> str:
        m = self.monoid
        return m.label(m.mul(m.index(a), m.index(b)))

    def enumerate_values(self, base: FinSet) -> Iterator[TValue]:
        for a in self.monoid.elements:
            for x in base:
                yield self.make(base, (a, x))

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        return self.make(
            base, (rng.choice(self.monoid.elements), rng.choice(base.elements))
        )


class FreeAbelianMonad(MonadInstance):
    """Free abelian group: integer multisets, multiplicities capped at a
    configured bound.  Payload: tuple of ints aligned with the base order."""

    enumerable = True
    has_zero = True

    def __init__(self, bound: int = 16):
        self.bound = bound
        self.id = f"F(B={bound})" if bound != 16 else "F"

    def validate(self, base: FinSet, payload):
        payload = tuple(int(v) for v in payload)
        if len(payload) != len(base):
            raise PayloadInvalid("F: table size does not match base")
        for v in payload:
            if abs(v) > self.bound:
                raise OutOfBound(f"F: multiplicity {v} exceeds bound {self.bound}")
        return payload

    def unit(self, base: FinSet, x: Elem) -> TValue:
        self._check_x(base, x)
        i = base.index(x)
        return self.make(base, tuple(1 if j == i else 0 for j in range(len(base))))

    def map(self, f: FinFun, t: TValue) -> TValue:
        out = [0] * len(f.cod)
        for e, v in zip(t.base.elements, t.payload):
            out[f.cod.index(f(e))] += v
        return self.make(f.cod, tuple(out))

    def extend(self, col, cod: FinSet, t: TValue) -> TValue:
        out = [0] * len(cod)
        for e, v in zip(t.base.elements, t.payload):
            if v == 0:
                continue
            for j, w in enumerate(col(e).payload):
                out[j] += v * w
        return self.make(cod, tuple(out))

    def lax_c(self, t: TValue, u: TValue) -> TValue:
        base = product([t.base, u.base])
        return self.make(base, tuple(v * w for v in t.payload for w in u.payload))

    def enumerate_values(self, base: FinSet) -> Iterator[TValue]:
        rng_vals = range(-self.bound, self.bound + 1)
        for combo in itertools.product(rng_vals, repeat=len(base)):
            yield self.make(base, combo)

    def sample(self, base: FinSet, rng: random.Random) -> TValue:
        # Small multiplicities keep iterated extensions inside the bound.
        return self.make(base, tuple(rng.randint(-1, 1) for _ in base))

    def zero(self, base: FinSet) -> TValue:
        return self.make(base, (0,) * len(base))

    def noninvertible_t1_candidate(self) -> Optional[TValue]:
        return self.make(UNIT, (2,))


@dataclass
class Classification:
    kind: str  # "affine" | "weakly_affine_not_affine" | "not_weakly_affine"
    witness: object = None
    evidence: str = "exhaustive"  # or "solver-asserted"
    note: str = ""

    @property
    def weakly_affine(self) -> bool:
        return self.kind in ("affine", "weakly_affine_not_affine")

    def to_json(self) -> dict:
        from .report import show

        return {
            "kind": self.kind,
            "witness": show(self.witness),
            "evidence": self.evidence,
            "note": self.note,
        }


def classify(inst: MonadInstance, trials: int = 200, seed: int = 42) -> Classification:
    """Decide affine / weakly affine / neither for the internal monoid T1.

    Enumerable instances are decided exhaustively.  For the non-enumerable
    measure instances the verdict relies on the per-instance inverse solver;
    it is verified on seeded samples and flagged "solver-asserted".
    """
    one = inst.unit(UNIT, ())
    if inst.enumerable:
        carrier = list(inst.enumerate_values(UNIT))
        candidates = []
        preferred = inst.noninvertible_t1_candidate()
        if preferred is not None:
            candidates.append(preferred)
        candidates.extend(carrier)
        for t in candidates:
            if inst.t1_inverse(t) is None:
                return Classification(
                    "not_weakly_affine",
                    witness=t,
                    note=f"element of T1 with no inverse among {len(carrier)} values",
                )
        if len(carrier) == 1:
            return Classification("affine", note="T1 has exactly one element")
        non_unit = next(t for t in carrier if t != one)
        return Classification(
            "weakly_affine_not_affine",
            witness=non_unit,
            note=f"|T1| = {len(carrier)}, every element invertible",
        )

    rng = random.Random(seed)
    if isinstance(inst, DistributionMonad):
        for _ in range(trials):
            if inst.sample(UNIT, rng) != one:  # pragma: no cover - D1 is a point
                raise AssertionError("D value over 1 differs from the unit")
        return Classification(
            "affine",
            evidence="solver-asserted",
            note=f"all {trials} sampled elements of T1 equal the unit",
        )
    if isinstance(inst, NonzeroMeasureMonad):
        for _ in range(trials):
            a = inst.sample(UNIT, rng)
            b = inst.t1_inverse(a)
            if b is None or inst.lax_c(a, b) != one:
                raise AssertionError("M* reciprocal solver failed")
        return Classification(
            "weakly_affine_not_affine",
            witness=inst.make(UNIT, (Fraction(2),)),
            evidence="solver-asserted",
            note=f"reciprocal inverse verified on {trials} samples; 2 != 1 in T1",
        )
    if isinstance(inst, MeasureMonad):
        zero = inst.zero(UNIT)
        for _ in range(trials):
            b = inst.sample(UNIT, rng)
            if inst.lax_c(zero, b) == one:  # pragma: no cover - 0*b = 0
                raise AssertionError("zero scalar acquired an inverse")
        return Classification(
            "not_weakly_affine",
            witness=zero,
            evidence="solver-asserted",
            note=f"scalar 0 has no inverse; checked against {trials} samples",
        )
    raise UndecidableWithoutSolver(f"{inst.id}: no enumerator and no solver")


_classify_cache: dict = {}


def classification_of(inst: MonadInstance) -> Classification:
    """Memoized classify() with default evidence parameters."""
    if inst.id not in _classify_cache:
        _classify_cache[inst.id] = classify(inst)
    return _classify_cache[inst.id]


# ---------------------------------------------------------------------------
# Law suite


_LAW_BUDGET = 20000


def _all_kernels(inst, dom: FinSet, cod: FinSet):
    values = list(inst.enumerate_values(cod))
    if len(values) ** len(dom) > _LAW_BUDGET:
        raise NotEnumerable(
            f"{inst.id}: {len(values)}^{len(dom)} kernels exceed the enumeration budget"
        )
    for combo in itertools.product(values, repeat=len(dom)):
        lookup = dict(zip(dom.elements, combo))
        yield lookup.__getitem__


def _sample_kernel(inst, dom: FinSet, cod: FinSet, rng):
    lookup = {e: inst.sample(cod, rng) for e in dom}
    return lookup.__getitem__


def _sample_fun(dom: FinSet, cod: FinSet, rng) -> FinFun:
    return FinFun(dom, cod, tuple(rng.randrange(len(cod)) for _ in dom))


def check_monad_laws(
    inst: MonadInstance,
    sizes: Sequence[int],
    mode: str = "exhaustive",
    trials: int = 200,
    seed: int = 42,
) -> CheckReport:
    """Verify monad, functor and commutativity laws on small objects.

    Exhaustive mode enumerates all values, functions and kernels on objects
    of the given sizes (requires an enumerator); randomized mode runs seeded
    trials with freshly sampled ingredients, still compared exactly.
    """
    sets = [
        FinSet.of(f"S{n}", [f"s{n}_{i}" for i in range(1, n + 1)]) for n in sorted(set(sizes))
    ]
    name = f"monad_laws[{inst.id}]"

    def fail(law, *inputs):
        return CheckReport(
            name=name,
            passed=False,
            mode=mode,
            trials=trials if mode == "randomized" else 0,
            seed=seed if mode == "randomized" else None,
            witness={"law": law, "inputs": list(inputs)},
        )

    def run_once(X, Y, Z, t, u, v, x, f, g, k, h):
        uy = lambda e: inst.unit(Y, e)
        if inst.extend(k, Y, inst.unit(X, x)) != k(x):
            return fail("kleisli_left_unit", x)
        if inst.extend(uy, Y, u) != u:
            return fail("kleisli_right_unit", u)
        lhs = inst.extend(h, Z, inst.extend(k, Y, t))
        rhs = inst.extend(lambda e: inst.extend(h, Z, k(e)), Z, t)
        if lhs != rhs:
            return fail("kleisli_assoc", t)
        if inst.map(identity_fun(X), t) != t:
            return fail("functor_identity", t)
        if inst.map(g.compose(f), t) != inst.map(g, inst.map(f, t)):
            return fail("functor_composition", t)
        if inst.map(f, inst.unit(X, x)) != inst.unit(Y, f(x)):
            return fail("unit_naturality", x)
        if inst.map(pair_fun(f, g), inst.lax_c(t, u)) != inst.lax_c(
            inst.map(f, t), inst.map(g, u)
        ):
            return fail("c_naturality", t, u)
        if inst.map(swap_fun(X, Y), inst.lax_c(t, u)) != inst.lax_c(u, t):
            return fail("c_symmetry", t, u)
        if inst.lax_c(t, inst.lax_c(u, v)) != inst.lax_c(inst.lax_c(t, u), v):
            return fail("c_associativity", t, u, v)
        return None

    if mode == "exhaustive":
        if not inst.enumerable:
            raise NotEnumerable(f"{inst.id}: exhaustive law check needs an enumerator")
        for X, Y, Z in itertools.product(sets, repeat=3):
            vals_x = list(inst.enumerate_values(X))
            vals_y = list(inst.enumerate_values(Y))
            vals_z = list(inst.enumerate_values(Z))
            funs_xy = list(enumerate_functions(X, Y))
            funs_yz = list(enumerate_functions(Y, Z))
            kers_xy = list(_all_kernels(inst, X, Y))
            kers_yz = list(_all_kernels(inst, Y, Z))
            for x, k in itertools.product(X, kers_xy):
                if inst.extend(k, Y, inst.unit(X, x)) != k(x):
                    return fail("kleisli_left_unit", x)
            for u in vals_y:
                if inst.extend(lambda e: inst.unit(Y, e), Y, u) != u:
                    return fail("kleisli_right_unit", u)
            for t, k, h in itertools.product(vals_x, kers_xy, kers_yz):
                lhs = inst.extend(h, Z, inst.extend(k, Y, t))
                rhs = inst.extend(lambda e: inst.extend(h, Z, k(e)), Z, t)
                if lhs != rhs:
                    return fail("kleisli_assoc", t)
            for t in vals_x:
                if inst.map(identity_fun(X), t) != t:
                    return fail("functor_identity", t)
            for t, f, g in itertools.product(vals_x, funs_xy, funs_yz):
                if inst.map(g.compose(f), t) != inst.map(g, inst.map(f, t)):
                    return fail("functor_composition", t)
            for x, f in itertools.product(X, funs_xy):
                if inst.map(f, inst.unit(X, x)) != inst.unit(Y, f(x)):
                    return fail("unit_naturality", x)
            for t, u, f, g in itertools.product(vals_x, vals_y, funs_xy, funs_yz):
                fg = pair_fun(f, g)
                if inst.map(fg, inst.lax_c(t, u)) != inst.lax_c(
                    inst.map(f, t), inst.map(g, u)
                ):
                    return fail("c_naturality", t, u)
            for t, u in itertools.product(vals_x, vals_y):
                if inst.map(swap_fun(X, Y), inst.lax_c(t, u)) != inst.lax_c(u, t):
                    return fail("c_symmetry", t, u)
            for t, u, v in itertools.product(vals_x, vals_y, vals_z):
                if inst.lax_c(t, inst.lax_c(u, v)) != inst.lax_c(inst.lax_c(t, u), v):
                    return fail("c_associativity", t, u, v)
        return CheckReport(name=name, passed=True, mode="exhaustive")

    rng = random.Random(seed)
    for _ in range(trials):
        X, Y, Z = (rng.choice(sets) for _ in range(3))
        result = run_once(
            X,
            Y,
            Z,
            inst.sample(X, rng),
            inst.sample(Y, rng),
            inst.sample(Z, rng),
            rng.choice(X.elements),
            _sample_fun(X, Y, rng),
            _sample_fun(Y, Z, rng),
            _sample_kernel(inst, X, Y, rng),
            _sample_kernel(inst, Y, Z, rng),
        )
        if result is not None:
            return result
    return CheckReport(name=name, passed=True, mode="randomized", trials=trials, seed=seed)


# ---------------------------------------------------------------------------
# Registry


def get_instance(monad_id: str, bound: int = 16) -> MonadInstance:
    """Resolve a monad id like "M*", "writer:Z3" or "F" to an instance."""
    from .errors import UnknownMonad
    from .monoid import get_monoid

    key = monad_id.strip()
    simple = {
        "Id": IdentityMonad,
        "D": DistributionMonad,
        "M": MeasureMonad,
        "M*": NonzeroMeasureMonad,
        "P": PowersetMonad,
        "P*": NonemptyPowersetMonad,
    }
    if key in simple:
        return simple[key]()
    if key.lower().startswith("writer:"):
        try:
            return WriterMonad(get_monoid(key.split(":", 1)[1]))
        except Exception as exc:
            raise UnknownMonad(str(exc)) from None
    if key == "F" or key.startswith("F("):
        return FreeAbelianMonad(bound)
    raise UnknownMonad(f"unknown monad id {monad_id!r}")


ALL_MONAD_IDS = ["Id", "D", "M", "M*", "P", "P*", "writer:Z2", "writer:Z3", "writer:AND", "F"]
