"""The gs-monoidal layer of a Kleisli category.

Kernels are Kleisli morphisms X -> Y stored columnwise (one TValue over the
codomain per domain element).  Everything downstream -- effects, mass,
scalar action, normalization, the equivalence solver -- is built from
`compose`, `tensor` and the structural generators copy / discard / swap.
Because products of finite sets are strict (see finset), no reindexing
kernels are ever needed: I x I = I and X x I = X hold on the nose.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator, Optional, Sequence

from .errors import NotNormalizable, TypeMismatch
from .finset import (
    Elem,
    FinFun,
    FinSet,
    UNIT,
    elem_to_str,
    fun_from_callable,
    product,
    swap_fun,
)
from .monads import MonadInstance, TValue
from .report import CheckReport


class Kernel:
    """A Kleisli morphism dom -> cod for a fixed monad instance."""

    __slots__ = ("inst", "dom", "cod", "columns")

    def __init__(self, inst: MonadInstance, dom: FinSet, cod: FinSet, columns):
        columns = tuple(columns)
        if len(columns) != len(dom):
            raise TypeMismatch("one column per domain element required")
        for col in columns:
            if col.monad != inst.id:
                raise TypeMismatch(f"column belongs to {col.monad}, kernel to {inst.id}")
            if col.base != cod:
                raise TypeMismatch("column base does not match codomain")
            inst.validate(cod, col.payload)
        self.inst = inst
        self.dom = dom
        self.cod = cod
        self.columns = columns

    def __call__(self, x: Elem) -> TValue:
        return self.columns[self.dom.index(x)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Kernel)
            and self.inst.id == other.inst.id
            and self.dom == other.dom
            and self.cod == other.cod
            and self.columns == other.columns
        )

    def __hash__(self) -> int:
        return hash((self.inst.id, self.dom, self.cod, self.columns))

    def describe(self) -> str:
        cols = ", ".join(
            f"{elem_to_str(x)} -> {col.describe()}"
            for x, col in zip(self.dom.elements, self.columns)
        )
        return f"Kernel[{self.inst.id}: {self.dom.name} -> {self.cod.name}]({cols})"

    def __repr__(self) -> str:
        return self.describe()


def from_columns(inst, dom: FinSet, cod: FinSet, col: Callable[[Elem], TValue]) -> Kernel:
    return Kernel(inst, dom, cod, (col(x) for x in dom))


def lift(inst: MonadInstance, f: FinFun) -> Kernel:
    """Kleisli inclusion of a base function."""
    return from_columns(inst, f.dom, f.cod, lambda x: inst.unit(f.cod, f(x)))


def identity(inst: MonadInstance, x: FinSet) -> Kernel:
    return from_columns(inst, x, x, lambda e: inst.unit(x, e))


def copy_k(inst: MonadInstance, x: FinSet) -> Kernel:
    xx = product([x, x])
    return from_columns(inst, x, xx, lambda e: inst.unit(xx, e + e))


def discard_k(inst: MonadInstance, x: FinSet) -> Kernel:
    return from_columns(inst, x, UNIT, lambda e: inst.unit(UNIT, ()))


def swap_k(inst: MonadInstance, x: FinSet, y: FinSet) -> Kernel:
    return lift(inst, swap_fun(x, y))


def structural(inst: MonadInstance, kind: str, *objects: FinSet) -> Kernel:
    builders = {"copy": copy_k, "discard": discard_k, "swap": swap_k, "id": identity}
    try:
        return builders[kind](inst, *objects)
    except KeyError:
        raise TypeMismatch(f"unknown structural kind {kind!r}") from None


def compose(g: Kernel, f: Kernel) -> Kernel:
    """g after f; for measure monads this is matrix composition."""
    if f.inst.id != g.inst.id:
        raise TypeMismatch(f"instance mismatch: {f.inst.id} vs {g.inst.id}")
    if f.cod != g.dom:
        raise TypeMismatch(f"cannot compose {g.dom.name} after {f.cod.name}")
    inst = f.inst
    return from_columns(inst, f.dom, g.cod, lambda x: inst.extend(g, g.cod, f(x)))


def tensor(f: Kernel, g: Kernel) -> Kernel:
    """Parallel composition; for measure monads the Kronecker product."""
    if f.inst.id != g.inst.id:
        raise TypeMismatch(f"instance mismatch: {f.inst.id} vs {g.inst.id}")
    inst = f.inst
    dom = product([f.dom, g.dom])
    cod = product([f.cod, g.cod])
    cut = f.dom.arity
    return from_columns(inst, dom, cod, lambda e: inst.lax_c(f(e[:cut]), g(e[cut:])))


def tensor_all(kernels: Sequence[Kernel]) -> Kernel:
    result = kernels[0]
    for k in kernels[1:]:
        result = tensor(result, k)
    return result


def pairing(f: Kernel, g: Kernel) -> Kernel:
    """The copy-then-tensor product (f, g) : X -> Y (x) Z of same-domain kernels."""
    if f.dom != g.dom:
        raise TypeMismatch("pairing requires a common domain")
    return compose(tensor(f, g), copy_k(f.inst, f.dom))


def is_copyable(f: Kernel) -> bool:
    lhs = compose(copy_k(f.inst, f.cod), f)
    rhs = compose(tensor(f, f), copy_k(f.inst, f.dom))
    return lhs == rhs


def is_discardable(f: Kernel) -> bool:
    return compose(discard_k(f.inst, f.cod), f) == discard_k(f.inst, f.dom)


# ---------------------------------------------------------------------------
# Effects: kernels into the monoidal unit


def mass(f: Kernel) -> Kernel:
    """The effect discard o f; f is discardable iff this is the discard map."""
    return compose(discard_k(f.inst, f.cod), f)


def effect_mul(a: Kernel, b: Kernel) -> Kernel:
    """Product in the effect monoid C(X, I): copy, then tensor.

    Since I x I = I strictly, no reindexing is needed.
    """
    _require_effect(a)
    _require_effect(b)
    if a.dom != b.dom:
        raise TypeMismatch("effect product requires a common domain")
    return compose(tensor(a, b), copy_k(a.inst, a.dom))


def scalar_action(a: Kernel, f: Kernel) -> Kernel:
    """The action of the effect monoid on C(X, Y): (a (x) f) o copy."""
    _require_effect(a)
    if a.dom != f.dom:
        raise TypeMismatch("scalar action requires a common domain")
    return compose(tensor(a, f), copy_k(f.inst, f.dom))


def try_effect_inverse(a: Kernel) -> tuple:
    """Invert an effect in the monoid C(X, I) if possible.

    Returns (inverse, witness): the inverse kernel and None, or None and the
    domain element whose T1 scalar has no inverse.
    """
    _require_effect(a)
    inst = a.inst
    inverted = []
    for x, col in zip(a.dom.elements, a.columns):
        inv = inst.t1_inverse(col)
        if inv is None:
            return None, x
        inverted.append(inv)
    return Kernel(inst, a.dom, UNIT, inverted), None


def normalize(f: Kernel) -> tuple:
    """Split f into (mass, normalization) with f = mass . n and n discardable."""
    m = mass(f)
    inv, witness = try_effect_inverse(m)
    if inv is None:
        raise NotNormalizable(
            f"mass of {f.inst.id} kernel not invertible at {elem_to_str(witness)}",
            witness=witness,
        )
    n = scalar_action(inv, f)
    return m, n


def equivalent(f: Kernel, g: Kernel) -> Optional[Kernel]:
    """The unique effect a with a.f = g, or None if f and g are not in the
    same orbit.  Candidate-then-verify: a := mass(f)^-1 . mass(g) is the only
    possibility because the scalar action is free."""
    if f.dom != g.dom or f.cod != g.cod or f.inst.id != g.inst.id:
        raise TypeMismatch("equivalence requires parallel kernels")
    m_inv, witness = try_effect_inverse(mass(f))
    if m_inv is None:
        raise NotNormalizable(
            f"mass of left kernel not invertible at {elem_to_str(witness)}",
            witness=witness,
        )
    candidate = effect_mul(m_inv, mass(g))
    if scalar_action(candidate, f) == g:
        return candidate
    return None


def _require_effect(a: Kernel):
    if a.cod != UNIT:
        raise TypeMismatch("expected an effect (codomain I)")


# ---------------------------------------------------------------------------
# Enumeration / sampling of kernels


def enumerate_kernels(inst: MonadInstance, dom: FinSet, cod: FinSet) -> Iterator[Kernel]:
    values = list(inst.enumerate_values(cod))
    for combo in itertools.product(values, repeat=len(dom)):
        yield Kernel(inst, dom, cod, combo)


def sample_kernel(inst: MonadInstance, dom: FinSet, cod: FinSet, rng: random.Random) -> Kernel:
    return Kernel(inst, dom, cod, (inst.sample(cod, rng) for _ in dom))


# ---------------------------------------------------------------------------
# gs-monoidal law suite: comonoid + multiplicativity equations


def gs_law_report(inst: MonadInstance, objects: Sequence[FinSet]) -> CheckReport:
    """Check the commutative comonoid and multiplicativity equations for
    copy / discard on the given objects, by structural equality of composites."""
    name = f"gs_laws[{inst.id}]"

    def fail(equation, *objs):
        return CheckReport(
            name=name,
            passed=False,
            witness={"equation": equation, "objects": [o.name for o in objs]},
        )

    for x in objects:
        cp = copy_k(inst, x)
        ix = identity(inst, x)
        dl = discard_k(inst, x)
        if compose(tensor(cp, ix), cp) != compose(tensor(ix, cp), cp):
            return fail("coassociativity", x)
        if compose(tensor(dl, ix), cp) != ix:
            return fail("counit_left", x)
        if compose(tensor(ix, dl), cp) != ix:
            return fail("counit_right", x)
        if compose(swap_k(inst, x, x), cp) != cp:
            return fail("cocommutativity", x)
    for x, y in itertools.product(objects, repeat=2):
        xy = product([x, y])
        lhs = copy_k(inst, xy)
        mid = tensor(tensor(identity(inst, x), swap_k(inst, x, y)), identity(inst, y))
        rhs = compose(mid, tensor(copy_k(inst, x), copy_k(inst, y)))
        if lhs != rhs:
            return fail("copy_multiplicativity", x, y)
        if discard_k(inst, xy) != tensor(discard_k(inst, x), discard_k(inst, y)):
            return fail("discard_multiplicativity", x, y)
    if copy_k(inst, UNIT) != identity(inst, UNIT):
        return fail("copy_on_unit", UNIT)
    if discard_k(inst, UNIT) != identity(inst, UNIT):
        return fail("discard_on_unit", UNIT)
    return CheckReport(name=name, passed=True, note=f"{len(list(objects))} objects")
