"""Finite sets and functions: the cartesian base category.

Every element is a flattened tuple of atomic string labels.  Under that
representation the n-ary cartesian product is literal tuple concatenation,
which makes products strictly associative and strictly unital: the empty
product is the one-element set ``UNIT`` whose element is the empty tuple,
and ``product([X, UNIT])`` has exactly the same elements as ``X``.  All the
coherence isomorphisms the constructions below would otherwise need
(X x 1 = X, I x I = I, regrouping of triple products) are identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import EmptyCodomain, MalformedInput

Elem = tuple  # tuple of atomic string labels


class FinSet:
    """A named finite set with a fixed canonical element order.

    Equality and hashing ignore the name: two sets with the same element
    tuple are the same object of the base category.  All elements must have
    the same arity (atom count) so that products cannot collide.
    """

    __slots__ = ("name", "elements", "arity", "_index")

    def __init__(self, name: str, elements: Sequence[Elem]):
        elems = tuple(tuple(e) for e in elements)
        if len(set(elems)) != len(elems):
            raise MalformedInput(f"duplicate elements in set {name!r}")
        arities = {len(e) for e in elems}
        if len(arities) > 1:
            raise MalformedInput(f"mixed element arity in set {name!r}")
        self.name = name
        self.elements = elems
        self.arity = arities.pop() if arities else 0
        self._index = {e: i for i, e in enumerate(elems)}

    @classmethod
    def of(cls, name: str, labels: Sequence[str]) -> "FinSet":
        """Build an atomic set from plain string labels."""
        return cls(name, tuple((str(label),) for label in labels))

    def index(self, e: Elem) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise MalformedInput(f"{e!r} is not an element of {self.name}") from None

    def __contains__(self, e) -> bool:
        return e in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Elem]:
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FinSet({self.name!r}, {len(self)} elements)"


UNIT = FinSet("I", ((),))


def product(factors: Sequence[FinSet]) -> FinSet:
    """Cartesian product with lexicographic order; empty input gives UNIT."""
    factors = list(factors)
    if not factors:
        return UNIT
    names = [f.name for f in factors if f.arity > 0] or ["I"]
    name = "x".join(names)
    elements = tuple(
        sum(combo, ()) for combo in itertools.product(*(f.elements for f in factors))
    )
    return FinSet(name, elements)


@dataclass(frozen=True)
class FinFun:
    """A total function between finite sets, stored as codomain indices."""

    dom: FinSet
    cod: FinSet
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != len(self.dom):
            raise MalformedInput("function table size does not match domain")
        for i in self.mapping:
            if not 0 <= i < len(self.cod):
                raise MalformedInput("function index out of codomain range")

    def __call__(self, e: Elem) -> Elem:
        return self.cod.elements[self.mapping[self.dom.index(e)]]

    def compose(self, other: "FinFun") -> "FinFun":
        """self after other."""
        if other.cod != self.dom:
            raise MalformedInput("composition type mismatch")
        return FinFun(other.dom, self.cod, tuple(self.mapping[i] for i in other.mapping))


def fun_from_callable(dom: FinSet, cod: FinSet, fn: Callable[[Elem], Elem]) -> FinFun:
    return FinFun(dom, cod, tuple(cod.index(fn(e)) for e in dom))


def identity_fun(x: FinSet) -> FinFun:
    return FinFun(x, x, tuple(range(len(x))))


def swap_fun(x: FinSet, y: FinSet) -> FinFun:
    """The canonical iso X x Y -> Y x X on flattened tuples."""
    xy = product([x, y])
    yx = product([y, x])
    return fun_from_callable(xy, yx, lambda e: e[x.arity:] + e[: x.arity])


def pair_fun(f: FinFun, g: FinFun) -> FinFun:
    """f x g on flattened products."""
    dom = product([f.dom, g.dom])
    cod = product([f.cod, g.cod])
    cut = f.dom.arity
    return fun_from_callable(dom, cod, lambda e: f(e[:cut]) + g(e[cut:]))


def projection_fun(factors: Sequence[FinSet], keep: Sequence[int]) -> FinFun:
    """Project product(factors) onto the sub-product of the kept factor indices."""
    factors = list(factors)
    offsets = []
    pos = 0
    for f in factors:
        offsets.append((pos, pos + f.arity))
        pos += f.arity
    dom = product(factors)
    cod = product([factors[i] for i in keep])

    def pick(e: Elem) -> Elem:
        return sum((e[offsets[i][0]: offsets[i][1]] for i in keep), ())

    return fun_from_callable(dom, cod, pick)


def enumerate_functions(dom: FinSet, cod: FinSet) -> Iterator[FinFun]:
    """All |cod|^|dom| functions in deterministic lexicographic order."""
    if len(cod) == 0 and len(dom) > 0:
        raise EmptyCodomain(f"no functions {dom.name} -> empty set")
    for mapping in itertools.product(range(len(cod)), repeat=len(dom)):
        yield FinFun(dom, cod, mapping)


def elem_to_str(e: Elem) -> str:
    return ",".join(e) if e else "*"


def elem_from_str(text: str) -> Elem:
    if text == "*":
        return ()
    return tuple(text.split(","))
