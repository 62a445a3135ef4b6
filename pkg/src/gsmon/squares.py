"""Commutative-square and pullback checkers.

Three named squares are supported: the associativity square of the lax
structure maps, the strongly-affine square (unit vs. strength) and the
positivity square (discard vs. strength).  Corners are finite products of
plain finite sets and T-carriers; pullbacks are checked exhaustively where
every corner is enumerable, and otherwise by seeded sampling of compatible
cones combined with a per-instance mediating-element solver whose output is
always re-verified against both projection equations.

A randomized "pass" means "no counterexample found in N trials", never a
proof.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .errors import NoSolverForRandomized, NotEnumerable
from .finset import FinSet, UNIT, fun_from_callable, product, projection_fun
from .kernels import Kernel, enumerate_kernels, sample_kernel, try_effect_inverse
from .monads import (
    MonadInstance,
    SAMPLE_DEN_MAX,
    SAMPLE_NUM_MAX,
    TValue,
    classification_of,
)
from .report import CheckReport


@dataclass(frozen=True)
class Component:
    kind: str  # "set" | "T"
    space: FinSet


@dataclass
class Square:
    """Four corners (tuples of components) and four edge maps.

    Edges map corner values (tuples aligned with the corner components) to
    corner values: top TL->TR, left TL->BL, right TR->BR, bottom BL->BR.
    """

    name: str
    inst: MonadInstance
    tl: tuple
    tr: tuple
    bl: tuple
    br: tuple
    top: Callable
    left: Callable
    right: Callable
    bottom: Callable
    cone_sampler: Optional[Callable] = None  # rng -> (u, v), always compatible
    solver: Optional[Callable] = None  # (u, v) -> mediating apex or None
    degenerate_apexes: list = field(default_factory=list)
    degenerate_cones: list = field(default_factory=list)


def _enumerate_corner(inst, corner) -> Iterator[tuple]:
    pools = []
    for comp in corner:
        if comp.kind == "set":
            pools.append(list(comp.space.elements))
        else:
            pools.append(list(inst.enumerate_values(comp.space)))
    return itertools.product(*pools)


def _sample_corner(inst, corner, rng, zero_prob=0.0) -> tuple:
    out = []
    for comp in corner:
        if comp.kind == "set":
            out.append(rng.choice(comp.space.elements))
        elif inst.has_zero and zero_prob and rng.random() < zero_prob:
            out.append(inst.zero(comp.space))
        else:
            out.append(inst.sample(comp.space, rng))
    return tuple(out)


def check_commutes(
    square: Square, mode: str = "exhaustive", trials: int = 500, seed: int = 42
) -> CheckReport:
    """Verify right(top(t)) == bottom(left(t)) over apex elements."""
    name = f"commutes[{square.name}]"

    def run(t):
        if square.right(square.top(t)) != square.bottom(square.left(t)):
            return CheckReport(
                name=name,
                passed=False,
                mode=mode,
                trials=trials if mode == "randomized" else 0,
                seed=seed if mode == "randomized" else None,
                witness={"apex": list(t)},
            )
        return None

    if mode == "exhaustive":
        for t in _enumerate_corner(square.inst, square.tl):
            bad = run(t)
            if bad:
                return bad
        return CheckReport(name=name, passed=True, mode="exhaustive")
    rng = random.Random(seed)
    for t in square.degenerate_apexes:
        bad = run(t)
        if bad:
            return bad
    for _ in range(trials):
        bad = run(_sample_corner(square.inst, square.tl, rng, zero_prob=0.1))
        if bad:
            return bad
    return CheckReport(name=name, passed=True, mode="randomized", trials=trials, seed=seed)


def check_pullback(
    square: Square, mode: str = "exhaustive", trials: int = 500, seed: int = 42
) -> CheckReport:
    """Decide (exhaustive) or probe (randomized) the pullback property."""
    name = f"pullback[{square.name}]"
    commute = check_commutes(square, mode=mode, trials=min(trials, 200), seed=seed)
    if not commute.passed:
        return CheckReport(
            name=name,
            passed=False,
            mode=commute.mode,
            trials=commute.trials,
            seed=commute.seed,
            witness=commute.witness,
            note="square does not commute; pullback not evaluated",
        )

    if mode == "exhaustive":
        apexes = list(_enumerate_corner(square.inst, square.tl))
        for u in _enumerate_corner(square.inst, square.tr):
            ru = square.right(u)
            for v in _enumerate_corner(square.inst, square.bl):
                if ru != square.bottom(v):
                    continue
                found = [
                    t for t in apexes if square.top(t) == u and square.left(t) == v
                ]
                if len(found) != 1:
                    return CheckReport(
                        name=name,
                        passed=False,
                        mode="exhaustive",
                        witness={
                            "cone": [list(u), list(v)],
                            "mediators": len(found),
                        },
                    )
        return CheckReport(name=name, passed=True, mode="exhaustive")

    if square.cone_sampler is None or square.solver is None:
        raise NoSolverForRandomized(
            f"{square.name}: randomized pullback check needs a cone sampler and a solver"
        )
    rng = random.Random(seed)
    cones = list(square.degenerate_cones)
    total = len(cones) + trials
    for i in range(total):
        u, v = cones[i] if i < len(cones) else square.cone_sampler(rng)
        assert square.right(u) == square.bottom(v), "cone sampler produced an incompatible cone"
        t = square.solver(u, v)
        if t is None:
            return CheckReport(
                name=name,
                passed=False,
                mode="randomized",
                trials=total,
                seed=seed,
                witness={"cone": [list(u), list(v)], "mediators": 0},
            )
        assert square.top(t) == u and square.left(t) == v, "solver output fails projections"
    return CheckReport(
        name=name,
        passed=True,
        mode="randomized",
        trials=total,
        seed=seed,
        note=f"no counterexample found in {total} solver-verified cones",
    )


# ---------------------------------------------------------------------------
# Square builders


def _scale(inst, t: TValue, factor: Fraction) -> TValue:
    return inst.make(t.base, tuple(v * factor for v in t.payload))


def _nonzero_scalar(rng) -> Fraction:
    return Fraction(rng.randint(1, SAMPLE_NUM_MAX), rng.randint(1, SAMPLE_DEN_MAX))


def _search_solver(square_ref: list):
    """Fallback mediator search over an enumerable apex corner."""

    def solver(u, v):
        square = square_ref[0]
        found = [
            t
            for t in _enumerate_corner(square.inst, square.tl)
            if square.top(t) == u and square.left(t) == v
        ]
        return found[0] if len(found) == 1 else None

    return solver


def assoc_square(inst: MonadInstance, x: FinSet, y: FinSet, z: FinSet) -> Square:
    """The associativity square of c on (X, Y, Z), with flattened products."""
    c = inst.lax_c
    yz = product([y, z])
    xy = product([x, y])

    top = lambda t: (t[0], c(t[1], t[2]))
    left = lambda t: (c(t[0], t[1]), t[2])
    right = lambda u: (c(u[0], u[1]),)
    bottom = lambda v: (c(v[0], v[1]),)

    def sampler(rng):
        if inst.has_zero and rng.random() < 0.15:
            # The degenerate region where M fails: both legs hit the zero
            # measure while their non-zero halves cannot share a factor.
            p = c(inst.sample(y, rng), inst.sample(z, rng))
            q = c(inst.sample(x, rng), inst.sample(y, rng))
            if any(vv != 0 for vv in p.payload) and any(vv != 0 for vv in q.payload):
                return (inst.zero(x), p), (q, inst.zero(z))
        tx, ty, tz = inst.sample(x, rng), inst.sample(y, rng), inst.sample(z, rng)
        u = top((tx, ty, tz))
        v = left((tx, ty, tz))
        if inst.measure_like:
            lam = _nonzero_scalar(rng)
            mu = _nonzero_scalar(rng)
            try:
                u = (_scale(inst, u[0], lam), _scale(inst, u[1], 1 / lam))
                v = (_scale(inst, v[0], mu), _scale(inst, v[1], 1 / mu))
            except Exception:
                u = top((tx, ty, tz))
                v = left((tx, ty, tz))
        return u, v

    def measure_solver(u, v):
        """Mediating triple for measure-like instances.

        The X and Z components are forced by the projections; the Y
        component is pinned by any non-zero coordinate of t_z (or of t_x),
        then verified globally against both equations.
        """
        t_x, t_yz = u
        t_xy, t_z = v
        by_vals = None
        z0 = next((i for i, vv in enumerate(t_z.payload) if vv != 0), None)
        if z0 is not None:
            zc = t_z.payload[z0]
            z_elem = z.elements[z0]
            by_vals = tuple(
                t_yz.payload[yz.index(ye + z_elem)] / zc for ye in y.elements
            )
        else:
            x0 = next((i for i, vv in enumerate(t_x.payload) if vv != 0), None)
            if x0 is None:
                # t_x = 0 and t_z = 0: any Y value mediates, so the
                # mediator is not unique (or none exists); report failure.
                return None
            xc = t_x.payload[x0]
            x_elem = x.elements[x0]
            by_vals = tuple(
                t_xy.payload[xy.index(x_elem + ye)] / xc for ye in y.elements
            )
        try:
            by = inst.make(y, by_vals)
        except Exception:
            return None
        t = (t_x, by, t_z)
        if top(t) == u and left(t) == v:
            return t
        return None

    square = Square(
        name=f"assoc[{inst.id};{len(x)},{len(y)},{len(z)}]",
        inst=inst,
        tl=(Component("T", x), Component("T", y), Component("T", z)),
        tr=(Component("T", x), Component("T", yz)),
        bl=(Component("T", xy), Component("T", z)),
        br=(Component("T", product([x, y, z])),),
        top=top,
        left=left,
        right=right,
        bottom=bottom,
        cone_sampler=sampler,
    )
    if inst.measure_like:
        square.solver = measure_solver
        if inst.has_zero:
            # Deterministic first cone: the textbook counterexample shape
            # ((0, p), (q, 0)) with p, q non-zero.
            p = c(inst.unit(y, y.elements[0]), inst.unit(z, z.elements[0]))
            q = c(inst.unit(x, x.elements[0]), inst.unit(y, y.elements[0]))
            square.degenerate_cones = [((inst.zero(x), p), (q, inst.zero(z)))]
    elif inst.enumerable:
        ref = [square]
        square.solver = _search_solver(ref)
    return square


def strong_affine_square(inst: MonadInstance, x: FinSet, y: FinSet) -> Square:
    """Unit-vs-strength square: X x TY -> T(X x Y) over X -> TX."""
    xy = product([x, y])
    proj1 = projection_fun([x, y], [0])
    proj2 = projection_fun([x, y], [1])

    top = lambda t: (inst.strength(x, t[0], t[1]),)
    left = lambda t: (t[0],)
    right = lambda u: (inst.map(proj1, u[0]),)
    bottom = lambda v: (inst.unit(x, v[0]),)

    def sampler(rng):
        xe = rng.choice(x.elements)
        ty = inst.sample(y, rng)
        return ((inst.strength(x, xe, ty),), (xe,))

    def marginal_solver(u, v):
        xe = v[0]
        ty = inst.map(proj2, u[0])
        t = (xe, ty)
        if top(t) == u:
            return t
        return None

    square = Square(
        name=f"strong_affine[{inst.id};{len(x)},{len(y)}]",
        inst=inst,
        tl=(Component("set", x), Component("T", y)),
        tr=(Component("T", xy),),
        bl=(Component("set", x),),
        br=(Component("T", x),),
        top=top,
        left=left,
        right=right,
        bottom=bottom,
        cone_sampler=sampler,
        solver=marginal_solver,
    )
    if inst.has_zero:
        square.degenerate_apexes = [(x.elements[0], inst.zero(y))]
    if inst.enumerable:
        ref = [square]
        square.solver = _search_solver(ref)
    return square


def positivity_square(inst: MonadInstance, x: FinSet, y: FinSet) -> Square:
    """Discard-vs-strength square; commutes by naturality of the strength.

    The corner T(X x 1) is TX on the nose because products are strict.
    """
    proj1 = projection_fun([x, y], [0])
    del_y = fun_from_callable(y, UNIT, lambda e: ())

    top = lambda t: (inst.strength(x, t[0], t[1]),)
    left = lambda t: (t[0], inst.map(del_y, t[1]))
    right = lambda u: (inst.map(proj1, u[0]),)
    bottom = lambda v: (inst.strength(x, v[0], v[1]),)

    square = Square(
        name=f"positivity[{inst.id};{len(x)},{len(y)}]",
        inst=inst,
        tl=(Component("set", x), Component("T", y)),
        tr=(Component("T", product([x, y])),),
        bl=(Component("set", x), Component("T", UNIT)),
        br=(Component("T", x),),
        top=top,
        left=left,
        right=right,
        bottom=bottom,
    )
    if inst.enumerable:
        ref = [square]
        square.solver = _search_solver(ref)
    return square


def build_square(kind: str, inst: MonadInstance, sizes: Sequence[int]) -> Square:
    sets = [
        FinSet.of(f"S{i}", [f"s{i}_{j}" for j in range(1, n + 1)])
        for i, n in enumerate(sizes, start=1)
    ]
    if kind == "assoc":
        if len(sets) != 3:
            raise NotEnumerable("assoc square needs three sizes")
        return assoc_square(inst, *sets)
    if kind in ("strong-affine", "strong_affine"):
        return strong_affine_square(inst, *sets[:2])
    if kind == "positivity":
        return positivity_square(inst, *sets[:2])
    raise NotEnumerable(f"unknown square kind {kind!r}")


# ---------------------------------------------------------------------------
# Theorem harness: weak affinity <=> effect groups <=> assoc pullbacks


def theorem_harness(
    inst: MonadInstance,
    size_triples: Sequence[Sequence[int]],
    mode: str = "exhaustive",
    trials: int = 500,
    seed: int = 42,
) -> CheckReport:
    """Independently evaluate the three equivalent conditions and require
    the verdicts to agree:

    1. the internal monoid T1 is a group (classification);
    2. every effect X -> I is invertible in the effect monoid, for each
       object size occurring in the triples;
    3. the associativity square is a pullback for every size triple.
    """
    sub = []

    cls = classification_of(inst)
    verdict1 = cls.weakly_affine
    sub.append(
        CheckReport(
            name="condition1_t1_group",
            passed=True,
            mode="direct",
            witness=None if verdict1 else cls.witness,
            note=f"T1 group: {verdict1} ({cls.evidence})",
        )
    )

    rng = random.Random(seed)
    verdict2 = True
    witness2 = None
    obj_sizes = sorted({n for triple in size_triples for n in triple})
    for n in obj_sizes:
        obj = FinSet.of(f"X{n}", [f"x{i}" for i in range(1, n + 1)])
        if inst.enumerable:
            effects = enumerate_kernels(inst, obj, UNIT)
        else:
            candidates = []
            if inst.has_zero:
                candidates.append(
                    Kernel(inst, obj, UNIT, (inst.zero(UNIT),) * len(obj))
                )
            candidates.extend(
                sample_kernel(inst, obj, UNIT, rng) for _ in range(max(1, trials // max(1, len(obj_sizes))))
            )
            effects = candidates
        for a in effects:
            inv, bad_at = try_effect_inverse(a)
            if inv is None:
                verdict2 = False
                witness2 = {"effect": a, "no_inverse_at": bad_at}
                break
        if not verdict2:
            break
    sub.append(
        CheckReport(
            name="condition2_effect_groups",
            passed=True,
            mode="exhaustive" if inst.enumerable else "randomized",
            seed=None if inst.enumerable else seed,
            witness=witness2,
            note=f"all effects invertible: {verdict2}",
        )
    )

    verdict3 = True
    witness3 = None
    for triple in size_triples:
        square = build_square("assoc", inst, list(triple))
        result = check_pullback(square, mode=mode, trials=trials, seed=seed)
        sub.append(result)
        if not result.passed:
            verdict3 = False
            witness3 = result.witness
            break
    verdicts = {
        "t1_group": verdict1,
        "effect_groups": verdict2,
        "assoc_pullback": verdict3,
    }
    agree = verdict1 == verdict2 == verdict3
    return CheckReport(
        name=f"theorem_harness[{inst.id}]",
        passed=agree,
        mode=mode,
        trials=trials if mode == "randomized" else 0,
        seed=seed,
        witness=None if agree else verdicts,
        note="; ".join(f"{k}={v}" for k, v in verdicts.items()),
        subreports=sub,
    )
