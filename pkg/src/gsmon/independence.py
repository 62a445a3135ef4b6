"""Marginals and conditional-independence checkers.

A kernel f : A -> X1 (x) ... (x) Xn exhibits conditional independence (CI)
of a partition of its output coordinates when it is a copy followed by a
tensor of factor kernels, one per block.  Three decision procedures are
provided: the equivalence method (weakly Markov instances: f is CI iff it is
a scalar multiple of the product of its marginals), an exact rank-one outer
product test for measure-like payloads, and brute-force factor search for
enumerable instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidBlock, MethodInapplicable, TypeMismatch
from .finset import FinSet, fun_from_callable, product, projection_fun
from .kernels import (
    Kernel,
    compose,
    copy_k,
    equivalent,
    from_columns,
    lift,
    mass,
    scalar_action,
    tensor_all,
)
from .monads import classification_of
from .report import CheckReport

Partition = Sequence[Sequence[int]]


def _check_factors(f: Kernel, factors: Sequence[FinSet]):
    if product(list(factors)) != f.cod:
        raise InvalidBlock("factors do not multiply to the kernel codomain")


def _check_partition(partition: Partition, n: int):
    seen = sorted(i for block in partition for i in block)
    if not partition or any(not block for block in partition):
        raise InvalidBlock("partition blocks must be nonempty")
    if seen != list(range(n)):
        raise InvalidBlock("partition must cover each coordinate exactly once")


def marginal(f: Kernel, factors: Sequence[FinSet], block: Sequence[int]) -> Kernel:
    """Discard every output coordinate outside `block`."""
    _check_factors(f, factors)
    block = list(block)
    if any(not 0 <= i < len(factors) for i in block) or len(set(block)) != len(block):
        raise InvalidBlock(f"bad coordinate block {block}")
    proj = projection_fun(list(factors), block)
    return compose(lift(f.inst, proj), f)


def copy_n(inst, a: FinSet, n: int) -> Kernel:
    """The n-fold copy A -> A x ... x A (n = 0 gives discard)."""
    cod = product([a] * n)
    return from_columns(inst, a, cod, lambda e: inst.unit(cod, e * n))


def _reorder(k: Kernel, factors: Sequence[FinSet], partition: Partition) -> Kernel:
    """Postcompose with the base permutation sending the blocks-flattened
    coordinate order back to the original coordinate order."""
    flat = [i for block in partition for i in block]
    if flat == sorted(flat):
        return k
    spans = {}
    pos = 0
    for i in flat:
        width = factors[i].arity
        spans[i] = (pos, pos + width)
        pos += width
    cod = product(list(factors))
    perm = fun_from_callable(
        k.cod,
        cod,
        lambda e: sum((e[spans[i][0]: spans[i][1]] for i in range(len(factors))), ()),
    )
    return compose(lift(k.inst, perm), k)


def product_of_factors(
    f: Kernel,
    factors: Sequence[FinSet],
    factor_kernels: Sequence[Kernel],
    partition: Partition,
) -> Kernel:
    """Assemble copy;(g_1 (x) ... (x) g_n) and reorder to coordinate order."""
    inst = f.inst
    a = f.dom
    tens = tensor_all(list(factor_kernels))
    assembled = compose(tens, copy_n(inst, a, len(factor_kernels)))
    return _reorder(assembled, factors, partition)


def product_of_marginals(
    f: Kernel, factors: Sequence[FinSet], partition: Partition
) -> Kernel:
    """The product of the per-block marginals of f, in coordinate order."""
    _check_factors(f, factors)
    _check_partition(partition, len(factors))
    margs = [marginal(f, factors, block) for block in partition]
    return product_of_factors(f, factors, margs, partition)


@dataclass
class CIResult:
    holds: bool
    method: str  # equivalence | rank1 | exhaustive_search | n2_equation
    certificate: list = field(default_factory=list)  # factor kernels when holds
    scalar: Optional[Kernel] = None
    witness: object = None

    def to_json(self) -> dict:
        from .report import show

        return {
            "holds": self.holds,
            "method": self.method,
            "certificate": [show(k) for k in self.certificate],
            "scalar": show(self.scalar),
            "witness": show(self.witness),
        }


def _verify_certificate(f: Kernel, factors, result: CIResult, partition: Partition):
    if not result.holds or not result.certificate:
        return
    rebuilt = product_of_factors(f, factors, result.certificate, partition)
    if rebuilt != f:
        raise AssertionError("CI certificate does not reproduce the kernel")


def check_ci(
    f: Kernel,
    factors: Sequence[FinSet],
    partition: Partition,
    method: str = "auto",
) -> CIResult:
    """Decide conditional independence of the partitioned outputs given the input."""
    _check_factors(f, factors)
    _check_partition(partition, len(factors))
    inst = f.inst

    if method == "auto":
        if classification_of(inst).weakly_affine:
            method = "equivalence"
        elif inst.measure_like:
            method = "rank1"
        elif inst.enumerable:
            method = "exhaustive"
        else:
            raise MethodInapplicable(f"no CI method applies to {inst.id}")

    if method == "equivalence":
        result = _ci_equivalence(f, factors, partition)
    elif method == "rank1":
        result = _ci_rank1(f, factors, partition)
    elif method == "exhaustive":
        result = _ci_exhaustive(f, factors, partition)
    else:
        raise MethodInapplicable(f"unknown CI method {method!r}")
    _verify_certificate(f, factors, result, partition)
    return result


def _ci_equivalence(f: Kernel, factors, partition) -> CIResult:
    if not classification_of(f.inst).weakly_affine:
        raise MethodInapplicable(
            f"equivalence method requires a weakly Markov instance, not {f.inst.id}"
        )
    margs = [marginal(f, factors, block) for block in partition]
    p = product_of_factors(f, factors, margs, partition)
    a = equivalent(p, f)
    if a is None:
        return CIResult(False, "equivalence", witness="not a scalar multiple of the product of marginals")
    # Attach the scalar to the last factor so the certificate replays exactly.
    cert = list(margs[:-1]) + [scalar_action(a, margs[-1])]
    return CIResult(True, "equivalence", certificate=cert, scalar=a)


def _block_sets(factors, partition):
    return [product([factors[i] for i in block]) for block in partition]


def _ci_rank1(f: Kernel, factors, partition) -> CIResult:
    """Exact outer-product test, columnwise.

    A nonnegative table t over blocks of sizes s_1..s_n is an outer product
    iff it is zero, or for the first nonzero pivot index i*,
    t[j] * t[i*]^(n-1) equals the product over k of t[i* with slot k := j_k].
    The pivot slices then give exact factor vectors.
    """
    if not f.inst.measure_like:
        raise MethodInapplicable(f"rank1 method needs a measure-like payload, not {f.inst.id}")
    inst = f.inst
    blocks = _block_sets(factors, partition)
    n = len(blocks)
    sizes = [len(b) for b in blocks]
    spans = []
    pos = 0
    for fct in factors:
        spans.append((pos, pos + fct.arity))
        pos += fct.arity

    def to_block_index(elem):
        # index of a codomain element in the blocks-ordered table
        idx = []
        for block in partition:
            key = sum((elem[spans[i][0]: spans[i][1]] for i in block), ())
            idx.append(blocks[len(idx)].index(key))
        return tuple(idx)

    table_order = list(itertools.product(*(range(s) for s in sizes)))
    factor_columns = [[] for _ in range(n)]
    for col in f.columns:
        t = {}
        for elem, v in zip(f.cod.elements, col.payload):
            t[to_block_index(elem)] = v
        pivot = next((j for j in table_order if t[j] != 0), None)
        if pivot is None:
            # Zero column: CI holds; use the zero measure as first factor.
            if inst.id == "M*":  # unreachable: M* values are never zero
                raise AssertionError("zero column in M*")
            vecs = [[Fraction(0)] * sizes[0]]
            for k in range(1, n):
                vecs.append([Fraction(1 if i == 0 else 0) for i in range(sizes[k])])
        else:
            s = t[pivot]
            for j in table_order:
                prod = Fraction(1)
                for k in range(n):
                    swapped = pivot[:k] + (j[k],) + pivot[k + 1:]
                    prod *= t[swapped]
                if t[j] * s ** (n - 1) != prod:
                    return CIResult(
                        False,
                        "rank1",
                        witness={
                            "column": "outer-product identity fails",
                            "index": [blocks[k].elements[j[k]] for k in range(n)],
                        },
                    )
            vecs = []
            for k in range(n):
                slice_k = [
                    t[pivot[:k] + (i,) + pivot[k + 1:]] for i in range(sizes[k])
                ]
                vecs.append(slice_k)
            if inst.id == "D":
                # Factors must themselves be distributions; each pivot slice
                # is proportional to the true factor, so renormalize.
                vecs = [[v / sum(vec) for v in vec] for vec in vecs]
            else:
                # Rescale the first factor so the product reproduces t exactly.
                scale = s ** (n - 1)
                vecs[0] = [v / scale for v in vecs[0]]
        for k in range(n):
            factor_columns[k].append(inst.make(blocks[k], tuple(vecs[k])))
    cert = [
        Kernel(inst, f.dom, blocks[k], factor_columns[k]) for k in range(n)
    ]
    return CIResult(True, "rank1", certificate=cert)


def _ci_exhaustive(f: Kernel, factors, partition) -> CIResult:
    if not f.inst.enumerable:
        raise MethodInapplicable(f"exhaustive CI search needs an enumerator ({f.inst.id})")
    inst = f.inst
    blocks = _block_sets(factors, partition)
    n = len(blocks)
    # Reorder the target into blocks order once, then search per column.
    spans = []
    pos = 0
    for fct in factors:
        spans.append((pos, pos + fct.arity))
        pos += fct.arity
    blocks_cod = product(blocks)
    to_blocks = fun_from_callable(
        f.cod,
        blocks_cod,
        lambda e: sum(
            (sum((e[spans[i][0]: spans[i][1]] for i in block), ()) for block in partition),
            (),
        ),
    )
    pools = [list(inst.enumerate_values(b)) for b in blocks]
    factor_columns = [[] for _ in range(n)]
    for x, col in zip(f.dom.elements, f.columns):
        target = inst.map(to_blocks, col)
        found = None
        for combo in itertools.product(*pools):
            acc = combo[0]
            for t in combo[1:]:
                acc = inst.lax_c(acc, t)
            if acc == target:
                found = combo
                break
        if found is None:
            return CIResult(False, "exhaustive_search", witness={"column": x})
        for k in range(n):
            factor_columns[k].append(found[k])
    cert = [Kernel(inst, f.dom, blocks[k], factor_columns[k]) for k in range(n)]
    return CIResult(True, "exhaustive_search", certificate=cert)


def check_ci_n2_equation(f: Kernel, factors: Sequence[FinSet]) -> bool:
    """The binary CI criterion for weakly Markov categories:
    f . mass(f) equals the pairing of the two marginals of f."""
    if len(factors) != 2:
        raise TypeMismatch("the n=2 equation needs a binary product codomain")
    _check_factors(f, factors)
    fx = marginal(f, factors, [0])
    fy = marginal(f, factors, [1])
    inst = f.inst
    a = f.dom
    lhs = compose(
        tensor_all([f, mass(f)]), copy_n(inst, a, 2)
    )  # cod (X x Y) x I = X x Y strictly
    rhs = compose(tensor_all([fx, fy]), copy_n(inst, a, 2))
    return lhs == rhs


def check_local_independence(
    f: Kernel, factors: Sequence[FinSet], method: str = "auto"
) -> CheckReport:
    """Localised independence: CI(XY|Z) and CI(X|YZ) jointly imply CI(X|Y|Z)."""
    _check_factors(f, factors)
    if len(factors) != 3:
        raise TypeMismatch("localised independence needs a ternary product codomain")
    prem1 = check_ci(f, factors, [[0, 1], [2]], method)
    prem2 = check_ci(f, factors, [[0], [1, 2]], method)
    name = f"local_independence[{f.inst.id}]"
    if not (prem1.holds and prem2.holds):
        return CheckReport(
            name=name,
            passed=True,
            mode="direct",
            note="vacuous-pass: premises do not both hold",
            witness={"ci_xy_z": prem1.holds, "ci_x_yz": prem2.holds},
        )
    conclusion = check_ci(f, factors, [[0], [1], [2]], method)
    return CheckReport(
        name=name,
        passed=conclusion.holds,
        mode="direct",
        note="premises hold",
        witness=None if conclusion.holds else conclusion.witness,
    )
