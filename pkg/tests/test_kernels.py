import random
from fractions import Fraction

import pytest

from gsmon.errors import NotNormalizable, TypeMismatch
from gsmon.finset import FinSet, UNIT, product
from gsmon.kernels import (
    Kernel,
    compose,
    copy_k,
    discard_k,
    effect_mul,
    enumerate_kernels,
    equivalent,
    gs_law_report,
    identity,
    is_copyable,
    is_discardable,
    mass,
    normalize,
    pairing,
    sample_kernel,
    scalar_action,
    structural,
    tensor,
    try_effect_inverse,
)
from gsmon.monads import ALL_MONAD_IDS, get_instance

A = FinSet.of("A", ["a0"])
X = FinSet.of("X", ["x0", "x1"])
Y = FinSet.of("Y", ["y0", "y1"])

M = get_instance("M")
MSTAR = get_instance("M*")


def m_kernel(inst, dom, cod, rows):
    return Kernel(
        inst, dom, cod, [inst.make(cod, tuple(Fraction(v) for v in row)) for row in rows]
    )


def test_compose_is_matrix_product():
    f = m_kernel(M, A, X, [["1/2", "1/3"]])
    g = m_kernel(M, X, Y, [[1, 2], [0, 4]])
    h = compose(g, f)
    assert h(("a0",)).payload == (Fraction(1, 2), Fraction(7, 3))


def test_tensor_is_kronecker_product():
    f = m_kernel(M, A, X, [[2, 3]])
    g = m_kernel(M, A, Y, [["1/2", 0]])
    fg = tensor(f, g)
    assert fg.dom == product([A, A])
    assert fg(("a0", "a0")).payload == (Fraction(1), Fraction(0), Fraction(3, 2), Fraction(0))


def test_type_mismatch_raises():
    f = m_kernel(M, A, X, [[1, 0]])
    g = m_kernel(M, A, Y, [[1, 0]])
    with pytest.raises(TypeMismatch):
        compose(g, f)
    with pytest.raises(TypeMismatch):
        tensor(f, m_kernel(MSTAR, A, Y, [[1, 0]]))


def test_kernel_validates_columns_per_instance():
    with pytest.raises(Exception):
        m_kernel(MSTAR, A, X, [[0, 0]])
    with pytest.raises(Exception):
        m_kernel(get_instance("D"), A, X, [["1/2", "1/3"]])


def test_structural_kernels():
    cp = structural(M, "copy", X)
    assert cp(("x1",)).payload[product([X, X]).index(("x1", "x1"))] == 1
    assert structural(M, "discard", X) == discard_k(M, X)
    sw = structural(M, "swap", X, Y)
    assert sw(("x0", "y1")) == M.unit(product([Y, X]), ("y1", "x0"))
    with pytest.raises(TypeMismatch):
        structural(M, "bogus", X)


def test_lifted_functions_are_copyable_and_discardable():
    for monad_id in ALL_MONAD_IDS:
        inst = get_instance(monad_id)
        ident = identity(inst, X)
        assert is_copyable(ident)
        assert is_discardable(ident)


def test_random_measure_kernel_is_rarely_deterministic():
    f = m_kernel(M, A, X, [["1/2", "1/2"]])
    assert not is_copyable(f)
    assert is_discardable(f)
    g = m_kernel(M, A, X, [[1, 1]])
    assert not is_discardable(g)


@pytest.mark.parametrize("monad_id", ALL_MONAD_IDS)
def test_gs_laws_all_instances(monad_id):
    objs = [FinSet.of(f"S{n}", [f"s{n}_{i}" for i in range(1, n + 1)]) for n in (1, 2, 3)]
    report = gs_law_report(get_instance(monad_id), objs)
    assert report.passed, report.witness


def test_mass_and_effects():
    f = m_kernel(M, A, X, [[2, 3]])
    assert mass(f)(("a0",)).payload == (Fraction(5),)
    a = m_kernel(M, A, UNIT, [[2]])
    b = m_kernel(M, A, UNIT, [["1/2"]])
    assert effect_mul(a, b)(("a0",)).payload == (Fraction(1),)
    with pytest.raises(TypeMismatch):
        effect_mul(a, f)


def test_effect_inverse():
    a = m_kernel(M, A, UNIT, [[4]])
    inv, witness = try_effect_inverse(a)
    assert witness is None
    assert inv(("a0",)).payload == (Fraction(1, 4),)
    zero = m_kernel(M, A, UNIT, [[0]])
    inv, witness = try_effect_inverse(zero)
    assert inv is None and witness == ("a0",)


def test_normalize_splits_mass_and_normalization():
    f = m_kernel(MSTAR, A, X, [[1, 3]])
    m, n = normalize(f)
    assert m(("a0",)).payload == (Fraction(4),)
    assert n(("a0",)).payload == (Fraction(1, 4), Fraction(3, 4))
    assert is_discardable(n)
    assert scalar_action(m, n) == f


def test_normalize_raises_on_zero_column():
    f = m_kernel(M, A, X, [[0, 0]])
    with pytest.raises(NotNormalizable) as exc:
        normalize(f)
    assert exc.value.witness == ("a0",)


def test_equivalence_finds_the_unique_scalar():
    f = m_kernel(MSTAR, A, X, [[1, 2]])
    g = m_kernel(MSTAR, A, X, [[3, 6]])
    a = equivalent(f, g)
    assert a is not None
    assert a(("a0",)).payload == (Fraction(3),)
    assert scalar_action(a, f) == g
    h = m_kernel(MSTAR, A, X, [[1, 3]])
    assert equivalent(f, h) is None


def test_pairing_is_copy_then_tensor():
    w = get_instance("writer:Z3")
    ident = identity(w, X)
    assert pairing(ident, ident) == compose(tensor(ident, ident), copy_k(w, X))
    with pytest.raises(TypeMismatch):
        pairing(ident, identity(w, Y))


def test_enumerate_and_sample_kernels():
    w = get_instance("writer:Z2")
    ks = list(enumerate_kernels(w, X, Y))
    assert len(ks) == 16  # (2 labels x 2 elements)^|X|
    rng = random.Random(5)
    k = sample_kernel(M, X, Y, rng)
    assert k.dom == X and k.cod == Y
