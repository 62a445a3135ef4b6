import json
from fractions import Fraction

import pytest

from gsmon.errors import MalformedInput
from gsmon.finset import FinSet, product
from gsmon.jsonio import (
    dump_json,
    finset_from_json,
    finset_to_json,
    kernel_from_json,
    kernel_to_json,
    load_json,
    monoid_from_json,
    monoid_to_json,
    tvalue_from_json,
    tvalue_to_json,
)
from gsmon.kernels import Kernel
from gsmon.monads import get_instance
from gsmon.monoid import get_monoid

X = FinSet.of("X", ["x0", "x1"])
Y = FinSet.of("Y", ["y0", "y1"])


def test_finset_round_trip():
    data = finset_to_json(X)
    assert data == {"name": "X", "elements": ["x0", "x1"]}
    assert finset_from_json(data) == X


def test_monoid_round_trip():
    m = get_monoid("Z2xZ2")
    assert monoid_from_json(monoid_to_json(m)) == m


@pytest.mark.parametrize(
    "monad_id,payload",
    [
        ("M", (Fraction(0), Fraction(5, 3))),
        ("M*", (Fraction(1, 2), Fraction(2))),
        ("D", (Fraction(1, 4), Fraction(3, 4))),
        ("F", (-2, 3)),
        ("P", frozenset({("x0",)})),
        ("P", frozenset()),
        ("P*", frozenset({("x0",), ("x1",)})),
        ("writer:Z2", ("1", ("x1",))),
        ("Id", ("x0",)),
    ],
)
def test_tvalue_round_trip(monad_id, payload):
    inst = get_instance(monad_id)
    t = inst.make(X, payload)
    data = tvalue_to_json(t)
    assert data["monad"] == inst.id
    assert tvalue_from_json(data, inst=inst, base=X) == t


def test_measure_json_omits_zeros():
    m = get_instance("M")
    t = m.make(X, (Fraction(0), Fraction(2)))
    assert tvalue_to_json(t)["entries"] == {"x1": "2"}


def test_kernel_round_trip():
    mstar = get_instance("M*")
    cod = product([X, Y])
    k = Kernel(
        mstar,
        FinSet.of("A", ["a0"]),
        cod,
        [mstar.make(cod, (Fraction(1), Fraction(2), Fraction(0), Fraction(3)))],
    )
    again, factors = kernel_from_json(kernel_to_json(k))
    assert again == k
    assert factors is None


def test_kernel_with_factor_codomain():
    data = {
        "monad": "M",
        "dom": {"name": "A", "elements": ["a0"]},
        "cod": {
            "factors": [
                {"name": "X", "elements": ["x0", "x1"]},
                {"name": "Y", "elements": ["y0", "y1"]},
            ]
        },
        "columns": {"a0": {"entries": {"x0,y0": "1/2", "x1,y1": "1/2"}}},
    }
    k, factors = kernel_from_json(data)
    assert [f.name for f in factors] == ["X", "Y"]
    assert k.cod == product([X, Y])
    assert k(("a0",)).payload[0] == Fraction(1, 2)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("columns"),
        lambda d: d["columns"].pop("a0"),
        lambda d: d["columns"]["a0"]["entries"].update({"zz": "1"}),
        lambda d: d["columns"]["a0"]["entries"].update({"x0,y0": "1.5"}),
        lambda d: d.update({"monad": "bogus"}),
    ],
)
def test_malformed_kernels_rejected(mutate):
    data = {
        "monad": "M",
        "dom": {"name": "A", "elements": ["a0"]},
        "cod": {
            "factors": [
                {"name": "X", "elements": ["x0", "x1"]},
                {"name": "Y", "elements": ["y0", "y1"]},
            ]
        },
        "columns": {"a0": {"entries": {"x0,y0": "1/2"}}},
    }
    mutate(data)
    with pytest.raises(Exception):
        kernel_from_json(data)


def test_dump_and_load(tmp_path):
    path = str(tmp_path / "doc.json")
    text = dump_json({"b": 1, "a": [True, None]}, path)
    assert text.endswith("\n")
    assert load_json(path) == json.loads(text)
    with pytest.raises(MalformedInput):
        load_json(str(tmp_path / "missing.json"))


def test_dump_is_key_sorted():
    assert dump_json({"b": 1, "a": 2}).index('"a"') < dump_json({"b": 1, "a": 2}).index('"b"')
