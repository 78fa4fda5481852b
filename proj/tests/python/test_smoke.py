import json
import os
from pathlib import Path

import numpy as np
import pytest

import lqca

FIXTURES = Path(os.environ.get("LQCA_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def fixture(name):
    return lqca.load(str(FIXTURES / f"{name}.json"))


def test_load_properties():
    a = fixture("qflip")
    assert a.symbols == ["a", "b"]
    assert a.neighborhood == [0, 1]
    assert a.radius == 2
    assert a.border_dim == 2
    assert abs(a.amplitude("bb", "b") + 2**-0.5) < 1e-12


def test_check_verdicts():
    assert lqca.check(fixture("qflip"))["verdict"] == "UNITARY"
    report = lqca.check(str(FIXTURES / "xor.json"))
    assert report["verdict"] == "NOT_UNITARY"
    assert report["witness"] == "1"
    assert lqca.check(fixture("leaky"), window=1)["verdict"] == "NOT_WELL_FORMED"


def test_border_vectors_and_closure():
    a = fixture("qflip")
    l, r = lqca.border_vectors(a)
    np.testing.assert_allclose(l, [1, 1], atol=1e-9)
    np.testing.assert_allclose(r, [1, 0], atol=1e-9)
    ops = lqca.transfer_operators(a)
    assert len(ops) == 2
    assert lqca.decide_closed(l, r, ops)["closed"]
    x = fixture("xor")
    xl, xr = lqca.border_vectors(x)
    verdict = lqca.decide_closed(xl, xr, lqca.transfer_operators(x))
    assert not verdict["closed"]
    assert verdict["witness"] == [1]


def test_row_norms():
    a = fixture("qflip")
    assert abs(lqca.row_norm_squared(a, "-1:b") - 1.0) < 1e-12
    assert abs(lqca.truncated_row_norm(a, {-1: "b"}, -3, 0) - 0.875) < 1e-12


def test_step_preserves_norm():
    terms = lqca.step(fixture("qflip"), "0:b", steps=3)
    assert abs(sum(abs(amp) ** 2 for _, amp in terms) - 1.0) < 1e-12
    first = lqca.step(fixture("qflip"), {0: "b"})
    assert {tuple(sorted(c.items())) for c, _ in first} == {((0, "b"),), ((-1, "b"), (0, "b"))}


def test_dynamic_basis():
    b = lqca.DynamicBasis(3)
    b.add(np.array([1.0, 0.0, 0.0]))
    assert b.member(np.array([2.0, 0.0, 0.0]))
    assert not b.member(np.array([0.0, 1.0, 0.0]))
    assert b.dim == 1
    with pytest.raises(ValueError):
        b.add(np.array([3.0, 0.0, 0.0]))


def test_parse_roundtrip_and_errors():
    a = fixture("qflip")
    again = lqca.parse(a.to_json())
    assert again.symbols == a.symbols
    assert lqca.validate(fixture("qflip"))["ok"]
    assert not lqca.validate(fixture("broken_quiescent"))["ok"]
    with pytest.raises(lqca.InputError):
        lqca.parse("{")
    assert json.loads(a.to_json())["quiescent"] == "a"
