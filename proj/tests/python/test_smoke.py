import pytest

import detsat


def test_polynomial_arithmetic():
    r = detsat.Ring(["x", "y"])
    f = r("x + y")
    assert str(f * f) == str(r("x^2 + 2*x*y + y^2"))
    assert (f * f).exact_divide(f) == f
    assert r("x^2 - y^2").exact_divide(r("x + 2*y")) is None


def test_colon_and_saturation():
    r = detsat.Ring(3, field="fp:32003")
    m = detsat.maximal_ideal(r)
    i = detsat.Ideal(r, ["x1^2", "x1*x2"])
    assert detsat.colon(i, "x1") == detsat.Ideal(r, ["x1", "x2"])
    sat, steps = detsat.saturate(detsat.intersect(i, m ** 3), m)
    assert sat == i
    assert steps >= 1
    assert detsat.height(detsat.Ideal(r, ["x1", "x2"])) == 2


def test_syzygies_pair_to_zero():
    r = detsat.Ring(2)
    gens = [r("x1^2"), r("x1*x2"), r("x2^2")]
    for syz in detsat.syzygies(gens):
        assert sum((a * g for a, g in zip(syz, gens)), r("0")).is_zero()


def test_cyclic_family_delta_m2():
    f = detsat.build(2)
    assert str(f.delta) == "x1^3 + x2^3 - 3*x1*x2*x3 + x3^3"
    assert f.beta == [1, 1, 1]
    s = detsat.strand_summary(f, 2)
    assert s["ranks"] == [6, 6, 1]


def test_verify_m2_passes():
    report = detsat.verify(2, timings=False)
    assert report["meta"]["field"] == "qq"
    assert report["checks"]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_bad_alpha_raises_input_error():
    with pytest.raises(detsat.InputError):
        detsat.build(2, alpha=[[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        detsat.verify(2, suites=["bogus"])
