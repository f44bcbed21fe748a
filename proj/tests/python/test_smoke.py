import math

import pytest

import ifdist


def test_exponential():
    d = ifdist.parse("exponential(c=1)")
    assert d.subfamily == "IF2"
    assert math.isinf(d.p)
    assert ifdist.cdf(d, 1.0) == pytest.approx(1 - math.exp(-1), rel=1e-14)
    assert ifdist.entropy("exponential(c=1)") == pytest.approx(1.0, abs=1e-14)
    assert ifdist.quantile(d, 1 - math.exp(-1)) == pytest.approx(1.0, rel=1e-14)


def test_params_and_specs():
    d = ifdist.IFParams(p=0, b=1, c=1, q=1, x0=0)
    assert ifdist.pdf(d, 1.0) == pytest.approx(0.25)
    assert ifdist.parse(repr(d)) == d
    assert ifdist.resolve("pareto1", {"q": 2, "x0": 1}) == ifdist.parse("if(p=0,b=1,c=1,q=2,x0=1)")
    with pytest.raises(ValueError):
        ifdist.IFParams(p=0, b=0, c=1, q=1, x0=0)
    with pytest.raises(ValueError):
        ifdist.parse("nosuch(c=1)")
    with pytest.raises(ValueError):
        ifdist.quantile(d, 1.5)


def test_moments():
    assert ifdist.moment("pareto1(q=2,x0=1)", 1) == ("finite", pytest.approx(2.0), "closed-form")
    assert ifdist.moment("if(p=0,b=1,c=1,q=1,x0=0)", 1)[0] == "divergent"
    assert ifdist.moment("if(p=2,b=3,c=1,q=2,x0=0)", 1)[0] == "no-closed-form"
    kind, value, method = ifdist.moment("if(p=2,b=3,c=1,q=2,x0=0)", 1, fallback=True)
    assert (kind, method) == ("finite", "quadrature")
    assert value == pytest.approx(0.9474894098882677, rel=1e-9)


def test_sampling_is_seeded():
    a = ifdist.sample("lomax(c=1,q=3)", 1000, seed=5)
    assert a == ifdist.sample("lomax(c=1,q=3)", 1000, seed=5)
    assert len(a) == 1000 and min(a) > 0


def test_registry_and_verify():
    names = ifdist.cases()
    assert len(names) == 16 and "stoppa" in names
    report = ifdist.verify("registry")
    assert report["summary"]["failed"] == 0
    assert set(report["checks"][0]) == {"id", "description", "expected", "actual", "tolerance", "pass"}
