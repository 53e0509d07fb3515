"""Smoke test for the python bindings: parse a scenario, propagate, compare."""

import math
import os
import sys
import tempfile

import _fscpy as fscpy

DATA = os.environ["FSC_DATA_DIR"]


def approx(a, b, tol):
    return abs(a - b) <= tol


def main():
    d = fscpy.Distribution.uniform(340.0, 460.0)
    assert approx(d.mean(), 400.0, 1e-12)
    assert approx(d.variance(), 1200.0, 1e-9)
    assert approx(d.pdf(400.0), 1.0 / 120.0, 1e-15)

    sc = fscpy.parse_scenario(os.path.join(DATA, "case1_free_sdof.scn"))
    assert sc.P == 5
    assert sc.dt == 0.005
    assert sc.T == 150.0 and sc.desk_T == 15.0
    assert sc.n_axes == 1 and sc.quad_counts == [100]

    res = fscpy.propagate(sc)
    t = res["t"]
    assert len(t) == round(sc.desk_T / sc.dt) + 1
    mean_u = res["mean_u"][0]

    ref = [
        fscpy.exact_free_sdof(sc.mass, 340.0, 460.0, 0.05, 0.2, ti)["mean_u"]
        for ti in t
    ]
    eg = fscpy.global_error(mean_u, ref, sc.dt, sc.desk_T)
    assert eg <= 1e-5, eg

    mc = fscpy.monte_carlo(sc, 2000, seed=7)
    dev = max(abs(a - b) for a, b in zip(mean_u, mc["mean_u"][0]))
    band = 5.0 * math.sqrt(max(mc["var_u"][0]) / 2000.0)
    assert dev <= band, (dev, band)

    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "run")
        assert fscpy.run_scenario(sc, out) == 0
        assert os.path.exists(os.path.join(out, "moments_fsc.csv"))
        assert os.path.exists(os.path.join(out, "run.json"))

    try:
        fscpy.parse_scenario(os.path.join(DATA, "no_such_file.scn"))
    except fscpy.ScenarioParseError:
        pass
    else:
        raise AssertionError("expected ScenarioParseError")

    print("python smoke test passed")


if __name__ == "__main__":
    sys.exit(main())
