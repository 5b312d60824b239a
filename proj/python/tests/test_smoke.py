import numpy as np
import pytest

import uniton


def test_integrate_and_obstruction():
    ok, g = uniton.integrate("1/(z+1)^2")
    assert ok and uniton.normalize(g) == uniton.normalize("-1/(z+1)")
    ok, rem = uniton.integrate("1/z")
    assert not ok and uniton.normalize(rem) == uniton.normalize("1/z")


def test_types_and_bounds():
    assert uniton.types(3) == [[2, 1, 0], [1, 1, 0], [1, 0, 0], [0, 0, 0]]
    assert len(uniton.bound_table()) == 9
    assert uniton.bound_table()[-1] == ("E_8", "29")
    assert uniton.uniton_bound("SU_4") == 3
    with pytest.raises(uniton.InputError):
        uniton.uniton_bound("Q_3")


def test_canonical_plane():
    pot = uniton.solve_canonical([2, 1, 0], {"0,1": "z", "1,2": "z^2"})
    assert len(pot["B"]) == 2
    W = uniton.model_plane([2, 1, 0], {"0,1": "z", "1,2": "z^2"})
    assert uniton.check_ces(W)
    assert uniton.uniton_width(W) == 2
    assert uniton.pluecker_degree(W) >= 1
    with pytest.raises(uniton.InputError):
        uniton.solve_canonical([2, 1, 0], {"0,1": "1/z", "1,2": "z"})


def test_phi_is_unitary_and_matches_eells_wood():
    W = uniton.cpn_plane(["z", "1"], 0)
    for z in (0.3 + 0.2j, -1 + 0.5j):
        p = uniton.phi(W, z)
        assert p.shape == (2, 2)
        assert np.allclose(p.conj().T @ p, np.eye(2), atol=1e-12)
        assert np.allclose(uniton.eells_wood(["z", "1"], 0, z), p, atol=1e-9)


def test_residual_and_errors():
    W = uniton.cpn_plane(["z", "1"], 0)
    coarse = uniton.harmonic_residual(W, 0.5 + 0.3j, 0.1, 2)
    fine = uniton.harmonic_residual(W, 0.5 + 0.3j, 0.05, 4)
    assert set(coarse) == {"h", "max_residual", "mean_residual"}
    assert 3 < coarse["max_residual"] / fine["max_residual"] < 5
    pole = uniton.model_plane([1, 0, 0], {"0,1": "1/(z-1)", "0,2": "z"})
    with pytest.raises(uniton.NumericError):
        uniton.phi(pole, 1)
    with pytest.raises(ValueError):
        uniton.pluecker_degree("{not json")


def test_deform_report():
    r = uniton.deform("z", "z", "(z-1)*(z-2)", 4)
    assert r["passed"]
    assert r["degree"] == [2] * 5
    assert r["endpoint"]["width"] == 1
