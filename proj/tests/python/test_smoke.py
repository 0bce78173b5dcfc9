import math

import pytest

try:
    import diracsl as m
except ImportError:
    import _diracsl as m


def test_version():
    assert m.__version__


def test_free_two_node_spectrum():
    q = m.Potential.zero()
    w = m.DiracWeight(nodes=[1 / 3, 2 / 3], masses=[1.0, 1.0])
    out = m.spectrum(q, w)
    assert out["classification"] == "finite"
    assert out["method"] == "tridiag"
    ev = out["eigenvalues"]
    assert ev == pytest.approx([3.0, 9.0], abs=1e-9)
    assert out["hypotheses"]["h0"] is True
    assert out["hypotheses"]["h1"] is False


def test_charpoly_route_when_h_fails():
    q = m.Potential.constant(-9 * math.pi**2 / 4)
    w = m.DiracWeight(nodes=[0.25, 1 / 3], masses=[1.0, 1.0])
    out = m.spectrum(q, w)
    assert out["method"] == "charpoly"
    assert out["eigenvalues"] == pytest.approx([3 * math.sqrt(2) * math.pi], abs=1e-9)
    with pytest.raises(RuntimeError):
        m.spectrum(q, w, method="tridiag")


def test_all_complex_classification():
    q = m.Potential.constant(-4 * math.pi**2)
    w = m.DiracWeight(nodes=[0.5], masses=[1.0])
    out = m.spectrum(q, w)
    assert out["classification"] == "all_complex"
    assert out["eigenvalues"] == []
    assert out["hypotheses"]["h1"] is True


def test_basis_and_discriminant():
    basis = m.build_basis(m.Potential.zero())
    y, dy = basis.phi(0.3)
    assert y == pytest.approx(0.3, abs=1e-13)
    assert dy == pytest.approx(1.0, abs=1e-13)
    assert basis.case_tag == "I"
    assert basis.omega == pytest.approx(-1.0, abs=1e-13)
    assert m.discriminant(basis, 0.2, 0.7) == pytest.approx(0.5, abs=1e-13)


def test_weight_validation_is_a_value_error():
    with pytest.raises(ValueError):
        m.DiracWeight(nodes=[0.7, 0.3], masses=[1.0, 1.0])
    with pytest.raises(ValueError):
        m.DiracWeight(nodes=[0.5], masses=[-1.0])


def test_miss_and_scan():
    q = m.Potential.zero()
    w = m.DiracWeight(nodes=[0.5], masses=[1.0])
    assert m.miss(q, w, 4.0) == pytest.approx(0.0, abs=1e-12)
    assert m.miss(q, w, 0.0) == pytest.approx(1.0, abs=1e-12)
    roots = m.scan_spectrum(q, w, -1.0, 10.0, 501)
    assert roots == pytest.approx([4.0], abs=1e-9)


def test_eigenfunction_samples():
    q = m.Potential.zero()
    w = m.DiracWeight(nodes=[0.5], masses=[1.0])
    vals = m.eigenfunction_samples(q, w, 4.0, [0.25, 0.5, 0.75])
    assert vals == pytest.approx([0.25, 0.5, 0.25], abs=1e-12)


def test_tridiag_helpers():
    ev = m.tridiag_eigenvalues([6.0, 6.0], [-3.0])
    assert ev == pytest.approx([3.0, 9.0], abs=1e-10)
    assert m.sturm_count([6.0, 6.0], [-3.0], 5.0) == 1


def test_forward_and_inverse():
    assert m.forward_lambda(m.Potential.zero(), 0.25) == pytest.approx(16 / 3, abs=1e-10)

    f = lambda t: 1.0 / (t * (1.0 - t))
    df = lambda t: -(1.0 - 2.0 * t) / (t * (1.0 - t)) ** 2
    d2f = lambda t: (2.0 * t * (1.0 - t) + 2.0 * (1.0 - 2.0 * t) ** 2) / (t * (1.0 - t)) ** 3
    grid = [0.05 + 0.9 * i / 90 for i in range(91)]
    xs, qs = m.recover_potential_closed(f, df, d2f, grid)
    assert max(abs(v) for v in qs) < 1e-8

    report = m.validate_spectrum_like_closed(f, df, d2f)
    assert report["overall"] is True


def test_validation_rejects_flat_curves():
    report = m.validate_spectrum_like_closed(
        lambda t: 7.0, lambda t: 0.0, lambda t: 0.0
    )
    assert report["overall"] is False
    assert report["divergence_at_0"] is False


def test_characteristic_polynomial_coeffs():
    q = m.Potential.zero()
    w = m.DiracWeight(nodes=[1 / 3, 2 / 3], masses=[1.0, 1.0])
    out = m.characteristic_polynomial_coeffs(q, w)
    assert out["coefficients"] == pytest.approx([1.0, -4 / 9, 1 / 27], abs=1e-12)
    assert out["degenerate"] is False
