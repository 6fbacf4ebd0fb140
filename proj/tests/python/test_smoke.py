"""Smoke tests for the compiled pqsym module."""

import pqsym


def test_compositions():
    alpha = pqsym.Composition([1, 4, 2, 3])
    assert alpha.weight() == 10
    assert pqsym.descent_set(alpha) == [1, 5, 7]
    assert pqsym.peak_set(alpha) == [5, 7]
    assert pqsym.lambda_odd(alpha) == pqsym.Composition([1, 1, 1, 5, 1, 1])
    assert pqsym.is_lyndon(pqsym.Composition([1, 2, 1, 3]))
    assert not pqsym.is_lyndon(pqsym.Composition([2, 1, 3]))
    assert pqsym.cfl_factorize(pqsym.Composition([1, 3, 1, 3])) == [([1, 3], 2)]


def test_fibonacci_dimensions():
    for n in range(1, 15):
        assert len(pqsym.enumerate_odd_compositions(n)) == pqsym.fibonacci(n - 1)


def test_products_and_theta():
    l1 = pqsym.pqsym_l(pqsym.Composition([1]))
    assert repr(l1 * l1) == "2*L[1,1]"
    m21 = pqsym.qsym_m(pqsym.Composition([2, 1]))
    assert repr(pqsym.theta(m21).to_basis("L")) == "-L[3]"
    assert pqsym.eval_to_string("q[2]", "M") == "4*M[1,1] + 2*M[2]"


def test_decomposition_roundtrip():
    l3 = pqsym.pqsym_l(pqsym.Composition([3]))
    z = pqsym.decompose_zb(l3)
    assert repr(z) == "3*Q[3; 1] - Q[2; 1]*Q[1; 1]"
    assert z.integral()
    assert z.expand() == l3
    p = pqsym.decompose_inductive(l3)
    assert p.expand() == l3
    assert p.straighten() == z


def test_euler_and_completeness():
    assert pqsym.verify_euler_relations(pqsym.Composition([1]), 4)
    rep = pqsym.verify_completeness(5)
    assert rep["pass"]
    assert rep["rank"] == 5
    assert abs(rep["det"]) == 1
    assert len(pqsym.zb_basis(4)) == 3


def test_suite_entry_point():
    result = pqsym.run_suite("euler", 6)
    assert result["pass"]
    assert result["total_checks"] > 0


def test_parse_eval_json():
    v = pqsym.parse_eval("L[3]*L[1]", "L")
    assert v.terms() == [([3, 1], "1"), ([1, 3], "1")]
    assert '"ring":"pqsym"' in v.to_json().replace(" ", "")
