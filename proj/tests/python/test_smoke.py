import json
import os
import subprocess
from fractions import Fraction

import pytest

import qcl


def test_form_and_reflection():
    a2 = qcl.Cartan.preset("A2")
    alpha1 = a2.simple_root(0)
    assert qcl.form(a2, alpha1, alpha1) == 2
    assert qcl.form(a2, [1, 0], [1, 0]) == Fraction(2, 3)
    assert a2.reflect(0, [1, 0]) == [-1, 1]
    assert len(a2.reduced_words_of_longest()) == 2


def test_gls_seed_and_first_mutation():
    g = qcl.gls("A2", [0, 1, 0])
    assert g.frozen == [1, 2]
    assert g.B == [[0], [-1], [1]]
    assert g.lambda_vars(0, 1) == 1
    assert g.lambda_vars(0, 2) == -1
    mu = g.seed.mutate(0)
    assert mu.vars[0].terms() == {(-1, 0, 1): {0: 1}, (-1, 1, 0): {0: 1}}
    assert g.degree(mu.vars[0]) == [-1, 0, 1]
    assert g.codegree(mu.vars[0]) == [-1, 1, 0]
    assert mu.mutate(0).vars == g.seed.vars


def test_torus_arithmetic():
    L = [[0, 1], [-1, 0]]
    x1 = qcl.TorusElement.x_pow(L, [1, 0])
    x2 = qcl.TorusElement.x_pow(L, [0, 1])
    assert (x1 * x2).terms() == {(1, 1): {1: 1}}
    p = x1 + x2
    assert qcl.exact_div_right(p * x2, x2) == p
    assert not (x1 - x2).is_positive()
    with pytest.raises(qcl.Refusal) as err:
        qcl.exact_div_right(x1, x1 + x2)
    assert err.value.code == "not-divisible"


def test_vectors_and_pairings():
    g = qcl.gls("A2", [0, 1, 0])
    assert qcl.pbw_to_g(g.word, [0, 0, 1]) == [-1, 0, 1]
    assert qcl.g_to_pbw(g.word, [-1, 0, 0]) == ([-1, 0, 0], False)
    assert qcl.gr_pairing(g, [1, 0, 0], [-1, 0, 1]) == -1
    assert qcl.gl_pairing(g, [1, 0, 0], [-1, 1, 0]) == 1
    assert qcl.lambda_boxes(g, (0, 0), (0, 2)) == -1


def test_errors():
    with pytest.raises(qcl.InputError) as err:
        qcl.gls("A2", [0, 1, 0, 1])
    assert err.value.code == "not-reduced"
    with pytest.raises(ValueError):
        qcl.Cartan.preset("Z9")


def test_verify():
    report = qcl.verify(qcl.Word(qcl.Cartan.preset("B2"), [0, 1, 0, 1]), depth=4)
    assert report["pass"]
    assert report["checks"]["positivity"]["pass"]


@pytest.mark.skipif("QCL_CLI" not in os.environ, reason="command line tool path not provided")
def test_cli_matches_bindings():
    out = subprocess.run(
        [os.environ["QCL_CLI"], "mutate", "--type", "A2", "--word", "1,2,1", "--seq", "1", "--expand"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    data = json.loads(out)
    assert data["degrees"][0] == [-1, 0, 1]
