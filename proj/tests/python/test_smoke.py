import json
from fractions import Fraction

import pytest

import homcfi


def graph(colors, vertices, edges):
    return json.dumps(
        {
            "colors": list(colors),
            "vertices": [{"id": i, "color": c} for i, c in enumerate(vertices)],
            "edges": [list(e) for e in edges],
        }
    )


TRIANGLE = graph(range(3), [0, 1, 2], [(0, 1), (1, 2), (0, 2)])
K2 = graph(range(2), [0, 1], [(0, 1)])
HOST = graph(
    range(3),
    [0, 0, 1, 1, 2, 2],
    [(0, 2), (0, 3), (1, 3), (2, 4), (3, 4), (3, 5), (0, 4), (1, 5)],
)


def test_counts():
    assert homcfi.hom(TRIANGLE, HOST) == 3
    assert homcfi.sub(TRIANGLE, HOST) == 3
    assert homcfi.ind(K2, K2) == 1
    assert homcfi.hom(TRIANGLE, TRIANGLE) == 1


def test_tensor_multiplicative():
    product = homcfi.tensor(HOST, HOST)
    assert homcfi.hom(TRIANGLE, product) == homcfi.hom(TRIANGLE, HOST) ** 2


def test_expansion_matches_sub():
    expansion = homcfi.expand_sub(TRIANGLE)
    assert homcfi.evaluate(expansion, HOST) == Fraction(homcfi.sub(TRIANGLE, HOST))


def test_cfi_filter_unit():
    x = homcfi.cfi_filter(TRIANGLE)
    parsed = json.loads(x)
    assert len(parsed["constituents"]) == 2
    # hom(S, X(S)) = 1
    assert homcfi.hom_quantum(TRIANGLE, x) == 1


def test_cfi_build_counts():
    gamma = json.loads(homcfi.cfi_build(TRIANGLE))
    # triangle: 2 even assignments per degree-2 vertex
    assert len(gamma["vertices"]) == 6
    # hom(S, Gamma(S, 0)) = 2^(|E|-|V|+1) = 2
    assert homcfi.hom(TRIANGLE, homcfi.cfi_build(TRIANGLE)) == 2
    # charged: no homomorphisms
    assert homcfi.hom(TRIANGLE, homcfi.cfi_build(TRIANGLE, [(0, 1)])) == 0


def test_json_round_trip():
    lifted = homcfi.tensor(TRIANGLE, HOST)
    assert homcfi.tensor(TRIANGLE, HOST) == lifted  # bit-for-bit deterministic


def test_reduce_case_a():
    report = homcfi.reduce(
        s=TRIANGLE, case="a", oracle_kind="hom", oracle_pattern=TRIANGLE, host=HOST
    )
    assert report["result"] == Fraction(3)
    assert report["oracle_calls"] > 0


def test_reduce_promise_violation():
    with pytest.raises(homcfi.PromiseViolation):
        homcfi.reduce(
            s=TRIANGLE, case="a", oracle_kind="hom", oracle_pattern=K2, host=HOST
        )


def test_minor_lift():
    p3 = graph(range(3), [0, 1, 2], [(0, 1), (1, 2)])
    host = graph(range(2), [0, 0, 1, 1], [(0, 2), (0, 3), (1, 2)])
    lifted = homcfi.minor_lift(K2, p3, [[0, 1], [2]], host)
    assert homcfi.hom(p3, lifted) == homcfi.hom(K2, host)


def test_verify_suite():
    report = homcfi.verify("cfi", seed=3, corpus_random=3)
    assert report["passed"]
    assert any(c["name"] == "filter-unit" for c in report["checks"])
