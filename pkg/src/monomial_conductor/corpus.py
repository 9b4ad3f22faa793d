"""
Registry of the worked examples, with golden values.

Each expected value carries a provenance tag: ``stated`` when the worked
example states it, ``derived`` when it was produced by the brute-force oracles
in the test suite (the oracle and its parameters are named in the tag).
"""

from dataclasses import dataclass, field
from typing import Callable, Union

from .conductor import conductor_generators, numerical_conductor
from .config import DEFAULT_LIMITS, Limits
from .ikeda import universal_certificate, verify_multiplication_table
from .lattice import deglex
from .normalization import normalize, quotient_length
from .predicates import PinchedVeroneseSpec, is_seminormal, pinched_veronese
from .semigroup import (AffineSemigroup, NumericalSemigroup, all_factorizations, as_affine,
                        dimension, frobenius, is_symmetric, minimal_generators)

STATED = "stated"
ORACLE = "derived: brute-force oracle (saturation by group+cone test, conductor by direct v+g checks, degree <= 2|c0|+6)"
SIEVE = "derived: gap sieve"
COUNT = "derived: generator count"
ARITH = "derived: counting inequality mu > dim + |E|"
EXHAUST = "derived: exhaustive monomial search, degree <= 6"


@dataclass(frozen=True)
class Expected:
    value: object
    provenance: str


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    source: str
    semigroup: Union[AffineSemigroup, NumericalSemigroup]
    expected: dict = field(default_factory=dict)
    multiplication_set: tuple = ()     # J for the table check, if any


def _vec(v, numerical):
    return v[0] if numerical else list(v)


def _vecs(vs, numerical):
    return [_vec(v, numerical) for v in sorted(vs, key=deglex)]


def _xn(n):
    e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    gens = e[:n - 1] + [tuple(a + b for a, b in zip(e[i], e[n - 1])) for i in range(n)]
    return AffineSemigroup(gens, dim=n)


# Cubics example: X^2Y times each generator j of J, with a hand-written
# two-factor factorization.  For j = Y^3 the product X^2Y^4 is (XY^2)(XY^2);
# the tempting (XY^2)Y^3 has the wrong degree.
_CUBIC_ITEMS = [
    [(0, 1, 2), (1, 2, 0), (1, 0, 2)],
    [(0, 3, 0), (1, 2, 0), (1, 2, 0)],
    [(1, 1, 1), (1, 2, 0), (2, 0, 1)],
    [(0, 0, 3), (2, 0, 1), (0, 1, 2)],
    [(0, 2, 1), (0, 3, 0), (2, 0, 1)],
    [(1, 0, 2), (3, 0, 0), (0, 1, 2)],
    [(2, 0, 1), (3, 0, 0), (1, 1, 1)],
]


def _entries():
    out = []
    s39 = AffineSemigroup([(2, 0), (3, 0), (1, 1), (0, 1)])
    out.append(CorpusEntry(
        "s2-s3-st-t", "worked example k[[s^2, s^3, st, t]]: conductor equals the maximal ideal",
        s39,
        {
            "equals_maximal": Expected(True, STATED),
            "r_generators": Expected([[0, 1], [1, 1], [2, 0], [3, 0]], STATED),
            "hilbert_basis": Expected([[0, 1], [1, 0]], STATED),
            "module_generators": Expected([[0, 0], [1, 0]], ORACLE),
            "quotient_length": Expected(1, STATED),
            "mu": Expected(4, COUNT),
            "dim": Expected(2, COUNT),
            "excess": Expected([], STATED),
            "verdict": Expected("CertifiedUniversal", ARITH),
            "multiplication_ok": Expected(True, STATED),
        },
        multiplication_set=((0, 1), (2, 0), (3, 0), (1, 1)),
    ))
    out.append(CorpusEntry(
        "345", "numerical semigroup <3,4,5>: conductor equals the maximal ideal",
        NumericalSemigroup([3, 4, 5]),
        {
            "equals_maximal": Expected(True, STATED),
            "r_generators": Expected([3, 4, 5], STATED),
            "numerical_conductor": Expected([3, [3, 4, 5]], SIEVE),
            "frobenius": Expected(2, SIEVE),
            "symmetric": Expected(False, SIEVE),
            "module_generators": Expected([0, 1, 2], ORACLE),
            "quotient_length": Expected(2, SIEVE),
            "excess": Expected([], STATED),
            "seminormal": Expected(["No", 2], SIEVE),
        },
    ))
    out.append(CorpusEntry(
        "quadrics-minus-XY-2vars", "k[[X^2, Y^2, XY, X^2Y, XY^2]]: counting certificate 5 > 2 + 2",
        AffineSemigroup([(2, 0), (0, 2), (1, 1), (2, 1), (1, 2)]),
        {
            "mu": Expected(5, STATED),
            "dim": Expected(2, STATED),
            "excess": Expected([[0, 2], [2, 0]], STATED),
            "verdict": Expected("CertifiedUniversal", STATED),
            "seminormal": Expected(["Yes", None], STATED),
            "r_generators": Expected([[1, 1], [1, 2], [2, 1]], ORACLE),
            "module_generators": Expected([[0, 0], [0, 1], [1, 0]], ORACLE),
            "hilbert_basis": Expected([[0, 1], [1, 0]], STATED),
            "oneless_witness": Expected(None, EXHAUST),
        },
    ))
    out.append(CorpusEntry(
        "veronese4-minus-ZW", "2-Veronese in X, Y, Z, W without ZW: counting certificate 9 > 4 + 2",
        pinched_veronese(PinchedVeroneseSpec(4, 2, (0, 0, 1, 1))),
        {
            "mu": Expected(9, STATED),
            "dim": Expected(4, STATED),
            "excess": Expected([[0, 0, 0, 2], [0, 0, 2, 0]], STATED),
            "verdict": Expected("CertifiedUniversal", STATED),
            "hilbert_basis_size": Expected(10, STATED),
            "r_generators": Expected([[0, 1, 0, 1], [0, 1, 1, 0], [0, 2, 0, 0], [1, 0, 0, 1],
                                      [1, 0, 1, 0], [1, 1, 0, 0], [2, 0, 0, 0]], STATED),
        },
    ))
    out.append(CorpusEntry(
        "cubics-minus-X2Y", "cubics in X, Y, Z without X^2Y: m = c + (X^3)",
        pinched_veronese(PinchedVeroneseSpec(3, 3, (2, 1, 0))),
        {
            "oneless_witness": Expected([3, 0, 0], STATED),
            "excess": Expected([[3, 0, 0]], STATED),
            "module_generators": Expected([[0, 0, 0], [2, 1, 0]], STATED),
            "hilbert_basis_size": Expected(10, STATED),
            "written_factorizations": Expected([[list(a) for a in item] for item in _CUBIC_ITEMS], STATED),
            "multiplication_ok": Expected(True, STATED),
            "mu": Expected(9, COUNT),
            "verdict": Expected("CertifiedUniversal", ARITH),
        },
        multiplication_set=tuple(item[0] for item in _CUBIC_ITEMS) + ((1, 2, 0),),
    ))
    out.append(CorpusEntry(
        "pinched-quadrics-3vars", "quadrics in X, Y, Z without XY; normalization is the full 2-Veronese",
        pinched_veronese(PinchedVeroneseSpec(3, 2, (1, 1, 0))),
        {
            "module_generators": Expected([[0, 0, 0], [1, 1, 0]], ORACLE),
            "hilbert_basis": Expected([[0, 0, 2], [0, 1, 1], [0, 2, 0], [1, 0, 1], [1, 1, 0], [2, 0, 0]],
                                      STATED),
            "mu": Expected(5, COUNT),
            "dim": Expected(3, COUNT),
            "excess": Expected([[0, 2, 0], [2, 0, 0]], ORACLE),
            "verdict": Expected("Inconclusive", ARITH),
        },
    ))
    for n in range(2, 6):
        witness = [0] * (n - 1) + [2]
        out.append(CorpusEntry(
            f"xn-family-{n}", f"X_1..X_(n-1) and X_i X_n for n = {n}: m = c + (X_n^2)",
            _xn(n),
            {
                "oneless_witness": Expected(witness, STATED),
                "excess": Expected([witness], STATED),
                "hilbert_basis_size": Expected(n, STATED),
                "mu": Expected(2 * n - 1, COUNT),
                "dim": Expected(n, COUNT),
                "verdict": Expected("CertifiedUniversal" if n >= 3 else "Inconclusive", ARITH),
            },
        ))
    return out


CORPUS = _entries()


def entry(entry_id: str) -> CorpusEntry:
    for e in CORPUS:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def evaluate(e: CorpusEntry, limits: Limits = DEFAULT_LIMITS) -> dict:
    """Compute every field named in ``e.expected``, in JSON-ready form."""
    numerical = isinstance(e.semigroup, NumericalSemigroup)
    S = as_affine(e.semigroup)
    sat = normalize(S, limits)
    C = conductor_generators(S, sat, limits)
    cert = universal_certificate(e.semigroup, C, limits)
    vecs = lambda vs: _vecs(vs, numerical)
    getters: dict[str, Callable[[], object]] = {
        "equals_maximal": lambda: C.equals_maximal,
        "r_generators": lambda: vecs(C.r_generators),
        "rbar_generators": lambda: vecs(C.rbar_generators),
        "hilbert_basis": lambda: vecs(sat.hilbert_basis),
        "hilbert_basis_size": lambda: len(sat.hilbert_basis),
        "module_generators": lambda: vecs(sat.module_generators),
        "quotient_length": lambda: quotient_length(S, limits),
        "mu": lambda: cert.mu,
        "dim": lambda: dimension(S),
        "excess": lambda: vecs(cert.excess),
        "verdict": lambda: cert.verdict.value,
        "oneless_witness": lambda: None if cert.oneless_witness is None
        else _vec(cert.oneless_witness, numerical),
        "seminormal": lambda: _seminormal(e.semigroup, numerical, limits),
        "numerical_conductor": lambda: list(numerical_conductor(e.semigroup)),
        "frobenius": lambda: frobenius(e.semigroup),
        "symmetric": lambda: is_symmetric(e.semigroup),
        "multiplication_ok": lambda: all(
            m.ok for m in verify_multiplication_table(S, e.multiplication_set, limits)),
        "written_factorizations": lambda: _written_items(S, e.expected["written_factorizations"].value),
    }
    return {name: getters[name]() for name in e.expected}


def _seminormal(S, numerical, limits):
    res = is_seminormal(S, limits=limits)
    return [res.status.value, None if res.witness is None else _vec(res.witness, numerical)]


def _written_items(S, items):
    """The items whose written factorization is a genuine one in S."""
    order = list(minimal_generators(S))
    g = [m for m in normalize(S).module_generators if any(m)]
    out = []
    for j, a, b in items:
        j, a, b = tuple(j), tuple(a), tuple(b)
        if len(g) != 1:
            continue
        product = tuple(x + y for x, y in zip(j, g[0]))
        if a not in order or b not in order:
            continue
        if tuple(sorted((a, b), key=order.index)) in all_factorizations(S, product):
            out.append([list(j), list(a), list(b)])
    return out


def run_corpus(limits: Limits = DEFAULT_LIMITS, ids=None) -> dict:
    """Evaluate the corpus; the report lists every field with both values."""
    entries = []
    for e in CORPUS:
        if ids is not None and e.id not in ids:
            continue
        actual = evaluate(e, limits)
        fields = []
        for name, exp in e.expected.items():
            fields.append({
                "field": name,
                "expected": exp.value,
                "actual": actual[name],
                "provenance": exp.provenance,
                "passed": exp.value == actual[name],
            })
        entries.append({
            "id": e.id,
            "source": e.source,
            "passed": all(f["passed"] for f in fields),
            "fields": fields,
        })
    return {"passed": all(x["passed"] for x in entries), "entries": entries}


def render_text(report: dict) -> str:
    lines = []
    for x in report["entries"]:
        lines.append(f"{'PASS' if x['passed'] else 'FAIL'} {x['id']}  ({x['source']})")
        for f in x["fields"]:
            if f["passed"]:
                lines.append(f"    ok    {f['field']} = {f['actual']}  [{f['provenance']}]")
            else:
                lines.append(f"    FAIL  {f['field']}: expected {f['expected']}, got {f['actual']}"
                             f"  [{f['provenance']}]")
    total = len(report["entries"])
    good = sum(x["passed"] for x in report["entries"])
    lines.append(f"{good}/{total} entries passed")
    return "\n".join(lines)
