"""
Command-line front end.

    monomial-conductor analyze instance.json
    monomial-conductor ikeda instance.json --sop "2 0; 0 1"
    monomial-conductor corpus verify
    monomial-conductor fuzz --seed 42 --count 200

Exit codes: 0 success, 1 mismatch or counterexample, 2 input error,
3 a guard was hit or a result could not be certified.
"""

import argparse
import json
import sys
from dataclasses import dataclass, fields, replace
from functools import lru_cache, reduce
from importlib import resources
from math import gcd
from typing import Optional

import jsonschema

from . import corpus, explorer
from .conductor import conductor_generators
from .config import Limits
from .errors import (BoundExceeded, DimensionMismatch, InvalidSemigroup, NotASystemOfParameters,
                     NotPointed, UncertifiedResult)
from .ikeda import check_sop_containment, universal_certificate
from .normalization import normalize, quotient_length
from .predicates import is_seminormal
from .semigroup import (AffineSemigroup, NumericalSemigroup, apery_set, as_affine, dimension,
                        frobenius, genus, is_symmetric, minimal_generators)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(ValueError):
    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class InstanceSpec:
    numerical: Optional[tuple] = None
    dim: Optional[int] = None
    generators: Optional[tuple] = None
    labels: Optional[tuple] = None
    label: Optional[str] = None

    def build(self):
        if self.numerical is not None:
            return NumericalSemigroup(self.numerical)
        return AffineSemigroup(self.generators, dim=self.dim)

    def to_dict(self):
        if self.numerical is not None:
            d = {"numerical": list(self.numerical)}
        else:
            d = {"dim": self.dim, "generators": [list(g) for g in self.generators]}
            if self.labels is not None:
                d["labels"] = list(self.labels)
        if self.label is not None:
            d["label"] = self.label
        return d


# -- parsing ------------------------------------------------------------------

@lru_cache(maxsize=None)
def load_schema(name):
    return json.loads(resources.files(__package__).joinpath("schema", name).read_text())


def _positions(text):
    """Map JSON paths (tuples of keys/indices) to character offsets."""
    dec = json.JSONDecoder()
    out = {}

    def ws(i):
        while i < len(text) and text[i] in " \t\r\n":
            i += 1
        return i

    def walk(i, path):
        i = ws(i)
        out[path] = i
        ch = text[i]
        if ch == "{":
            i = ws(i + 1)
            if text[i] == "}":
                return i + 1
            while True:
                key, i = dec.raw_decode(text, ws(i))
                i = ws(i) + 1          # ':'
                i = ws(walk(i, path + (key,)))
                if text[i] == "}":
                    return i + 1
                i += 1                 # ','
        if ch == "[":
            i = ws(i + 1)
            if text[i] == "]":
                return i + 1
            k = 0
            while True:
                i = ws(walk(i, path + (k,)))
                k += 1
                if text[i] == "]":
                    return i + 1
                i += 1
        _, end = dec.raw_decode(text, i)
        return end

    walk(0, ())
    return out


def _line_col(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _fail(text, pos, path, message):
    offset = pos.get(tuple(path), pos.get((), 0))
    line, col = _line_col(text, offset)
    where = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in path) or "document"
    raise InputError(f"{where}: {message} (line {line}, column {col})", line, col)


def _no_duplicates(pairs):
    keys = [k for k, _ in pairs]
    dup = next((k for k in keys if keys.count(k) > 1), None)
    if dup is not None:
        raise InputError(f"duplicate key {dup!r}")
    return dict(pairs)


def parse_spec(text: str) -> InstanceSpec:
    """Strict parse of an instance document; errors carry line and column."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})",
                         exc.lineno, exc.colno) from None
    pos = _positions(text)
    if not isinstance(doc, dict):
        _fail(text, pos, (), "expected a JSON object")
    if "numerical" in doc and ("dim" in doc or "generators" in doc):
        _fail(text, pos, (), "'numerical' and 'dim'/'generators' are mutually exclusive")
    # JSON booleans are integers to jsonschema's python type check
    for path, offset in pos.items():
        value = doc
        for p in path:
            value = value[p]
        if isinstance(value, bool):
            _fail(text, pos, path, "booleans are not allowed here")
    validator = jsonschema.Draft202012Validator(load_schema("instance.schema.json"))
    errors = sorted(validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), e.message))
    if errors:
        err = errors[0]
        # oneOf failures: report the most specific branch error
        if err.validator == "oneOf" and err.context:
            branch = 0 if "numerical" in doc else 1
            sub = [e for e in err.context if e.schema_path and e.schema_path[0] == branch] or err.context
            err = max(sub, key=lambda e: len(e.absolute_path))
        _fail(text, pos, tuple(err.absolute_path), err.message)
    if "numerical" in doc:
        gens = doc["numerical"]
        if reduce(gcd, gens) != 1:
            _fail(text, pos, ("numerical",), f"generators have gcd {reduce(gcd, gens)}, need 1")
        return InstanceSpec(numerical=tuple(gens), label=doc.get("label"))
    d = doc["dim"]
    for i, g in enumerate(doc["generators"]):
        if len(g) != d:
            _fail(text, pos, ("generators", i), f"dimension mismatch: length {len(g)}, dim is {d}")
        if not any(g):
            _fail(text, pos, ("generators", i), "zero generator")
    labels = doc.get("labels")
    if labels is not None and len(labels) != d:
        _fail(text, pos, ("labels",), f"{len(labels)} labels for dim {d}")
    return InstanceSpec(dim=d, generators=tuple(tuple(g) for g in doc["generators"]),
                        labels=None if labels is None else tuple(labels), label=doc.get("label"))


def parse_vectors(text: str, dim: int) -> list:
    """Terse vector list "a b; c d; ..." (commas also accepted inside a vector)."""
    out = []
    for k, chunk in enumerate(text.split(";")):
        parts = chunk.replace(",", " ").split()
        if not parts:
            raise InputError(f"empty vector at position {k + 1} in {text!r}")
        try:
            v = tuple(int(p) for p in parts)
        except ValueError:
            raise InputError(f"non-integer entry in vector {k + 1}: {chunk.strip()!r}") from None
        if len(v) != dim:
            raise InputError(f"vector {k + 1} has length {len(v)}, expected {dim}")
        out.append(v)
    return out


# -- reports ------------------------------------------------------------------

def _vecs(vs):
    return [list(v) for v in vs]


def _normalization_report(S, limits):
    sat = normalize(S, limits)
    try:
        length = quotient_length(S, limits)
        length_known = True
    except BoundExceeded:
        length, length_known = None, False
    return {
        "rays": _vecs(sat.rays),
        "facets": _vecs(sat.cone.facets),
        "equations": _vecs(sat.cone.equations),
        "lattice_basis": _vecs(sat.lattice.basis),
        "hilbert_basis": _vecs(sat.hilbert_basis),
        "module_generators": _vecs(sat.module_generators),
        "is_normal": sat.module_generators == ((0,) * S.dim,),
        "quotient_length": length if length_known else "unknown",
        "quotient_finite": None if not length_known else length is not None,
    }


def _numerical_report(N):
    return {
        "frobenius": frobenius(N),
        "genus": genus(N),
        "symmetric": is_symmetric(N),
        "apery_multiplicity": apery_set(N, N.generators[0]),
    }


def cmd_normalize(spec, limits, args):
    S = as_affine(spec.build())
    return _normalization_report(S, limits), EXIT_OK


def cmd_conductor(spec, limits, args):
    S = as_affine(spec.build())
    C = conductor_generators(S, limits=limits, method=args.method)
    return C.to_dict(), EXIT_OK if C.certified else EXIT_GUARD


def cmd_analyze(spec, limits, args):
    original = spec.build()
    S = as_affine(original)
    result = {
        "dimension": dimension(S),
        "minimal_generators": _vecs(minimal_generators(S)),
        "embedding_dimension": len(minimal_generators(S)),
        "normalization": _normalization_report(S, limits),
    }
    if isinstance(original, NumericalSemigroup):
        result["numerical"] = _numerical_report(original)
    C = conductor_generators(S, limits=limits)
    result["conductor"] = C.to_dict()
    result["certificate"] = universal_certificate(original, C, limits).to_dict() if C.certified else None
    result["seminormal"] = is_seminormal(original, limits=limits).to_dict()
    return result, EXIT_OK if C.certified else EXIT_GUARD


def cmd_ikeda(spec, limits, args):
    original = spec.build()
    S = as_affine(original)
    C = conductor_generators(S, limits=limits)
    if not C.certified:
        raise UncertifiedResult("conductor generators could not be certified within the degree cap")
    result = {"conductor": C.to_dict()}
    if args.sop is None:
        result["certificate"] = universal_certificate(original, C, limits).to_dict()
        return result, EXIT_OK
    xs = parse_vectors(args.sop, S.dim)
    contained = check_sop_containment(S, C, xs)
    result["sop"] = _vecs(xs)
    result["contained"] = contained
    return result, EXIT_MISMATCH if contained else EXIT_OK


def cmd_corpus(limits, args):
    report = corpus.run_corpus(limits, ids=set(args.only) if args.only else None)
    return report, EXIT_OK if report["passed"] else EXIT_MISMATCH


def cmd_fuzz(limits, args):
    max_gen = args.max_generator
    if max_gen is None:
        max_gen = 20 if args.mode == "numerical" else 4
    config = explorer.FuzzConfig(seed=args.seed, count=args.count, mode=args.mode, dim=args.dim,
                                 max_generator=max_gen, sop_degree_cap=limits.sop_degree_cap, limits=limits)
    report = explorer.scan(config, workers=args.workers)
    return report, EXIT_MISMATCH if report["counterexamples"] else EXIT_OK


# -- text rendering -------------------------------------------------------------

_LABELS = {
    "equals_maximal": "conductor = maximal ideal",
    "r_generators": "conductor generators over R",
    "rbar_generators": "conductor generators over Rbar",
    "witness_element": "conductor element",
    "module_generators": "module generators of Rbar over R",
    "quotient_length": "length of Rbar/R",
    "mu": "mu(m)",
    "excess": "E (generators outside the conductor)",
    "oneless_witness": "y with m = c + (y)",
    "contained": "conductor contained in (x)",
}


def _text(value):
    if isinstance(value, (bool, type(None))) or isinstance(value, (list, dict)):
        return json.dumps(value)
    return str(value)


def render_text(doc, indent=0):
    lines = []
    pad = "  " * indent
    for key, value in doc.items():
        label = _LABELS.get(key, key.replace("_", " "))
        if isinstance(value, dict):
            lines.append(f"{pad}{label}:")
            lines.extend(render_text(value, indent + 1))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{pad}{label}:")
            for item in value:
                lines.extend(render_text(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{label}: {_text(value)}")
    return lines


def emit(doc, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    elif doc.get("command") == "corpus verify" and "result" in doc:
        out.write(corpus.render_text(doc["result"]) + "\n")
        out.write("limits: " + json.dumps(doc["limits"]) + "\n")
    else:
        out.write("\n".join(render_text(doc)) + "\n")


# -- argument parsing -----------------------------------------------------------

def _add_common(p, defaults):
    p.add_argument("--format", choices=("json", "text"), default="text")
    caps = p.add_argument_group("guards (defaults echoed in every report)")
    for f in fields(Limits):
        caps.add_argument("--" + f.name.replace("_", "-"), type=int, default=getattr(defaults, f.name),
                          dest=f.name, metavar="N")


def build_parser(defaults: Optional[Limits] = None):
    defaults = defaults or Limits.from_env()
    parser = argparse.ArgumentParser(prog="monomial-conductor",
                                     description="Normalization, conductor and parameter-ideal checks "
                                                 "for monomial semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("analyze", "full report"), ("normalize", "saturation and module generators"),
                           ("conductor", "conductor generators"), ("ikeda", "non-containment certificate")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="instance JSON file, or - for stdin")
        _add_common(p, defaults)
        if name == "conductor":
            p.add_argument("--method", choices=("auto", "cosets", "search"), default="auto")
        if name == "ikeda":
            p.add_argument("--sop", help='monomial system of parameters, e.g. "2 0; 0 1"')

    p = sub.add_parser("corpus", help="worked-example registry")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--only", nargs="*", help="restrict to these entry ids")
    _add_common(p, defaults)

    p = sub.add_parser("fuzz", help="seeded search for counterexamples")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--mode", choices=("numerical", "affine"), default="numerical")
    p.add_argument("--dim", type=int, default=2, help="ambient dimension in affine mode")
    p.add_argument("--max-generator", type=int, default=None,
                   help="largest generator (numerical: default 20) or coordinate (affine: default 4)")
    p.add_argument("--degree-cap", type=int, default=None, help="entry degree cap for sop enumeration")
    p.add_argument("--workers", type=int, default=None)
    _add_common(p, defaults)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _error(exc):
    err = {"type": type(exc).__name__, "message": str(exc), "guard": getattr(exc, "guard", None)}
    if isinstance(exc, InputError) and exc.line is not None:
        err["line"], err["column"] = exc.line, exc.column
    partial = getattr(exc, "partial", None)
    if partial is not None:
        err["partial"] = json.loads(json.dumps(partial, default=list))
    return err


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    limits = Limits(**{f.name: getattr(args, f.name) for f in fields(Limits)})
    if getattr(args, "degree_cap", None) is not None:
        # fuzz --degree-cap is shorthand for --sop-degree-cap
        limits = replace(limits, sop_degree_cap=args.degree_cap)
    command = "corpus verify" if args.command == "corpus" else args.command
    doc = {"command": command, "limits": limits.to_dict()}
    code = EXIT_OK
    try:
        if args.command == "corpus":
            result, code = cmd_corpus(limits, args)
        elif args.command == "fuzz":
            result, code = cmd_fuzz(limits, args)
        else:
            try:
                spec = parse_spec(_read(args.file))
            except OSError as exc:
                raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
            doc["instance"] = spec.to_dict()
            handler = {"analyze": cmd_analyze, "normalize": cmd_normalize,
                       "conductor": cmd_conductor, "ikeda": cmd_ikeda}[args.command]
            result, code = handler(spec, limits, args)
        doc["result"] = result
    except (InputError, DimensionMismatch, InvalidSemigroup, NotPointed,
            NotASystemOfParameters, ValueError) as exc:
        doc["error"] = _error(exc)
        code = EXIT_INPUT
    except (BoundExceeded, UncertifiedResult) as exc:
        doc["error"] = _error(exc)
        code = EXIT_GUARD
    if args.command == "fuzz" and "result" in doc and args.format == "json":
        out.write(explorer.dumps(doc))
    else:
        emit(doc, args.format, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
