"""Plain-text file formats.

Every file starts with a version header ``# listrec-<kind> v1``. After the
header, blank lines and lines starting with ``#`` are ignored. Symbols are
field-element indices (see :mod:`listrec.gf`).

Code file (``# listrec-code v1``), one record per line::

    field 2^3                 # p^e, or just p; optional: field 2^3 modulus 1 1 0 1
    kind rs                   # or: kind explicit
    degree 1                  # rs only
    points 0 1 2 5            # rs only; "points all" for the whole field
    word 0 1 1                # explicit only, one line per codeword

List-family file (``# listrec-lists v1``): one line per coordinate, the
whitespace-separated symbols of that coordinate's list.

Experiment config (``# listrec-config v1``): ``key = value`` lines. Keys:
``code`` (path, relative to the config file), ``m``, ``trials``, ``seed``,
``alpha``, ``rho``, ``epsilon``, ``lists`` (random | gr06 | sumset |
file), ``ell``, ``t``, ``lists_file``, ``output``, ``format`` (json | csv),
``timing`` (true | false).

Graph edge list (``# listrec-graph v1``): one edge per line,
``codeword_id coordinate symbol`` with coordinates 1-indexed.
"""

from __future__ import annotations

import os
from typing import Iterable

from .code import Code, ExplicitCode, ReedSolomonCode
from .errors import FormatError
from .expander import BipartiteCodeGraph
from .experiments import ExperimentConfig
from .gf import FieldSpec, make_field
from .listrecovery import ListFamily

VERSION = 1


def _header(kind: str) -> str:
    return f"# listrec-{kind} v{VERSION}"


def _records(text: str, kind: str) -> list[tuple[int, str]]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != _header(kind):
        raise FormatError(f"expected header line {_header(kind)!r}")
    out = []
    for no, line in enumerate(lines[1:], start=2):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(tokens: Iterable[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"line {no}: {exc}") from None


def parse_field(spec: str, modulus: Iterable[int] | None = None) -> FieldSpec:
    """``"p"`` or ``"p^e"``."""
    p, _, e = spec.partition("^")
    try:
        p, e = int(p), int(e) if e else 1
    except ValueError:
        raise FormatError(f"bad field {spec!r}, expected p or p^e") from None
    return make_field(p, e, None if modulus is None else list(modulus))


def field_token(F: FieldSpec) -> str:
    if F.is_prime_field:
        return str(F.characteristic)
    return f"{F.characteristic}^{F.extension_degree}"


# ---------- codes ----------

def loads_code(text: str) -> Code:
    F = kind = degree = points = None
    words: list[list[int]] = []
    for no, line in _records(text, "code"):
        key, *rest = line.split()
        if key == "field":
            if not rest:
                raise FormatError(f"line {no}: field needs a value")
            mod = None
            if len(rest) > 1:
                if rest[1] != "modulus":
                    raise FormatError(f"line {no}: expected 'modulus'")
                mod = _ints(rest[2:], no)
            F = parse_field(rest[0], mod)
        elif key == "kind":
            kind = rest[0] if rest else None
            if kind not in ("rs", "explicit"):
                raise FormatError(f"line {no}: kind must be rs or explicit")
        elif key == "degree":
            (degree,) = _ints(rest, no) or [None]
        elif key == "points":
            points = rest
        elif key == "word":
            words.append(_ints(rest, no))
        else:
            raise FormatError(f"line {no}: unknown record {key!r}")
    if F is None or kind is None:
        raise FormatError("code file needs 'field' and 'kind' records")
    if kind == "rs":
        if degree is None or points is None:
            raise FormatError("an rs code needs 'degree' and 'points'")
        pts = list(F.elements()) if points == ["all"] else _ints(points, 0)
        return ReedSolomonCode(F, degree, tuple(pts))
    if not words:
        raise FormatError("an explicit code needs at least one 'word'")
    return ExplicitCode(F, tuple(tuple(w) for w in words))


def dumps_code(code: Code) -> str:
    F = code.field
    lines = [_header("code")]
    ftok = f"field {field_token(F)}"
    if not F.is_prime_field:
        ftok += " modulus " + " ".join(map(str, F.modulus))
    lines.append(ftok)
    if isinstance(code, ReedSolomonCode):
        lines += ["kind rs", f"degree {code.degree}", "points " + " ".join(map(str, code.eval_points))]
    else:
        lines.append("kind explicit")
        if code.collided:
            lines.append("# projections collided; repeated words dropped below")
        lines += ["word " + " ".join(map(str, w)) for w in dict.fromkeys(code.codewords)]
    return "\n".join(lines) + "\n"


def load_code(path: str) -> Code:
    with open(path, encoding="utf-8") as fh:
        return loads_code(fh.read())


# ---------- list families ----------

def loads_lists(text: str) -> ListFamily:
    rows = [_ints(line.split(), no) for no, line in _records(text, "lists")]
    if not rows:
        raise FormatError("a list family needs at least one coordinate")
    return ListFamily(tuple(frozenset(r) for r in rows))


def dumps_lists(fam: ListFamily) -> str:
    return "\n".join([_header("lists")] + [" ".join(map(str, A)) for A in fam.as_sorted()]) + "\n"


def load_lists(path: str) -> ListFamily:
    with open(path, encoding="utf-8") as fh:
        return loads_lists(fh.read())


# ---------- experiment config ----------

_INT_KEYS = {"m", "trials", "seed", "ell", "t"}
_KEYS = _INT_KEYS | {"code", "alpha", "rho", "epsilon", "lists", "lists_file", "output", "format", "timing"}


def loads_config(text: str, base_dir: str = ".") -> ExperimentConfig:
    raw: dict[str, str] = {}
    for no, line in _records(text, "config"):
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in _KEYS:
            raise FormatError(f"line {no}: expected 'key = value' with a known key, got {line!r}")
        raw[key] = value
    for req in ("code", "m"):
        if req not in raw:
            raise FormatError(f"config is missing {req!r}")
    kw: dict = {}
    for key, value in raw.items():
        if key in _INT_KEYS:
            kw[key] = _ints([value], 0)[0]
        elif key == "timing":
            kw[key] = value.lower() in ("1", "true", "yes")
        elif key in ("code", "lists_file"):
            continue
        else:
            kw[key] = value
    kw["code"] = load_code(os.path.join(base_dir, raw["code"]))
    if "lists_file" in raw:
        kw["list_family"] = load_lists(os.path.join(base_dir, raw["lists_file"]))
    if "output" in kw and not os.path.isabs(kw["output"]):
        kw["output"] = os.path.join(base_dir, kw["output"])
    return ExperimentConfig(**kw)


def load_config(path: str) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return loads_config(fh.read(), os.path.dirname(os.path.abspath(path)))


# ---------- graph export ----------

def dumps_edges(graph: BipartiteCodeGraph) -> str:
    lines = [_header("graph")] + [f"{j} {i + 1} {s}" for j, i, s in graph.edges()]
    return "\n".join(lines) + "\n"


def loads_edges(text: str) -> BipartiteCodeGraph:
    adj: dict[int, dict[int, int]] = {}
    for no, line in _records(text, "graph"):
        j, i, s = _ints(line.split(), no)
        adj.setdefault(j, {})[i - 1] = s
    words = []
    for j in range(len(adj)):
        if j not in adj:
            raise FormatError(f"codeword ids must be 0..{len(adj) - 1}")
        row = adj[j]
        words.append(tuple(row[i] for i in range(len(row))))
    return BipartiteCodeGraph(tuple(words))
