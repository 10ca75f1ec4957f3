"""The ``.oi`` instance format: parser and normalizing pretty-printer.

::

    # twisted cubic
    ring QQ[a,b,c,d]
    ideal P = a*c - b^2, b*d - c^2, a*d - b*c
    module M = [a, b; c, d] degrees 0, 0
    sop s = a, d, b + c
    regseq x = a*c - b^2, b*d - c^2
    check monomial P s t=1,2,3

One statement per line; ``#`` starts a comment.  All polynomials must be
homogeneous and may only use the declared variables.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .algebra import Field, PolyRing
from .conjectures import InstanceSpec
from .errors import InputError
from .groebner import Ideal
from .modsyz import Presentation
from .polyparse import ParseError, parse_polynomial, split_top_level

__all__ = ["ParseError", "parse_instance", "load_instance", "format_instance", "corpus_files", "CHECK_OPS"]

CHECK_OPS = (
    "resolve", "betti", "ext", "canonical", "theta", "order-ideals", "free-summand", "edge",
    "monomial", "aci", "serre", "unmixed", "suite", "cm-order-ideal",
)

_IDENT = r"[A-Za-z_][A-Za-z_0-9]*"
_RING = re.compile(r"^ring\s+(QQ|Fp\s+(\d+))\s*\[\s*(.*?)\s*\]\s*$")
_NAMED = re.compile(rf"^(ideal|module|sop|regseq)\s+({_IDENT})\s*=\s*(.*)$")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _poly_list(ring, text, lineno, col, what, warnings, *, allow_zero=True):
    out = []
    if not text.strip():
        raise ParseError(f"empty {what}", lineno, col)
    for piece, off in split_top_level(text, ","):
        lead = len(piece) - len(piece.lstrip())
        c0 = col + off + lead
        body = piece.strip()
        if not body:
            raise ParseError(f"empty entry in {what}", lineno, c0)
        f = parse_polynomial(ring, body, line=lineno, column=c0)
        ok, _ = f.is_homogeneous()
        if not ok:
            raise ParseError(f"non-homogeneous {what} entry {body!r}", lineno, c0)
        if not f and body not in ("0",):
            warnings.append(f"line {lineno}, column {c0}: {body!r} reduces to 0 over {ring.field}")
        if not f and not allow_zero:
            raise ParseError(f"zero entry not allowed in {what}", lineno, c0)
        out.append(f)
    return out


def _parse_module(ring, text, lineno, col, warnings):
    m = re.match(r"^\[(.*)\]\s*(?:degrees\s+(.*))?$", text.strip())
    if not m:
        raise ParseError("module must be '[row; row; ...] degrees d1, d2, ...'", lineno, col)
    body, degs = m.group(1), m.group(2)
    bcol = col + text.find("[") + 1
    rows = []
    for piece, off in split_top_level(body, ";"):
        if not piece.strip():
            raise ParseError("empty matrix row", lineno, bcol + off)
        rows.append(_poly_list(ring, piece, lineno, bcol + off, "matrix row", warnings))
    width = {len(r) for r in rows}
    if len(width) != 1:
        raise ParseError("matrix rows have different lengths", lineno, bcol)
    if degs is None:
        tdeg = [0] * len(rows)
    else:
        try:
            tdeg = [int(t) for t in degs.split(",")]
        except ValueError:
            raise ParseError("degrees must be integers", lineno, col + text.find("degrees")) from None
        if len(tdeg) != len(rows):
            raise ParseError(f"{len(tdeg)} degrees for {len(rows)} rows", lineno, col + text.find("degrees"))
    # drop zero columns; they present nothing
    k = next(iter(width))
    keep = [c for c in range(k) if any(r[c] for r in rows)]
    entries = [[r[c] for c in keep] for r in rows]
    try:
        P = Presentation.from_matrix(ring, entries, tdeg)
    except InputError as e:
        raise ParseError(str(e), lineno, col) from None
    return P, tdeg


def _parse_check(text, lineno, col, names):
    toks = text.split()
    if not toks:
        raise ParseError("check needs an operation", lineno, col)
    op = toks[0]
    if op not in CHECK_OPS:
        raise ParseError(f"unknown check {op!r}", lineno, col + text.find(op))
    args, params = [], {}
    for t in toks[1:]:
        if "=" in t:
            k, v = t.split("=", 1)
            try:
                params[k] = [int(x) for x in v.split(",")]
            except ValueError:
                raise ParseError(f"parameter {k} needs integers", lineno, col + text.find(t)) from None
        else:
            if t not in names:
                raise ParseError(f"undefined name {t!r}", lineno, col + text.find(t))
            args.append(t)
    return {"op": op, "args": args, "params": params}


def parse_instance(text: str, instance_id: str = "stdin") -> InstanceSpec:
    """Parse ``.oi`` text; raises :class:`ParseError` with line and column."""
    spec = None
    names = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        if spec is None:
            m = _RING.match(stripped)
            if not m:
                raise ParseError("file must start with 'ring QQ[...]' or 'ring Fp p[...]'", lineno, col)
            if m.group(2):
                p = int(m.group(2))
                try:
                    field = Field(p)
                except ValueError as e:
                    raise ParseError(str(e), lineno, col + stripped.find(m.group(2))) from None
            else:
                field = Field(0)
            variables = [v.strip() for v in m.group(3).split(",")] if m.group(3).strip() else []
            if not variables or any(not re.fullmatch(_IDENT, v) for v in variables):
                raise ParseError("bad variable list", lineno, col + stripped.find("["))
            if len(set(variables)) != len(variables):
                raise ParseError("duplicate variable", lineno, col + stripped.find("["))
            spec = InstanceSpec(PolyRing(variables, field), instance_id=instance_id)
            continue
        if stripped.startswith("ring"):
            raise ParseError("ring already declared", lineno, col)
        if stripped.startswith("check"):
            spec.checks.append(_parse_check(stripped[5:], lineno, col + 5, names))
            continue
        m = _NAMED.match(stripped)
        if not m:
            raise ParseError("expected ideal, module, sop, regseq or check", lineno, col)
        kind, name, body = m.groups()
        if name in names:
            raise ParseError(f"name {name!r} already defined", lineno, col + stripped.find(name))
        bcol = col + m.start(3)
        ring = spec.ring
        if kind == "ideal":
            gens = _poly_list(ring, body, lineno, bcol, "ideal", spec.warnings)
            spec.ideals[name] = Ideal(ring, gens)
        elif kind == "module":
            P, _ = _parse_module(ring, body, lineno, bcol, spec.warnings)
            spec.modules[name] = P
        else:
            seq = _poly_list(ring, body, lineno, bcol, kind, spec.warnings, allow_zero=False)
            (spec.sops if kind == "sop" else spec.regseqs)[name] = seq
        names.add(name)
    if spec is None:
        raise ParseError("missing ring declaration", 1, 1)
    return spec


def corpus_files() -> list:
    """The shipped corpus, sorted by name."""
    root = resources.files("oideal").joinpath("corpus")
    return sorted((Path(str(root)) / e.name for e in root.iterdir() if e.name.endswith(".oi")), key=lambda p: p.name)


def load_instance(path) -> InstanceSpec:
    """Load a ``.oi`` file; ``corpus/NAME.oi`` falls back to the shipped corpus."""
    path = Path(path)
    if not path.exists() and len(path.parts) == 2 and path.parts[0] == "corpus":
        shipped = Path(str(resources.files("oideal").joinpath("corpus", path.name)))
        if shipped.exists():
            path = shipped
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"no such instance file: {path}") from None
    except UnicodeDecodeError as e:
        raise InputError(f"{path}: not UTF-8 ({e})") from None
    try:
        return parse_instance(text, instance_id=path.stem)
    except ParseError as e:
        raise ParseError(e.reason, e.line, e.column, source=path.name) from None


def _fmt_list(polys) -> str:
    return ", ".join(str(f) for f in polys) if polys else "0"


def format_instance(spec: InstanceSpec) -> str:
    """Canonical text for an instance; ``parse_instance`` of it reproduces the instance."""
    ring = spec.ring
    lines = [f"ring {ring.field}[{','.join(ring.variables)}]"]
    for name, I in spec.ideals.items():
        lines.append(f"ideal {name} = {_fmt_list(I.generators)}")
    for name, P in spec.modules.items():
        if P.relations.ncols:
            rows = "; ".join(", ".join(str(f) for f in row) for row in P.relations.entries)
        else:
            rows = "; ".join("0" for _ in range(P.rank))
        degs = ", ".join(str(d) for d in P.generators.degrees)
        lines.append(f"module {name} = [{rows}] degrees {degs}")
    for name, seq in spec.sops.items():
        lines.append(f"sop {name} = {_fmt_list(seq)}")
    for name, seq in spec.regseqs.items():
        lines.append(f"regseq {name} = {_fmt_list(seq)}")
    for chk in spec.checks:
        parts = [chk["op"], *chk["args"]]
        parts += [f"{k}={','.join(str(v) for v in vals)}" for k, vals in sorted(chk["params"].items())]
        lines.append("check " + " ".join(parts))
    return "\n".join(lines) + "\n"
