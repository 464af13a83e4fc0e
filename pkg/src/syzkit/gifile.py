"""Reader and writer for ``.gi`` ideal files.

::

    # comment
    field Q                 (or: field F 1000003)
    vars 5
    param t                 (family files only)
    gen x0*x3 - x1*x2
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field as dc_field

from .errors import SyzkitError
from .graded_ideal import GradedIdeal
from .multipoly import RingContext, parse_parametric, parse_poly
from .scalars import Field
from .syzygy import ParametricIdeal


class GiFileError(SyzkitError):
    def __init__(self, message, line=None, path=None):
        where = f"{path or '<input>'}:{line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.path = path


@dataclass
class IdealFile:
    field: Field
    num_vars: int
    param: str | None = None
    generators: list = dc_field(default_factory=list)
    lines: list = dc_field(default_factory=list)
    path: str | None = None

    @property
    def context(self) -> RingContext:
        return RingContext(self.num_vars, self.field)


def parse_gi(text: str, path: str | None = None) -> IdealFile:
    field = None
    num_vars = None
    param = None
    gens, gen_lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "field":
            if field is not None:
                raise GiFileError("duplicate field line", lineno, path)
            parts = rest.split()
            try:
                if parts == ["Q"]:
                    field = Field.rationals()
                elif len(parts) == 2 and parts[0] == "F":
                    field = Field.prime(int(parts[1]))
                else:
                    raise ValueError(f"expected 'Q' or 'F <prime>', got {rest!r}")
            except ValueError as exc:
                raise GiFileError(str(exc), lineno, path) from None
        elif key == "vars":
            if num_vars is not None:
                raise GiFileError("duplicate vars line", lineno, path)
            if not rest.isdigit() or int(rest) < 2:
                raise GiFileError(f"vars needs an integer >= 2, got {rest!r}", lineno, path)
            num_vars = int(rest)
        elif key == "param":
            names = rest.split()
            if param is not None or len(names) != 1:
                raise GiFileError("exactly one parameter is supported", lineno, path)
            if not names[0].isidentifier() or names[0].startswith("x"):
                raise GiFileError(f"invalid parameter name {names[0]!r}", lineno, path)
            param = names[0]
        elif key == "gen":
            if field is None or num_vars is None:
                raise GiFileError("gen before field and vars lines", lineno, path)
            if not rest:
                raise GiFileError("empty generator", lineno, path)
            gens.append(rest)
            gen_lines.append(lineno)
        else:
            raise GiFileError(f"unknown directive {key!r}", lineno, path)
    if field is None:
        raise GiFileError("missing field line", None, path)
    if num_vars is None:
        raise GiFileError("missing vars line", None, path)
    if not gens:
        raise GiFileError("no generators", None, path)
    return IdealFile(field, num_vars, param, gens, gen_lines, path)


def _parse_generators(gi: IdealFile):
    ctx = gi.context
    out = []
    for text, lineno in zip(gi.generators, gi.lines):
        try:
            if gi.param is None:
                g = parse_poly(text, ctx)
                if g.is_zero():
                    raise GiFileError("zero generator", lineno, gi.path)
            else:
                g = parse_parametric(text, ctx, gi.param)
                if not g[1]:
                    raise GiFileError("zero generator", lineno, gi.path)
        except GiFileError:
            raise
        except (SyzkitError, ValueError) as exc:
            raise GiFileError(str(exc), lineno, gi.path) from None
        out.append(g)
    return out


def ideal_from_gi(gi: IdealFile) -> GradedIdeal:
    if gi.param is not None:
        raise GiFileError(f"file declares parameter {gi.param!r}; use a family command",
                          None, gi.path)
    return GradedIdeal(gi.context, _parse_generators(gi))


def family_from_gi(gi: IdealFile) -> ParametricIdeal:
    if gi.param is None:
        raise GiFileError("family files need a 'param' line", None, gi.path)
    return ParametricIdeal(gi.context, gi.param, _parse_generators(gi))


def read_gi(path: str) -> IdealFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GiFileError(f"cannot read file: {exc.strerror}", None, path) from None
    return parse_gi(text, path)


def load_ideal(path: str) -> GradedIdeal:
    return ideal_from_gi(read_gi(path))


def load_family(path: str) -> ParametricIdeal:
    return family_from_gi(read_gi(path))


def format_gi(ideal: GradedIdeal, comments=()) -> str:
    out = io.StringIO()
    for c in comments:
        out.write(f"# {c}\n")
    f = ideal.field
    out.write("field Q\n" if f.is_rational else f"field F {f.characteristic}\n")
    out.write(f"vars {ideal.num_vars}\n")
    for g in ideal.generators:
        out.write(f"gen {g}\n")
    return out.getvalue()


def write_gi(ideal: GradedIdeal, path: str, comments=()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_gi(ideal, comments))
