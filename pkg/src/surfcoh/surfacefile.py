"""Line-oriented text format for surface data, classes, and moments.

The grammar is deliberately plain so fixtures stay hand-editable and
diff-stable.  Tokens are integers, names match [A-Za-z_][A-Za-z0-9_]*,
`#` starts a comment, blank lines are skipped:

    q 2
    chi 0
    pg_positive 1
    h2_rank 6
    0 0 0 0 0 1        <- h2_rank rows of the gram matrix follow directly
    ...
    k 0 0 0 0 0 0
    cup 1 2 -> 1 0 0 0 0 0
    class m -1 0 0 0 0 -1
    moments src m
    moment 1 2 3 4: 1; -: 2
    moment -: 0
    end

Cup pairs not listed are zero.  A `moments` block names a declared class
and lists the moments a_0, a_1, ... one per `moment` line; a form is a
`;`-separated list of `indices: coeff` terms, with `-` for the empty index
set.  Parsing builds the SurfaceTopology without running validate(), so
diagnostic tools can load broken data and report on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import FormatError
from .extalg import PRIMAL, ExtForm
from .lattice import Lattice, LatticeClass
from .relations import MomentSequence
from .surface import SurfaceTopology

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class ParsedSurface:
    surface: SurfaceTopology
    classes: dict[str, LatticeClass] = field(default_factory=dict)
    moments: dict[str, MomentSequence] = field(default_factory=dict)

    def require_class(self, name: str) -> LatticeClass:
        if name not in self.classes:
            known = ", ".join(sorted(self.classes)) or "none"
            raise KeyError(f"no class named {name!r} (declared: {known})")
        return self.classes[name]

    def require_moments(self, name: str) -> MomentSequence:
        if name not in self.moments:
            known = ", ".join(sorted(self.moments)) or "none"
            raise KeyError(f"no moments named {name!r} (declared: {known})")
        return self.moments[name]


def _ints(tokens: list[str], line_no: int, what: str) -> list[int]:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise FormatError(f"expected integer in {what}, got {tok!r}", line_no) from None
    return out


def parse_form_terms(text: str, q: int, side: str, line_no: int) -> ExtForm:
    """Parse `indices: coeff; indices: coeff; ...` (`-` = empty set)."""
    form = ExtForm.zero(q, side)
    body = text.strip()
    if not body:
        return form
    for chunk in body.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise FormatError(f"term {chunk!r} is missing ':'", line_no)
        left, _, right = chunk.partition(":")
        left = left.strip()
        indices: tuple[int, ...]
        if left == "-":
            indices = ()
        else:
            raw = _ints(left.split(), line_no, "index set")
            indices = tuple(raw)
            if list(indices) != sorted(set(indices)):
                raise FormatError(f"index set {left!r} must be strictly increasing", line_no)
            if indices and (indices[0] < 1 or indices[-1] > 2 * q):
                raise FormatError(f"index set {left!r} outside 1..{2 * q}", line_no)
        (coeff,) = _ints([right.strip()], line_no, "coefficient")
        if coeff:
            form = form + ExtForm.monomial(q, side, indices, coeff)
    return form


def form_terms_to_str(form: ExtForm) -> str:
    """Canonical `indices: coeff` rendering (degree, then index order)."""
    if form.is_zero():
        return "-: 0"
    parts = []
    for indices, coeff in form.canonical_terms():
        left = " ".join(str(i) for i in indices) if indices else "-"
        parts.append(f"{left}: {coeff}")
    return "; ".join(parts)


def parse_surface_text(text: str) -> ParsedSurface:
    lines = text.splitlines()
    header: dict[str, int] = {}
    gram_rows: list[tuple[int, ...]] = []
    gram_todo = 0
    k_coords: tuple[int, ...] | None = None
    cup: dict[tuple[int, int], LatticeClass] = {}
    classes: dict[str, LatticeClass] = {}
    moment_blocks: list[tuple[str, str, list[ExtForm], int]] = []
    in_moments: tuple[str, str, list[ExtForm], int] | None = None

    def need(key: str, line_no: int) -> int:
        if key not in header:
            raise FormatError(f"{key} must be declared before this line", line_no)
        return header[key]

    for idx, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]

        if gram_todo:
            row = _ints(tokens, idx, "gram row")
            if len(row) != header["h2_rank"]:
                raise FormatError(
                    f"gram row has {len(row)} entries, expected {header['h2_rank']}", idx
                )
            gram_rows.append(tuple(row))
            gram_todo -= 1
            continue

        if in_moments is not None:
            if key == "moment":
                q = need("q", idx)
                body = line[len("moment"):]
                in_moments[2].append(parse_form_terms(body, q, PRIMAL, idx))
                continue
            if key == "end":
                moment_blocks.append(in_moments)
                in_moments = None
                continue
            raise FormatError("expected `moment ...` or `end` inside moments block", idx)

        if key in ("q", "chi", "pg_positive", "h2_rank"):
            if len(tokens) != 2:
                raise FormatError(f"{key} takes exactly one integer", idx)
            if key in header:
                raise FormatError(f"duplicate {key}", idx)
            (value,) = _ints(tokens[1:], idx, key)
            if key in ("q", "h2_rank") and value < 0:
                raise FormatError(f"{key} must be nonnegative", idx)
            if key == "pg_positive" and value not in (0, 1):
                raise FormatError("pg_positive must be 0 or 1", idx)
            header[key] = value
            if key == "h2_rank":
                gram_todo = value
            continue

        if key == "k":
            rank = need("h2_rank", idx)
            if k_coords is not None:
                raise FormatError("duplicate k", idx)
            coords = _ints(tokens[1:], idx, "k")
            if len(coords) != rank:
                raise FormatError(f"k has {len(coords)} entries, expected {rank}", idx)
            k_coords = tuple(coords)
            continue

        if key == "cup":
            q = need("q", idx)
            rank = need("h2_rank", idx)
            if len(tokens) < 4 or tokens[3] != "->":
                raise FormatError("cup syntax is `cup i j -> vector`", idx)
            i, j = _ints(tokens[1:3], idx, "cup pair")
            if not (1 <= i < j <= 2 * q):
                raise FormatError(f"cup pair ({i}, {j}) must satisfy 1 <= i < j <= {2 * q}", idx)
            if (i, j) in cup:
                raise FormatError(f"duplicate cup entry for ({i}, {j})", idx)
            coords = _ints(tokens[4:], idx, "cup vector")
            if len(coords) != rank:
                raise FormatError(f"cup vector has {len(coords)} entries, expected {rank}", idx)
            cup[(i, j)] = LatticeClass(tuple(coords))
            continue

        if key == "class":
            rank = need("h2_rank", idx)
            if len(tokens) < 2:
                raise FormatError("class syntax is `class NAME vector`", idx)
            name = tokens[1]
            if not _NAME.match(name):
                raise FormatError(f"bad class name {name!r}", idx)
            if name in classes:
                raise FormatError(f"duplicate class {name!r}", idx)
            coords = _ints(tokens[2:], idx, "class vector")
            if len(coords) != rank:
                raise FormatError(f"class vector has {len(coords)} entries, expected {rank}", idx)
            classes[name] = LatticeClass(tuple(coords))
            continue

        if key == "moments":
            if len(tokens) != 3:
                raise FormatError("moments syntax is `moments NAME CLASSNAME`", idx)
            name, class_name = tokens[1], tokens[2]
            if not _NAME.match(name):
                raise FormatError(f"bad moments name {name!r}", idx)
            if class_name not in classes:
                raise FormatError(f"moments block references unknown class {class_name!r}", idx)
            if any(name == b[0] for b in moment_blocks):
                raise FormatError(f"duplicate moments block {name!r}", idx)
            in_moments = (name, class_name, [], idx)
            continue

        raise FormatError(f"unrecognised directive {key!r}", idx)

    if in_moments is not None:
        raise FormatError(f"moments block {in_moments[0]!r} is missing `end`", in_moments[3])
    for key in ("q", "chi", "h2_rank"):
        if key not in header:
            raise FormatError(f"missing {key}", len(lines))
    if gram_todo:
        raise FormatError(f"expected {gram_todo} more gram rows", len(lines))
    if k_coords is None:
        raise FormatError("missing k", len(lines))

    lattice = Lattice(tuple(gram_rows))
    surface = SurfaceTopology(
        q=header["q"],
        chi=header["chi"],
        h2=lattice,
        k=LatticeClass(k_coords),
        cup=cup,
        pg_positive=bool(header.get("pg_positive", 0)),
    )
    moments = {
        name: MomentSequence(surface.q, classes[class_name], tuple(forms))
        for name, class_name, forms, _ in moment_blocks
    }
    return ParsedSurface(surface, classes, moments)


def parse_surface_file(path) -> ParsedSurface:
    with open(path, encoding="utf-8") as fh:
        return parse_surface_text(fh.read())


def serialize(parsed: ParsedSurface) -> str:
    """Canonical text rendering; parse_surface_text inverts it."""
    s = parsed.surface
    out = [
        f"q {s.q}",
        f"chi {s.chi}",
        f"pg_positive {1 if s.pg_positive else 0}",
        f"h2_rank {s.h2.rank}",
    ]
    for row in s.h2.gram:
        out.append(" ".join(str(v) for v in row))
    out.append("k " + " ".join(str(v) for v in s.k.coords))
    for (i, j) in sorted(s.cup):
        vec = " ".join(str(v) for v in s.cup[(i, j)].coords)
        out.append(f"cup {i} {j} -> {vec}")
    class_names = {cls: name for name, cls in parsed.classes.items()}
    for name in sorted(parsed.classes):
        vec = " ".join(str(v) for v in parsed.classes[name].coords)
        out.append(f"class {name} {vec}")
    for name in sorted(parsed.moments):
        ms = parsed.moments[name]
        if ms.m not in class_names:
            raise ValueError(f"moments {name!r} uses a class with no declared name")
        out.append(f"moments {name} {class_names[ms.m]}")
        for a in ms.moments:
            out.append("moment " + form_terms_to_str(a))
        out.append("end")
    return "\n".join(out) + "\n"
