"""Instance files and result reports.

An instance is a JSON document::

    {"curve": [[0, 0], [1, 0]], "points": [[0, 0], [0.5, 2]],
     "dimension": 2, "metadata": {"name": "demo"}}

or a CSV-like text with one element per line, ``c x y`` for curve vertices
and ``p x y`` for points (commas or whitespace separate fields, ``#`` starts
a comment).  Coordinates are read as exact decimals and kept as Fractions
alongside the float arrays, so the exact sweep sees the numbers as written.
"""

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

__all__ = [
    "InstanceError",
    "Instance",
    "ResultReport",
    "parse_instance",
    "load_instance",
    "serialize_instance",
]


class InstanceError(ValueError):
    """Malformed instance document."""


@dataclass
class Instance:
    """A curve, a point set and free-form metadata.

    ``curve`` and ``points`` are float arrays; ``exact_curve`` and
    ``exact_points`` hold the same coordinates as Fractions.
    """

    curve: np.ndarray
    points: np.ndarray
    metadata: dict = field(default_factory=dict)
    exact_curve: tuple = None
    exact_points: tuple = None
    curve2: np.ndarray = None

    @property
    def dimension(self):
        return self.curve.shape[1]

    @property
    def n(self):
        """Number of segments of the curve."""
        return len(self.curve) - 1

    @property
    def k(self):
        return len(self.points)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        same2 = (self.curve2 is None and other.curve2 is None) or (
            self.curve2 is not None and other.curve2 is not None and np.array_equal(self.curve2, other.curve2)
        )
        return (
            self.exact_curve == other.exact_curve
            and self.exact_points == other.exact_points
            and self.metadata == other.metadata
            and same2
        )


def _exact(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float, Fraction, str)):
        raise InstanceError(f"{where}: coordinate {value!r} is not a number")
    try:
        f = Fraction(value) if not isinstance(value, float) else Fraction(repr(value))
    except (ValueError, ZeroDivisionError):
        raise InstanceError(f"{where}: coordinate {value!r} is not a number") from None
    return f


def _rows(rows, what, where):
    if not isinstance(rows, list) or not rows:
        raise InstanceError(f"{where}: '{what}' must be a nonempty list of coordinate lists")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise InstanceError(f"{where}: {what}[{i}] must be a nonempty coordinate list")
        out.append(tuple(_exact(v, f"{where}: {what}[{i}]") for v in row))
    return out


def _build(curve, points, metadata, dim=None, curve2=None, where="instance"):
    dims = {len(r) for r in curve} | {len(r) for r in points} | ({len(r) for r in curve2} if curve2 else set())
    if len(dims) != 1:
        raise InstanceError(f"{where}: dimension mismatch, found coordinate lengths {sorted(dims)}")
    d = dims.pop()
    if dim is not None and dim != d:
        raise InstanceError(f"{where}: declared dimension {dim} but coordinates have {d}")
    seen = set()
    unique = []
    for p in points:
        if p not in seen:
            seen.add(p)
            unique.append(p)
    if len(unique) < len(points):
        warnings.warn(f"{where}: dropped {len(points) - len(unique)} duplicate point(s)", stacklevel=4)
    to_arr = lambda rows: np.array([[float(v) for v in r] for r in rows], dtype=float)
    return Instance(
        curve=to_arr(curve),
        points=to_arr(unique),
        metadata=dict(metadata or {}),
        exact_curve=tuple(curve),
        exact_points=tuple(unique),
        curve2=to_arr(curve2) if curve2 else None,
    )


DIM_KEY, META_KEY = '"dimension"', '"metadata"'


def _parse_json(text):
    try:
        doc = json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InstanceError("line 1: top level must be an object with 'curve' and 'points'")
    for key in ("curve", "points"):
        if key not in doc:
            raise InstanceError(f"missing key '{key}' ({_line_of(text, '{')})")
    curve = _rows(doc["curve"], "curve", _line_of(text, '"curve"'))
    points = _rows(doc["points"], "points", _line_of(text, '"points"'))
    curve2 = _rows(doc["curve2"], "curve2", _line_of(text, '"curve2"')) if "curve2" in doc else None
    dim = doc.get("dimension")
    if dim is not None:
        if not isinstance(dim, Fraction) or dim.denominator != 1 or dim < 1:
            raise InstanceError(f"{_line_of(text, DIM_KEY)}: dimension must be a positive integer")
        dim = int(dim)
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        raise InstanceError(f"{_line_of(text, META_KEY)}: metadata must be an object")
    return _build(curve, points, _plain(meta), dim, curve2)


def _plain(obj):
    # metadata numbers come back as Fractions from the exact parser
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else float(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_plain(v) for v in obj]
    return obj


def _line_of(text, token):
    idx = text.find(token)
    return f"line {text.count(chr(10), 0, idx) + 1}" if idx >= 0 else "line 1"


def _parse_csv(text):
    curve, points = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f for f in line.replace(",", " ").split() if f]
        tag = fields[0].lower()
        if tag not in ("c", "p"):
            raise InstanceError(f"line {lineno}: expected 'c' or 'p' row tag, got {fields[0]!r}")
        if len(fields) < 2:
            raise InstanceError(f"line {lineno}: row has no coordinates")
        row = tuple(_exact(v, f"line {lineno}") for v in fields[1:])
        (curve if tag == "c" else points).append(row)
    if not curve:
        raise InstanceError("no curve rows ('c x y') found")
    if not points:
        raise InstanceError("no point rows ('p x y') found")
    return _build(curve, points, {}, where="csv")


def parse_instance(text, fmt=None):
    """Parse an instance from JSON or CSV text.

    ``fmt`` is ``"json"``, ``"csv"`` or ``None`` to detect from the first
    non-blank character.
    """
    if fmt is None:
        fmt = "json" if text.lstrip()[:1] in ("{", "[") else "csv"
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ValueError(f"unknown instance format {fmt!r}")


def load_instance(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    fmt = "csv" if str(path).lower().endswith((".csv", ".txt")) else None
    return parse_instance(text, fmt)


def _decimal(f):
    """Exact decimal text for a Fraction with a terminating expansion."""
    num, den = f.numerator, f.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return repr(float(f))
    digits = max(twos, fives)
    scaled = num * 10**digits // f.denominator
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    return sign + (s[:-digits] + "." + s[-digits:] if digits else s)


def serialize_instance(inst):
    """JSON text for ``inst``; :func:`parse_instance` reads it back unchanged."""

    def rows(rs):
        return "[" + ", ".join("[" + ", ".join(_decimal(v) for v in r) + "]" for r in rs) + "]"

    parts = [
        f'"curve": {rows(inst.exact_curve)}',
        f'"points": {rows(inst.exact_points)}',
        f'"dimension": {inst.dimension}',
    ]
    if inst.curve2 is not None:
        parts.append(f'"curve2": {rows(tuple(tuple(Fraction(repr(float(v))) for v in r) for r in inst.curve2))}')
    parts.append(f'"metadata": {json.dumps(inst.metadata, sort_keys=True)}')
    return "{\n  " + ",\n  ".join(parts) + "\n}\n"


def _listify(a):
    if a is None:
        return None
    return np.asarray(a, dtype=float).tolist()


@dataclass
class ResultReport:
    """What a command computed, in a JSON-friendly shape.

    ``accepted`` is ``None`` for commands without a yes/no answer.
    """

    command: str
    variant: str = None
    accepted: bool = None
    eps_query: float = None
    eps_achieved: float = None
    eps_optimal: float = None
    translation: list = None
    curve: list = None
    indices: list = None
    witness: dict = field(default_factory=dict)
    wall_time: float = None
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_match(cls, command, variant, match, eps_query=None, eps_optimal=None, wall_time=None, **meta):
        rep = cls(command, variant, match is not None, eps_query, None, eps_optimal, wall_time=wall_time, metadata=meta)
        if match is not None:
            rep.eps_achieved = float(match.epsilon)
            rep.curve = _listify(match.curve)
            rep.indices = [int(i) for i in match.indices]
            rep.translation = _listify(match.translation)
            rep.witness = _summarize(match.witness)
        return rep

    def to_json(self):
        data = asdict(self)
        for key, val in data.items():
            if isinstance(val, float) and not math.isfinite(val):
                raise ValueError(f"{key} is not finite")
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(**data)


def _summarize(witness):
    from .frechet import Coupling, Reachability

    if isinstance(witness, Coupling):
        return {"type": "coupling", "steps": [list(s) for s in witness.steps]}
    if isinstance(witness, Reachability):
        return {"type": "free-space", "eps": witness.eps, "accepted": witness.accepted}
    return {}
