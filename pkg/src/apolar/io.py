"""JSON input and output for form systems.

Input documents look like::

    {"schema": "apolar/1", "d": 5,
     "forms": [{"coeffs": ["-1", "-5", "10", "-10", "5", "1"]},
               {"powers": [{"l": ["1", "0"], "c": "-6"}, ...]}]}

Rationals are strings ``"p/q"`` (plain integers are accepted too).
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .forms import BinaryForm, DualForm, LinearForm, ProjectivePoint, expand_power_sum

SCHEMA = "apolar/1"


class InputError(ValueError):
    pass


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise InputError(f"rationals must be strings or integers, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise InputError(f"bad rational {s!r}") from e


def fmt_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_system(doc: dict) -> tuple[int, list[BinaryForm]]:
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise InputError(f"unsupported schema {schema!r}")
    try:
        d = doc["d"]
        entries = doc["forms"]
    except KeyError as e:
        raise InputError(f"missing key {e}") from e
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InputError("d must be a positive integer")
    if not isinstance(entries, list) or not entries:
        raise InputError("forms must be a nonempty list")
    forms = []
    for i, entry in enumerate(entries):
        if "coeffs" in entry:
            coeffs = [parse_rational(c) for c in entry["coeffs"]]
            if len(coeffs) != d + 1:
                raise InputError(f"form {i}: expected {d + 1} coefficients, got {len(coeffs)}")
            forms.append(BinaryForm(coeffs))
        elif "powers" in entry:
            terms = []
            for t in entry["powers"]:
                a, b = (parse_rational(x) for x in t["l"])
                if a == 0 and b == 0:
                    raise InputError(f"form {i}: zero linear form")
                lf = LinearForm(a, b)
                # LinearForm is primitive; fold the rescaling into the coefficient
                scale = a / lf.a if lf.a else b / lf.b
                terms.append((lf, parse_rational(t.get("c", "1")) * scale**d))
            forms.append(expand_power_sum(d, terms))
        else:
            raise InputError(f"form {i}: needs 'coeffs' or 'powers'")
    return d, forms


def load_system(path) -> tuple[int, list[BinaryForm]]:
    """Read a system from a path, ``-`` for stdin, or ``fixture:<name>``."""
    if isinstance(path, str) and path.startswith("fixture:"):
        text = fixture_text(path.split(":", 1)[1])
    elif str(path) == "-":
        import sys

        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise InputError(str(e)) from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from e
    return parse_system(doc)


def fixture_text(name: str) -> str:
    name = name if name.endswith(".json") else name + ".json"
    try:
        return resources.files("apolar").joinpath("fixtures", name).read_text()
    except FileNotFoundError as e:
        raise InputError(f"no fixture named {name!r}") from e


def form_json(f) -> list[str]:
    return [fmt_rational(c) for c in f.coeffs]


def form_text(f) -> str:
    return str(f)


def point_json(p: ProjectivePoint):
    if p.exact:
        return {"exact": True, "p": str(p.p), "q": str(p.q), "linear_form": [str(p.p), str(p.q)]}
    return {"exact": False, "p": [p.p.real, p.p.imag], "q": [p.q.real, p.q.imag]}


def scalar_json(c):
    if isinstance(c, Fraction):
        return fmt_rational(c)
    c = complex(c)
    return [c.real, c.imag]


def dual_json(D: DualForm | None):
    return None if D is None else {"coeffs": form_json(D), "text": str(D)}


def dumps(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, indent=2, sort_keys=True)
