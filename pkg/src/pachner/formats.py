"""Reading and writing complexes.

Two formats:

* facet list -- one facet per line, whitespace separated integer labels;
  ``#`` starts a comment, blank lines are ignored.
* JSON -- ``{"dim": d, "facets": [[...], ...], "name": ...}``.

Writers emit facets in lexicographic order, so write -> read -> write is
byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import SimplicialComplex, from_facets


def parse_facet_list(text: str) -> SimplicialComplex:
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            facets.append([int(tok) for tok in line.split()])
    return from_facets(facets)


def format_facet_list(c: SimplicialComplex, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [" ".join(map(str, f)) for f in c.sorted_facets]
    return "\n".join(lines) + "\n"


def complex_to_dict(c: SimplicialComplex, name: str | None = None) -> dict:
    return {"dim": c.dim, "facets": [list(f) for f in c.sorted_facets], "name": name}


def complex_from_dict(data: dict) -> SimplicialComplex:
    c = from_facets(data["facets"])
    if "dim" in data and data["dim"] != c.dim:
        raise ValueError(f"declared dim {data['dim']} but facets have dim {c.dim}")
    return c


def parse_json(text: str) -> SimplicialComplex:
    return complex_from_dict(json.loads(text))


def format_json(c: SimplicialComplex, name: str | None = None) -> str:
    return json.dumps(complex_to_dict(c, name), indent=None, separators=(", ", ": ")) + "\n"


def read_complex(path: str | Path) -> SimplicialComplex:
    """Read either format; JSON is detected by a leading ``{``."""
    text = Path(path).read_text()
    return parse_json(text) if text.lstrip().startswith("{") else parse_facet_list(text)


def write_complex(c: SimplicialComplex, path: str | Path, name: str | None = None) -> None:
    path = Path(path)
    text = format_json(c, name) if path.suffix == ".json" else format_facet_list(c, name)
    path.write_text(text)
