"""Command line front end.

Usage::

    divclosed <command> --input <path|-> [--format json|text|dot] [--submonoid 0,2,...]

Input is a JSON document describing either an affine semigroup::

    {"kind": "affine", "generators": [[5, 9, 0], [10, 11, 0]]}

or a presentation N^p / ~M, by defining equations or by generators of M::

    {"kind": "presentation", "p": 4,
     "congruences": [{"coeffs": [8, 5, 1, 0], "modulus": 10}],
     "equations": [[1, 1, 1, 1]]}
    {"kind": "presentation", "p": 4, "group_generators": [[-5, -7, 5, 7]]}

Integers may be JSON numbers or decimal strings. In the output, vector
entries and computed values are decimal strings, so no consumer has to cope
with 64-bit overflow; generator indices (0-based), dimensions and Hasse edge
endpoints are plain JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .cone import FaceLattice, enumerate_faces
from .lattice import EquationSystem, LatticeBasis, equations_to_generators, generators_to_equations, kernel_basis, transpose
from .monoid import (
    AffineSemigroup,
    DCLattice,
    InvariantError,
    MonoidPresentation,
    NotReducedError,
    build_affine_model,
    check_dc_projection,
    dc_lattice_affine,
    dc_lattice_presentation,
    delta_set_of_element,
    delta_star,
    enumerate_factorizations,
    is_divisor_closed_affine,
    min_delta_submonoid,
)

COMMANDS = ("rays", "faces", "dc", "delta-star", "min-delta", "check-dc",
            "gens2eqs", "eqs2gens", "factorizations")

EXIT_OK, EXIT_VALIDATION, EXIT_NOT_REDUCED, EXIT_INTERNAL = 0, 2, 3, 4


class ValidationError(ValueError):
    pass


def _int(v: Any, what: str) -> int:
    if isinstance(v, bool):
        raise ValidationError(f"{what}: expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip())
        except ValueError:
            pass
    raise ValidationError(f"{what}: expected an integer, got {v!r}")


def _vector(v: Any, what: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(v, list):
        raise ValidationError(f"{what}: expected a list of integers")
    out = tuple(_int(x, what) for x in v)
    if length is not None and len(out) != length:
        raise ValidationError(f"{what}: expected length {length}, got {len(out)}")
    return out


def _vectors(v: Any, what: str, length: int | None = None) -> list[tuple[int, ...]]:
    if not isinstance(v, list):
        raise ValidationError(f"{what}: expected a list of vectors")
    return [_vector(x, f"{what}[{i}]", length) for i, x in enumerate(v)]


def parse_input(doc: Any) -> AffineSemigroup | MonoidPresentation:
    """Validate an input document and build the monoid it describes."""
    if not isinstance(doc, dict):
        raise ValidationError("input must be a JSON object")
    kind = doc.get("kind")
    if kind == "affine":
        gens = _vectors(doc.get("generators"), "generators")
        if not gens:
            raise ValidationError("generators: at least one generator is required")
        if len({len(g) for g in gens}) != 1:
            raise ValidationError("generators: vectors have different lengths")
        for g in gens:
            if any(x < 0 for x in g):
                raise ValidationError(f"generators: negative coordinate in {list(g)}")
            if not any(g):
                raise ValidationError("generators: the zero vector is not allowed")
        return AffineSemigroup(tuple(gens))
    if kind == "presentation":
        p = _int(doc.get("p"), "p")
        if p < 1:
            raise ValidationError("p: must be positive")
        by_eqs = "congruences" in doc or "equations" in doc
        by_gens = "group_generators" in doc
        if by_eqs == by_gens:
            raise ValidationError(
                "presentation needs exactly one of congruences/equations or group_generators")
        if by_gens:
            return MonoidPresentation(p, LatticeBasis(p, tuple(_vectors(doc["group_generators"], "group_generators", p))))
        congs = []
        raw = doc.get("congruences", [])
        if not isinstance(raw, list):
            raise ValidationError("congruences: expected a list")
        for i, c in enumerate(raw):
            if not isinstance(c, dict):
                raise ValidationError(f"congruences[{i}]: expected an object")
            d = _int(c.get("modulus"), f"congruences[{i}].modulus")
            if d < 2:
                raise ValidationError(f"congruences[{i}].modulus: must be at least 2, got {d}")
            congs.append((_vector(c.get("coeffs"), f"congruences[{i}].coeffs", p), d))
        eqs = _vectors(doc.get("equations", []), "equations", p)
        return MonoidPresentation(p, EquationSystem(p, tuple(congs), tuple(eqs)))
    raise ValidationError(f"kind: expected 'affine' or 'presentation', got {kind!r}")


def _s(v: Sequence[int]) -> list[str]:
    return [str(x) for x in v]


def _stringify(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, list):
        return [_stringify(x) for x in v]
    if isinstance(v, dict):
        return {k: _stringify(x) for k, x in v.items()}
    return v


def _lattice_doc(lat: FaceLattice | DCLattice) -> dict:
    if isinstance(lat, FaceLattice):
        nodes = [{"generators": sorted(f.generator_indices), "rays": sorted(f.ray_indices),
                  "dim": f.dim} for f in lat.faces]
    else:
        nodes = [{"generators": sorted(n.generator_indices)} for n in lat.nodes]
    return {"nodes": nodes, "hasse_edges": [list(e) for e in lat.hasse_edges]}


def _equations_doc(system: EquationSystem) -> dict:
    return {"congruences": [{"coeffs": _s(a), "modulus": str(d)} for a, d in system.congruences],
            "equations": [_s(a) for a in system.equations]}


def render_dot(lattice: FaceLattice | DCLattice, name: str = "lattice") -> str:
    """Hasse diagram in Graphviz DOT, one node per element labeled by its generator set."""
    if isinstance(lattice, FaceLattice):
        sets = [f.generator_indices for f in lattice.faces]
    else:
        sets = [n.generator_indices for n in lattice.nodes]
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, s in enumerate(sets):
        label = "{" + ",".join(str(j) for j in sorted(s)) + "}"
        lines.append(f'  n{i} [label="{label}"];')
    for a, b in lattice.hasse_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_index_set(text: str | None, p: int) -> frozenset[int] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return frozenset()
    try:
        idx = frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise ValidationError(f"--submonoid: cannot parse {text!r}") from None
    if not idx <= set(range(p)):
        raise ValidationError(f"--submonoid: indices must lie in 0..{p - 1}")
    return idx


def _affine_view(monoid):
    """The affine semigroup whose cone is examined for geometric commands."""
    if isinstance(monoid, AffineSemigroup):
        return monoid, None
    model = build_affine_model(monoid)
    return model.h, model


def run(command: str, doc: Any, submonoid: str | None = None,
        element: str | None = None) -> tuple[dict, FaceLattice | DCLattice | None]:
    """Execute ``command`` on a parsed input document.

    Returns the output document and, for lattice-valued commands, the lattice
    itself (for DOT rendering).
    """
    if command not in COMMANDS:
        raise ValidationError(f"unknown command {command!r}")
    monoid = parse_input(doc)
    p = monoid.p
    out: dict[str, Any] = {"command": command, "input": _stringify(doc)}
    if isinstance(monoid, MonoidPresentation):
        out["input"]["p"] = p
    lattice = None

    if command == "rays":
        h, model = _affine_view(monoid)
        c = h.cone
        out.update(rays=[_s(r) for r in c.rays], facets=[_s(f) for f in c.facet_normals],
                   equations=[_s(e) for e in c.equations], dim=c.dim)
        if model is not None:
            out["model_generators"] = [_s(g) for g in h.generators]
    elif command == "faces":
        h, model = _affine_view(monoid)
        lattice = enumerate_faces(h.cone)
        out["faces"] = _lattice_doc(lattice)
    elif command == "dc":
        lattice = dc_lattice_affine(monoid) if isinstance(monoid, AffineSemigroup) \
            else dc_lattice_presentation(monoid)
        out["dc_lattice"] = _lattice_doc(lattice)
    elif command == "delta-star":
        rep = delta_star(monoid)
        out["delta_report"] = [{"generators": sorted(n.generator_indices),
                                "min_delta": None if d is None else str(d)}
                               for n, d in rep.per_submonoid]
        out["delta_star"] = _s(rep.delta_star)
    elif command == "min-delta":
        j = _parse_index_set(submonoid, p)
        j = frozenset(range(p)) if j is None else j
        d = min_delta_submonoid(monoid, j)
        out.update(submonoid=sorted(j), min_delta=None if d is None else str(d))
    elif command == "check-dc":
        j = _parse_index_set(submonoid, p)
        if j is None:
            raise ValidationError("check-dc requires --submonoid")
        if isinstance(monoid, AffineSemigroup):
            ok = is_divisor_closed_affine(monoid, j)
        else:
            ok = check_dc_projection(build_affine_model(monoid), j)
        out.update(submonoid=sorted(j), divisor_closed=ok)
    elif command == "gens2eqs":
        m = monoid.lattice if isinstance(monoid, MonoidPresentation) else \
            kernel_basis(transpose(monoid.generators, monoid.ambient_dim), p)
        out["equations"] = _equations_doc(generators_to_equations(m))
    elif command == "eqs2gens":
        system = monoid.equations if isinstance(monoid, MonoidPresentation) else \
            generators_to_equations(kernel_basis(transpose(monoid.generators, monoid.ambient_dim), p))
        out["group_generators"] = [_s(v) for v in equations_to_generators(system).basis]
    elif command == "factorizations":
        raw = element if element is not None else doc.get("element")
        if raw is None:
            raise ValidationError("factorizations requires --element or an 'element' field")
        if isinstance(raw, str):
            try:
                raw = [int(t) for t in raw.split(",")] if raw.strip() else []
            except ValueError:
                raise ValidationError(f"element: cannot parse {raw!r}") from None
        x0 = _vector(raw, "element", p)
        if any(x < 0 for x in x0):
            raise ValidationError("element: coordinates must be nonnegative")
        zs = enumerate_factorizations(monoid, x0)
        out.update(element=_s(x0), factorizations=[_s(z) for z in zs],
                   lengths=_s(sorted({sum(z) for z in zs})),
                   delta=_s(sorted(delta_set_of_element(monoid, x0))))
    return out, lattice


def render_text(out: dict) -> str:
    lines = []
    for key in sorted(out):
        if key == "input":
            continue
        val = out[key]
        lines.append(f"{key}: {json.dumps(val, sort_keys=True, separators=(',', ':'))}")
    return "\n".join(lines) + "\n"


def _error(code: str, message: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": {"code": code, "message": message}}, sort_keys=True) + "\n")
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="divclosed", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="path to a JSON document, or - for stdin")
    parser.add_argument("--format", choices=("json", "text", "dot"), default="json")
    parser.add_argument("--submonoid", help="comma separated 0-based generator indices")
    parser.add_argument("--element", help="comma separated factorization of an element")
    args = parser.parse_args(argv)

    try:
        if args.input == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                doc = json.load(fh)
    except OSError as exc:
        return _error("io_error", str(exc), EXIT_VALIDATION)
    except json.JSONDecodeError as exc:
        return _error("malformed_json", str(exc), EXIT_VALIDATION)

    try:
        out, lattice = run(args.command, doc, args.submonoid, args.element)
        if args.format == "dot" and lattice is None:
            raise ValidationError("--format dot is only available for faces and dc")
    except NotReducedError as exc:
        return _error("not_reduced", str(exc), EXIT_NOT_REDUCED)
    except InvariantError as exc:
        return _error("internal_error", str(exc), EXIT_INTERNAL)
    except ValueError as exc:
        return _error("validation_error", str(exc), EXIT_VALIDATION)

    if args.format == "dot":
        sys.stdout.write(render_dot(lattice, args.command.replace("-", "_")))
    elif args.format == "text":
        sys.stdout.write(render_text(out))
    else:
        sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
