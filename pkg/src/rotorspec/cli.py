"""Command-line surface and the versioned JSON job schema.

Pipeline: canonicalize -> classify -> inertia -> admissible structures ->
spectrum, plus a verification mode running the oracle suite.

Exit codes: 0 ok, 1 verify failure, 2 schema violation, 3 degenerate
geometry (all particles coincide), 4 invalid bundle request.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from . import verify as verify_mod
from .classical_em import PatternField, decoupling_check, split_field, unsplit_field
from .defaults import DEFAULT_TOLERANCES, J_MAX_DEFAULT, Tolerances
from .errors import (
    AllCoincidentError,
    NonPositiveMassError,
    RotorSpecError,
    SchemaError,
)
from .geometry import ParticleSystem, canonicalize
from .inertia import TopClass, inertia_tensor, principal_momenta, scalar_curvature
from .polyalg import harmonic_basis, harmonic_basis_r3
from .polyalg.operators import OperatorMatrix, hamiltonian_matrix, pairing_weights
from .quantum_structures import (
    BundleKind,
    admissible_structures,
    bundle_of_j,
    degree_of_j,
)
from .spectra import (
    SpectralLine,
    Spectrum,
    asymmetric_spectrum,
    degenerate_spectrum,
    monopole_spectrum,
    spherical_spectrum,
    symmetric_spectrum,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_SCHEMA = 2
EXIT_GEOMETRY = 3
EXIT_BUNDLE = 4


class BundleRequestError(RotorSpecError):
    """A bundle (or mode) request is inadmissible for this body."""


# --- numbers and schema -------------------------------------------------------


def parse_number(value, where: str):
    """Accept JSON numbers and exact rationals written as strings 'p/q'."""
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected a number")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: not a rational literal: {value!r}") from exc
    raise SchemaError(f"{where}: expected a number or 'p/q' string")


def _vec3(value, where: str):
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise SchemaError(f"{where}: expected a 3-vector")
    return [float(parse_number(x, where)) for x in value]


@dataclass
class JobConfig:
    particles: list[tuple[float, float, list[float]]]
    hbar0: object = 1
    k: object = 0
    bundle: str = "auto"
    j_max: object = J_MAX_DEFAULT
    field: dict | None = None
    output: str = "table"
    tolerances: Tolerances = DEFAULT_TOLERANCES
    em_probe: dict | None = None


def load_job(path: str) -> JobConfig:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("config root must be an object")
    if doc.get("version", 1) != 1:
        raise SchemaError(f"unsupported schema version {doc.get('version')!r}")
    raw_particles = doc.get("particles")
    if not isinstance(raw_particles, list) or len(raw_particles) < 2:
        raise SchemaError("'particles' must list at least 2 entries")
    particles = []
    for i, entry in enumerate(raw_particles):
        if not isinstance(entry, dict):
            raise SchemaError(f"particles[{i}] must be an object")
        try:
            mass = float(parse_number(entry["mass"], f"particles[{i}].mass"))
            charge = float(parse_number(entry.get("charge", 0), f"particles[{i}].charge"))
            pos = _vec3(entry["position"], f"particles[{i}].position")
        except KeyError as exc:
            raise SchemaError(f"particles[{i}] is missing {exc}") from exc
        particles.append((mass, charge, pos))
    bundle = doc.get("bundle", "auto")
    if bundle not in ("auto", "trivial", "nontrivial", "both"):
        raise SchemaError(f"unknown bundle request {bundle!r}")
    output = doc.get("output", "table")
    if output not in ("table", "csv", "json"):
        raise SchemaError(f"unknown output format {output!r}")
    field = doc.get("field")
    if field is not None:
        if not isinstance(field, dict) or field.get("type") not in (
            "none",
            "constant",
            "monopole",
        ):
            raise SchemaError("'field.type' must be none | constant | monopole")
        if field["type"] == "constant":
            field = {
                "type": "constant",
                "E": _vec3(field.get("E", [0, 0, 0]), "field.E"),
                "B": _vec3(field.get("B", [0, 0, 0]), "field.B"),
            }
        elif field["type"] == "monopole":
            field = {
                "type": "monopole",
                "nu": parse_number(field.get("nu", 0), "field.nu"),
                "q_norm": parse_number(field.get("q_norm", 0), "field.q_norm"),
            }
        else:
            field = {"type": "none"}
    tol_doc = doc.get("tolerances", {})
    if not isinstance(tol_doc, dict):
        raise SchemaError("'tolerances' must be an object")
    tolerances = Tolerances(
        rel=float(parse_number(tol_doc.get("rel", DEFAULT_TOLERANCES.rel), "tolerances.rel")),
        abs=float(parse_number(tol_doc.get("abs", DEFAULT_TOLERANCES.abs), "tolerances.abs")),
        spec=float(parse_number(tol_doc.get("spec", DEFAULT_TOLERANCES.spec), "tolerances.spec")),
    )
    j_max = parse_number(doc.get("j_max", J_MAX_DEFAULT), "j_max")
    hbar0 = parse_number(doc.get("hbar", 1), "hbar")
    if float(hbar0) <= 0:
        raise SchemaError("hbar must be positive")
    k = parse_number(doc.get("k", 0), "k")
    em_probe = doc.get("em_probe")
    if em_probe is not None and not isinstance(em_probe, dict):
        raise SchemaError("'em_probe' must be an object")
    return JobConfig(
        particles=particles,
        hbar0=hbar0,
        k=k,
        bundle=bundle,
        j_max=j_max,
        field=field,
        output=output,
        tolerances=tolerances,
        em_probe=em_probe,
    )


# --- spectrum serialization -----------------------------------------------------


def _encode_number(x):
    if isinstance(x, Rational):
        return str(Fraction(x))
    return float(x)


def _decode_number(v):
    if isinstance(v, str):
        return Fraction(v)
    return float(v)


def spectrum_to_dict(spec: Spectrum) -> dict:
    lines = []
    for ln in spec.lines:
        lines.append(
            {
                "energy": _encode_number(ln.energy),
                "j": str(ln.j),
                "l": None if ln.l is None else str(ln.l),
                "multiplicity": ln.multiplicity,
                "bundle": ln.bundle.value,
                "source": ln.source,
                "eigensections": None
                if ln.eigensections is None
                else [list(ref) for ref in ln.eigensections],
            }
        )
    return {
        "kind": spec.kind,
        "bundle": None if spec.bundle is None else spec.bundle.value,
        "top_class": None if spec.top_class is None else spec.top_class.value,
        "params": {name: _encode_number(v) for name, v in spec.params.items()},
        "k": _encode_number(spec.k),
        "hbar0": _encode_number(spec.hbar0),
        "j_max": _encode_number(spec.j_max),
        "lines": lines,
    }


def spectrum_from_dict(doc: dict) -> Spectrum:
    lines = []
    for ln in doc["lines"]:
        refs = ln.get("eigensections")
        lines.append(
            SpectralLine(
                energy=_decode_number(ln["energy"]),
                j=Fraction(ln["j"]),
                l=None if ln["l"] is None else Fraction(ln["l"]),
                multiplicity=int(ln["multiplicity"]),
                bundle=BundleKind(ln["bundle"]),
                source=ln["source"],
                eigensections=None if refs is None else tuple(tuple(r) for r in refs),
            )
        )
    return Spectrum(
        lines=tuple(lines),
        kind=doc["kind"],
        bundle=None if doc["bundle"] is None else BundleKind(doc["bundle"]),
        top_class=None if doc["top_class"] is None else TopClass(doc["top_class"]),
        params={name: _decode_number(v) for name, v in doc["params"].items()},
        k=_decode_number(doc["k"]),
        hbar0=_decode_number(doc["hbar0"]),
        j_max=_decode_number(doc["j_max"]),
    )


def _fmt(x) -> str:
    return format(float(x), ".12g")


def render_spectra(spectra: list[Spectrum], output: str) -> str:
    if output == "json":
        doc = {"version": 1, "spectra": [spectrum_to_dict(s) for s in spectra]}
        return json.dumps(doc, indent=2, sort_keys=True)
    rows = []
    for spec in spectra:
        for ln in spec.lines:
            rows.append(
                (
                    ln.bundle.value,
                    str(ln.j),
                    "" if ln.l is None else str(ln.l),
                    _fmt(ln.energy),
                    str(ln.multiplicity),
                    ln.source,
                )
            )
    if output == "csv":
        out = ["bundle,j,l,energy,multiplicity,source"]
        out += [",".join(r) for r in rows]
        return "\n".join(out)
    header = ("bundle", "j", "l", "energy", "multiplicity", "source")
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    fmt_row = lambda r: "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
    lines = [fmt_row(header)]
    lines += [fmt_row(r) for r in rows]
    return "\n".join(lines)


# --- pipeline helpers ------------------------------------------------------------


_CLASS_NAMES = {
    1: "degenerate",
    2: "weakly non-degenerate",
    3: "strongly non-degenerate",
}


def _build_body(job: JobConfig):
    system = ParticleSystem(
        masses=[p[0] for p in job.particles],
        charges=[p[1] for p in job.particles],
        positions=[p[2] for p in job.particles],
    )
    config = canonicalize(system, job.tolerances)
    momenta = principal_momenta(inertia_tensor(config), config.degeneracy, job.tolerances)
    return system, config, momenta


def _requested_bundles(job: JobConfig, degenerate: bool) -> list[BundleKind]:
    if job.bundle == "auto":
        return [BundleKind.PLUS] if degenerate else [BundleKind.PLUS, BundleKind.MINUS]
    if job.bundle == "trivial":
        return [BundleKind.PLUS]
    if degenerate:
        raise BundleRequestError(
            "the non-trivial bundle does not exist over a degenerate (collinear) body"
        )
    if job.bundle == "nontrivial":
        return [BundleKind.MINUS]
    return [BundleKind.PLUS, BundleKind.MINUS]


def _free_spectrum(momenta, bundle: BundleKind, job: JobConfig) -> Spectrum:
    k, h, j_max, tol = job.k, job.hbar0, job.j_max, job.tolerances
    top = momenta.top_class
    if top is TopClass.DEGENERATE:
        return degenerate_spectrum(momenta.transverse_momentum, k, h, int(Fraction(j_max)))
    if top is TopClass.SPHERICAL:
        return spherical_spectrum(sum(momenta.momenta) / 3, bundle, k, h, j_max)
    if top is TopClass.SYMMETRIC:
        return symmetric_spectrum(momenta.pair_momentum, momenta.axis_momentum, bundle, k, h, j_max)
    i1, i2, i3 = momenta.momenta
    return asymmetric_spectrum(i1, i2, i3, bundle, k, h, j_max, tol)


def _spectra_for_job(job: JobConfig, momenta, fixed_point: bool) -> list[Spectrum]:
    degenerate = momenta.top_class is TopClass.DEGENERATE
    bundles = _requested_bundles(job, degenerate)
    field_type = (job.field or {"type": "none"})["type"]
    if field_type == "monopole":
        if not fixed_point:
            raise BundleRequestError(
                "the monopole spectrum describes a body pinned at the monopole; "
                "only rotational degrees of freedom remain. Re-run with --fixed-point "
                "to acknowledge the reduced mode."
            )
        if momenta.top_class is TopClass.SPHERICAL:
            i_val = sum(momenta.momenta) / 3
            pair, axis = i_val, i_val
        elif momenta.top_class is TopClass.SYMMETRIC:
            pair, axis = momenta.pair_momentum, momenta.axis_momentum
        else:
            raise BundleRequestError(
                "the monopole closed form needs a spherical or symmetric top; "
                f"this body is {momenta.top_class.value}"
            )
        return [
            monopole_spectrum(
                pair, axis, b, job.field["nu"], job.field["q_norm"], job.k, job.hbar0, job.j_max
            )
            for b in bundles
        ]
    if field_type == "constant":
        print(
            "note: constant fields enter only the em-split evaluation; "
            "emitting the free spectrum",
            file=sys.stderr,
        )
    if degenerate:
        return [_free_spectrum(momenta, BundleKind.PLUS, job)]
    return [_free_spectrum(momenta, b, job) for b in bundles]


# --- subcommands -----------------------------------------------------------------


def cmd_classify(job: JobConfig) -> int:
    system, config, momenta = _build_body(job)
    structures = admissible_structures(config.degeneracy)
    rho = scalar_curvature(momenta.top_class, momenta, job.hbar0)
    rows = [
        ("particles", str(config.n)),
        ("total mass", _fmt(config.total_mass)),
        ("center of mass", " ".join(_fmt(x) for x in config.center)),
        ("characteristic c_rot", str(config.characteristic)),
        ("degeneracy class", _CLASS_NAMES[config.characteristic]),
        ("principal momenta", " ".join(_fmt(x) for x in momenta.momenta)),
        ("top class", momenta.top_class.value),
        ("scalar curvature", _fmt(rho)),
        ("admissible bundles", ", ".join(b.value for b in structures.admissible)),
        ("H^2(S_rot, Z)", structures.h2_integer),
        ("H^2(S_rot, R)", structures.h2_real),
    ]
    if momenta.top_class is TopClass.SYMMETRIC:
        rows.insert(7, ("pair / axis momenta", f"{_fmt(momenta.pair_momentum)} / {_fmt(momenta.axis_momentum)}"))
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name.ljust(width)}  {value}")
    return EXIT_OK


def cmd_spectrum(job: JobConfig, fixed_point: bool) -> int:
    _, config, momenta = _build_body(job)
    spectra = _spectra_for_job(job, momenta, fixed_point)
    print(render_spectra(spectra, job.output))
    return EXIT_OK


def _eigensection_vectors(op: OperatorMatrix) -> np.ndarray:
    """Float eigenvector coordinates (columns) in the block basis, sorted by
    eigenvalue; computed through the weighted symmetrization."""
    w = np.array([float(x) for x in pairing_weights(op.space.p, op.space.q)])
    s = np.sqrt(w)
    arr = op.array.real
    sym = (s[:, None] * arr) / s[None, :]
    _, u = np.linalg.eigh(sym)
    return u / s[:, None]


def cmd_eigensections(job: JobConfig, j_str: str, l_str: str | None) -> int:
    try:
        j = Fraction(j_str)
        degree = degree_of_j(j)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"--j must be a nonnegative half-integer: {exc}") from exc
    want_l = None if l_str is None else Fraction(l_str)
    _, config, momenta = _build_body(job)
    bundle = bundle_of_j(j)
    if config.degeneracy.is_degenerate:
        if bundle is BundleKind.MINUS:
            raise BundleRequestError("half-odd j does not exist over a degenerate body")
        space = harmonic_basis_r3(degree)
        spec = degenerate_spectrum(momenta.transverse_momentum, job.k, job.hbar0, degree)
        line = spec.lines[-1]
        print(f"degenerate body: l = {j}, energy {_fmt(line.energy)}, multiplicity {line.multiplicity}")
        print(f"eigensections: degree-{degree} harmonic polynomials on R^3 restricted to S^2")
        for idx, poly in enumerate(space.basis):
            print(f"  [{degree},{idx}] {poly}")
        return EXIT_OK
    job_one = JobConfig(**{**job.__dict__, "bundle": bundle.value, "j_max": j})
    spectra = _spectra_for_job(job_one, momenta, fixed_point=False)
    lines = [
        ln
        for spec in spectra
        for ln in spec.lines
        if ln.j == j and (want_l is None or (ln.l is not None and abs(ln.l) == abs(want_l)))
    ]
    if not lines:
        print(f"no spectral line with j = {j}" + (f", l = {want_l}" if want_l is not None else ""))
        return EXIT_OK
    diag_cache: dict[tuple[int, int], np.ndarray] = {}
    for ln in lines:
        l_part = "" if ln.l is None else f", |l| = {abs(ln.l)}"
        print(f"j = {ln.j}{l_part}: energy {_fmt(ln.energy)}, multiplicity {ln.multiplicity}, {ln.source}")
        if not ln.eigensections:
            continue
        if ln.source == "closed-form":
            for p, q, idx in ln.eigensections:
                poly = harmonic_basis(p, q).basis[idx]
                print(f"  H^({p},{q})[{idx}] {poly}")
        else:
            i1, i2, i3 = momenta.momenta
            for p, q, idx in ln.eigensections:
                if (p, q) not in diag_cache:
                    space = harmonic_basis(p, q)
                    ham = hamiltonian_matrix(space, i1, i2, i3, job.hbar0, job.k, 0)
                    diag_cache[(p, q)] = _eigensection_vectors(ham)
                coeffs = diag_cache[(p, q)][:, idx]
                terms = " + ".join(
                    f"({_fmt(c)})*B{k}" for k, c in enumerate(coeffs) if abs(c) > 1e-12
                )
                print(f"  H^({p},{q}) combination: {terms}")
            blocks = sorted({(p, q) for p, q, _ in ln.eigensections})
            for p, q in blocks:
                space = harmonic_basis(p, q)
                for k_idx, poly in enumerate(space.basis):
                    print(f"    H^({p},{q}) B{k_idx} = {poly}")
    return EXIT_OK


def cmd_em_split(job: JobConfig) -> int:
    field_doc = job.field or {"type": "none"}
    if field_doc["type"] == "monopole":
        raise SchemaError(
            "em-split evaluates constant pattern fields; the monopole flag routes "
            "to the monopole spectrum instead"
        )
    if field_doc["type"] == "constant":
        fld = PatternField.uniform(field_doc["E"], field_doc["B"])
    else:
        fld = PatternField.zero()
    probe = job.em_probe
    if probe is None:
        raise SchemaError("em-split needs an 'em_probe' block (v_cen, omega, w_cen, psi, v0, w0)")
    try:
        v = (_vec3(probe["v_cen"], "em_probe.v_cen"), _vec3(probe["omega"], "em_probe.omega"))
        w = (_vec3(probe["w_cen"], "em_probe.w_cen"), _vec3(probe["psi"], "em_probe.psi"))
        v0 = float(parse_number(probe.get("v0", 0), "em_probe.v0"))
        w0 = float(parse_number(probe.get("w0", 0), "em_probe.w0"))
    except KeyError as exc:
        raise SchemaError(f"em_probe is missing {exc}") from exc
    system, config, _ = _build_body(job)
    parts = split_field(system, config, fld, v, w, v0, w0)
    total = unsplit_field(system, config, fld, v, w, v0, w0)
    decoupled, report = decoupling_check(system, fld, job.tolerances)
    print(f"center     {_fmt(parts.cen)}")
    print(f"rotational {_fmt(parts.rot)}")
    print(f"mixed      {_fmt(parts.mixed)}")
    print(f"sum        {_fmt(parts.total)}")
    print(f"unsplit    {_fmt(total)}")
    print(f"decoupled  {'yes' if decoupled else 'no'} ({report})")
    return EXIT_OK


# --- entry point -----------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--config", required=True, help="path to the JSON job document")
    sub.add_argument("--output", choices=["table", "csv", "json"], help="output format")
    sub.add_argument("--j-max", dest="j_max", help="half-integer spectrum cutoff")
    sub.add_argument("--bundle", choices=["auto", "trivial", "nontrivial", "both"])
    sub.add_argument("--hbar", help="value of hbar0 (number or 'p/q')")
    sub.add_argument("--k", help="curvature coupling (number or 'p/q')")
    sub.add_argument("--tol-rel", dest="tol_rel", type=float, help="relative tolerance")
    sub.add_argument("--tol-spec", dest="tol_spec", type=float, help="eigenvalue grouping tolerance")


def _apply_overrides(job: JobConfig, args) -> JobConfig:
    if args.output:
        job.output = args.output
    if args.j_max is not None:
        job.j_max = parse_number(args.j_max, "--j-max")
    if args.bundle:
        job.bundle = args.bundle
    if args.hbar is not None:
        job.hbar0 = parse_number(args.hbar, "--hbar")
        if float(job.hbar0) <= 0:
            raise SchemaError("--hbar must be positive")
    if args.k is not None:
        job.k = parse_number(args.k, "--k")
    if args.tol_rel is not None or args.tol_spec is not None:
        job.tolerances = Tolerances(
            rel=args.tol_rel if args.tol_rel is not None else job.tolerances.rel,
            abs=job.tolerances.abs,
            spec=args.tol_spec if args.tol_spec is not None else job.tolerances.spec,
        )
    return job


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotorspec",
        description="Quantum rotational spectra of rigid bodies from particle data",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_classify = subs.add_parser("classify", help="degeneracy class, momenta, top class, bundles")
    _add_common(p_classify)

    p_spectrum = subs.add_parser("spectrum", help="rotational spectrum per requested bundle")
    _add_common(p_spectrum)
    p_spectrum.add_argument(
        "--fixed-point",
        action="store_true",
        help="acknowledge the monopole mode: body pinned at the monopole, rotational modes only",
    )

    p_eig = subs.add_parser("eigensections", help="eigensections of a spectral line")
    _add_common(p_eig)
    p_eig.add_argument("--j", required=True, help="half-integer j of the line")
    p_eig.add_argument("--l", help="optional |l| filter")

    p_em = subs.add_parser("em-split", help="split a constant field on the rigid body")
    _add_common(p_em)

    p_verify = subs.add_parser("verify", help="run the oracle verification suite")
    p_verify.add_argument("--j-max", dest="j_max", type=int, default=J_MAX_DEFAULT)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return verify_mod.run_suite(j_max=args.j_max)
        job = _apply_overrides(load_job(args.config), args)
        if args.command == "classify":
            return cmd_classify(job)
        if args.command == "spectrum":
            return cmd_spectrum(job, args.fixed_point)
        if args.command == "eigensections":
            return cmd_eigensections(job, args.j, args.l)
        if args.command == "em-split":
            return cmd_em_split(job)
        raise AssertionError(f"unhandled command {args.command}")
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except NonPositiveMassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except AllCoincidentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except BundleRequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUNDLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA


if __name__ == "__main__":
    sys.exit(main())
