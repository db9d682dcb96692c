"""CLI surface: schema, exit codes, output formats, JSON round-trip."""

import json

import pytest

from rotorspec import BundleKind, spherical_spectrum, symmetric_spectrum
from rotorspec.cli import (
    EXIT_BUNDLE,
    EXIT_GEOMETRY,
    EXIT_OK,
    EXIT_SCHEMA,
    main,
    spectrum_from_dict,
    spectrum_to_dict,
)

DIPOLE = {
    "version": 1,
    "particles": [
        {"mass": 1, "charge": 1, "position": [1, 0, 0]},
        {"mass": 1, "charge": -1, "position": [-1, 0, 0]},
    ],
}

# six unit masses on the axes at distance 1/2: principal momenta all equal 1
OCTAHEDRON_I1 = {
    "version": 1,
    "particles": [
        {"mass": 1, "charge": 0, "position": [0.5, 0, 0]},
        {"mass": 1, "charge": 0, "position": [-0.5, 0, 0]},
        {"mass": 1, "charge": 0, "position": [0, 0.5, 0]},
        {"mass": 1, "charge": 0, "position": [0, -0.5, 0]},
        {"mass": 1, "charge": 0, "position": [0, 0, 0.5]},
        {"mass": 1, "charge": 0, "position": [0, 0, -0.5]},
    ],
}

TRIANGLE = {
    "version": 1,
    "particles": [
        {"mass": 1, "charge": 0, "position": [0, 0, 0]},
        {"mass": 2, "charge": 0, "position": [1.1, 0, 0]},
        {"mass": 3, "charge": 0, "position": [0.3, 1.7, 0]},
    ],
}


def _write(tmp_path, doc, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_classify_dipole(tmp_path, capsys):
    rc = main(["classify", "--config", _write(tmp_path, DIPOLE)])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "degenerate" in out
    assert "trivial" in out and "nontrivial" not in out
    assert "Z" in out


def test_classify_octahedron(tmp_path, capsys):
    rc = main(["classify", "--config", _write(tmp_path, OCTAHEDRON_I1)])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "strongly non-degenerate" in out
    assert "spherical" in out
    assert "trivial, nontrivial" in out


def test_classify_triangle_asymmetric(tmp_path, capsys):
    rc = main(["classify", "--config", _write(tmp_path, TRIANGLE)])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "weakly non-degenerate" in out
    assert "asymmetric" in out


def test_spectrum_spherical_energies(tmp_path, capsys):
    rc = main(
        [
            "spectrum",
            "--config",
            _write(tmp_path, OCTAHEDRON_I1),
            "--bundle",
            "trivial",
            "--j-max",
            "2",
            "--output",
            "csv",
        ]
    )
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    rows = out.strip().splitlines()
    assert rows[0] == "bundle,j,l,energy,multiplicity,source"
    energies = [row.split(",")[3] for row in rows[1:]]
    assert energies == ["0", "1", "3"]


def test_spectrum_auto_both_bundles(tmp_path, capsys):
    rc = main(
        [
            "spectrum",
            "--config",
            _write(tmp_path, OCTAHEDRON_I1),
            "--j-max",
            "1",
            "--output",
            "csv",
        ]
    )
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    rows = out.strip().splitlines()
    # header plus j = 0, 1 on the trivial bundle and j = 1/2 on the other
    assert len(rows) == 4
    assert [r.split(",")[1] for r in rows[1:]] == ["0", "1", "1/2"]


def test_spectrum_deterministic_bytes(tmp_path, capsys):
    args = [
        "spectrum",
        "--config",
        _write(tmp_path, TRIANGLE),
        "--j-max",
        "2",
        "--output",
        "csv",
    ]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second


def test_hbar_flag_scales_energies(tmp_path, capsys):
    base = [
        "spectrum",
        "--config",
        _write(tmp_path, OCTAHEDRON_I1),
        "--bundle",
        "trivial",
        "--j-max",
        "1",
        "--output",
        "csv",
    ]
    assert main(base) == EXIT_OK
    e1 = float(capsys.readouterr().out.strip().splitlines()[2].split(",")[3])
    assert main(base + ["--hbar", "2"]) == EXIT_OK
    e2 = float(capsys.readouterr().out.strip().splitlines()[2].split(",")[3])
    assert e2 == pytest.approx(2 * e1)


def test_schema_violations_exit_2(tmp_path, capsys):
    bad = dict(DIPOLE)
    bad["particles"] = [{"mass": 1, "position": [0, 0, 0]}]
    assert main(["classify", "--config", _write(tmp_path, bad)]) == EXIT_SCHEMA
    capsys.readouterr()
    worse = {"version": 2, "particles": DIPOLE["particles"]}
    assert main(["classify", "--config", _write(tmp_path, worse)]) == EXIT_SCHEMA
    capsys.readouterr()
    nonpositive = {
        "version": 1,
        "particles": [
            {"mass": 0, "charge": 0, "position": [0, 0, 0]},
            {"mass": 1, "charge": 0, "position": [1, 0, 0]},
        ],
    }
    assert main(["classify", "--config", _write(tmp_path, nonpositive)]) == EXIT_SCHEMA
    capsys.readouterr()
    assert main(["classify", "--config", str(tmp_path / "missing.json")]) == EXIT_SCHEMA
    capsys.readouterr()


def test_all_coincident_exit_3(tmp_path, capsys):
    doc = {
        "version": 1,
        "particles": [
            {"mass": 1, "charge": 0, "position": [2, 2, 2]},
            {"mass": 3, "charge": 0, "position": [2, 2, 2]},
        ],
    }
    assert main(["classify", "--config", _write(tmp_path, doc)]) == EXIT_GEOMETRY
    capsys.readouterr()


def test_nontrivial_on_degenerate_exit_4(tmp_path, capsys):
    rc = main(
        ["spectrum", "--config", _write(tmp_path, DIPOLE), "--bundle", "nontrivial"]
    )
    assert rc == EXIT_BUNDLE
    capsys.readouterr()


def test_monopole_requires_fixed_point(tmp_path, capsys):
    doc = dict(OCTAHEDRON_I1)
    doc["field"] = {"type": "monopole", "nu": 1, "q_norm": "1/2"}
    path = _write(tmp_path, doc)
    assert main(["spectrum", "--config", path, "--j-max", "1"]) == EXIT_BUNDLE
    capsys.readouterr()
    rc = main(["spectrum", "--config", path, "--j-max", "1", "--fixed-point", "--output", "csv"])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "1/2" in out  # half-integer branch emitted as well


def test_json_output_round_trips(tmp_path, capsys):
    rc = main(
        [
            "spectrum",
            "--config",
            _write(tmp_path, OCTAHEDRON_I1),
            "--j-max",
            "2",
            "--output",
            "json",
        ]
    )
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    doc = json.loads(out)
    assert doc["version"] == 1
    specs = [spectrum_from_dict(s) for s in doc["spectra"]]
    assert len(specs) == 2
    for spec in specs:
        again = spectrum_from_dict(spectrum_to_dict(spec))
        assert again == spec


def test_serializer_exact_round_trip():
    for spec in (
        spherical_spectrum(1, BundleKind.PLUS, j_max=3),
        symmetric_spectrum(2, 1, BundleKind.MINUS, k=1, j_max=2),
        symmetric_spectrum(2.5, 1.25, BundleKind.PLUS, j_max=2),
    ):
        assert spectrum_from_dict(json.loads(json.dumps(spectrum_to_dict(spec)))) == spec


def test_em_split_command(tmp_path, capsys):
    doc = {
        "version": 1,
        "particles": [
            {"mass": 1, "charge": 2, "position": [1.25, 0, 0]},
            {"mass": 3, "charge": -2, "position": [-1.25 / 3, 0, 0]},
        ],
        "field": {"type": "constant", "E": [0, 0, 0], "B": [0.4, -0.2, 0.9]},
        "em_probe": {
            "v_cen": [1.0, -2.0, 0.5],
            "omega": [0.3, 0.8, -0.5],
            "w_cen": [0.2, 0.3, -0.7],
            "psi": [-0.6, 0.1, 0.7],
            "v0": 0.3,
            "w0": -0.8,
        },
    }
    rc = main(["em-split", "--config", _write(tmp_path, doc)])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    lines = dict(
        (ln.split()[0], ln.split()[1]) for ln in out.strip().splitlines() if ln.split()
    )
    assert float(lines["center"]) == pytest.approx(0.0, abs=1e-12)
    assert float(lines["sum"]) == pytest.approx(float(lines["unsplit"]), abs=1e-12)
    # without the probe block the schema is violated
    del doc["em_probe"]
    assert main(["em-split", "--config", _write(tmp_path, doc, "b.json")]) == EXIT_SCHEMA
    capsys.readouterr()


def test_eigensections_command(tmp_path, capsys):
    rc = main(
        [
            "eigensections",
            "--config",
            _write(tmp_path, OCTAHEDRON_I1),
            "--j",
            "1/2",
        ]
    )
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "j = 1/2" in out
    assert "z1" in out and "z2" in out
    rc = main(["eigensections", "--config", _write(tmp_path, TRIANGLE), "--j", "1"])
    out = capsys.readouterr().out
    assert rc == EXIT_OK
    assert "diagonalized" in out
    rc = main(["eigensections", "--config", _write(tmp_path, DIPOLE), "--j", "3/2"])
    assert rc == EXIT_BUNDLE
    capsys.readouterr()
