import json

import pytest

from laxepi.cli import main
from laxepi.corpus import builtin
from laxepi.errors import ParseError
from laxepi.fileio import (
    bundle_to_instance,
    load_instance,
    parse_instance,
    serialize_instance,
)


@pytest.fixture()
def corner_file(tmp_path):
    inst = bundle_to_instance(builtin("corner_T2"))
    path = tmp_path / "corner.json"
    path.write_text(json.dumps(serialize_instance(inst)), encoding="utf-8")
    return str(path)


@pytest.fixture()
def diagonal_file(tmp_path):
    inst = bundle_to_instance(builtin("diagonal_k_kk"))
    path = tmp_path / "diagonal.json"
    path.write_text(json.dumps(serialize_instance(inst)), encoding="utf-8")
    return str(path)


def test_roundtrip_all_builtins():
    from laxepi.corpus import BUILTIN_NAMES

    for name in BUILTIN_NAMES:
        inst = bundle_to_instance(builtin(name))
        doc = serialize_instance(inst)
        inst2 = parse_instance(json.loads(json.dumps(doc)))
        assert serialize_instance(inst2) == doc
        for cname, c in inst.categories.items():
            assert inst2.categories[cname] == c
        for fname, (f, _, _) in inst.functors.items():
            f2 = inst2.functors[fname][0]
            assert f2.object_map == f.object_map and f2.hom_maps == f.hom_maps
        for mname, (m, _) in inst.modules.items():
            assert inst2.modules[mname][0] == m


def test_validate_command(corner_file, capsys):
    assert main(["validate", corner_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] is True
    assert out["ideals"]["e11"] == "ok"


def test_check_epi_diagonal(diagonal_file, capsys):
    assert main(["check", diagonal_file, "--functor", "d", "--kind", "epi"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] is False
    w = out["witnesses"]["counit_witnesses"]["*"]
    assert sum(w["source_dims"].values()) == 4
    assert sum(w["target_dims"].values()) == 2


def test_check_glax_corner(corner_file, capsys):
    rc = main(
        ["check", corner_file, "--functor", "p", "--kind", "glax", "--ideal", "e11"]
    )
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] is True


def test_check_abelian_localization_corner(corner_file, capsys):
    rc = main(
        [
            "check",
            corner_file,
            "--functor",
            "p",
            "--kind",
            "abelian-localization",
            "--ideal",
            "e11",
        ]
    )
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["verdict"] is True


def test_factor_command(diagonal_file, capsys):
    assert main(["factor", diagonal_file, "--functor", "d"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["mid_category"]["hom"]["*"]["*"]["dim"] == 2


def test_localize_command(corner_file, capsys):
    rc = main(["localize", corner_file, "--module", "regular", "--ideal", "e11"])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["closed_module"]["dims"]["*"] == 1


def test_hom_command(corner_file, capsys):
    rc = main(["hom", corner_file, "--from", "regular", "--to", "regular"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["dimension"] == 3
    rc = main(
        ["hom", corner_file, "--from", "regular", "--to", "regular", "--ideal", "e11"]
    )
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["dimension"] == 1


def test_precondition_exit_code(tmp_path, capsys):
    from laxepi.corpus import builtin

    inst = bundle_to_instance(builtin("summand_inclusion"))
    path = tmp_path / "summand.json"
    path.write_text(json.dumps(serialize_instance(inst)), encoding="utf-8")
    rc = main(["check", str(path), "--functor", "incl", "--kind", "epi"])
    assert rc == 2
    out = json.loads(capsys.readouterr().out)
    assert out["error"] == "E_NOT_SURJECTIVE_ON_OBJECTS"


def test_ideal_not_idempotent_exit_code(tmp_path, capsys):
    inst = bundle_to_instance(builtin("truncated_poly"))
    path = tmp_path / "trunc.json"
    path.write_text(json.dumps(serialize_instance(inst)), encoding="utf-8")
    rc = main(
        ["check", str(path), "--functor", "id", "--kind", "cond-epi", "--ideal", "x"]
    )
    assert rc == 2
    out = json.loads(capsys.readouterr().out)
    assert out["error"] == "E_IDEAL_NOT_IDEMPOTENT"


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["validate", str(bad)]) == 3
    out = json.loads(capsys.readouterr().out)
    assert out["error"] == "E_PARSE"


def test_parse_error_reports_field(tmp_path):
    doc = {"categories": {"C": {"objects": ["*"], "hom": {"*": {"*": {"dim": -1}}}}}}
    path = tmp_path / "neg.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(ParseError, match="dim"):
        load_instance(str(path))


def test_corpus_run_smoke(capsys):
    rc = main(["corpus", "run", "--seed", "3", "--count", "2"])
    captured = capsys.readouterr().out
    assert rc == 0
    assert "PASS" in captured


def test_report_determinism(corner_file, capsys):
    main(["check", corner_file, "--functor", "p", "--kind", "glax", "--ideal", "e11"])
    out1 = json.loads(capsys.readouterr().out)
    main(["check", corner_file, "--functor", "p", "--kind", "glax", "--ideal", "e11"])
    out2 = json.loads(capsys.readouterr().out)
    out1.pop("timing_s"), out2.pop("timing_s")
    assert out1 == out2
