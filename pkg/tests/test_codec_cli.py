import json

import pytest

from hopfbundles import Factor, HopfManifold, codec
from hopfbundles.cli import main
from hopfbundles.covers import classify_cyclic_cover
from hopfbundles.errors import CodecError
from hopfbundles.projective import P1Point
from hopfbundles.rank2 import FiltrableRank2, JumpRecord

GEN = HopfManifold((0.31, 0.47))


def test_factor_round_trip():
    f = Factor((3, -2), 0.1 + 0.30000000000000004j)
    assert codec.decode_factor(json.loads(codec.dumps(f))) == f


def test_manifold_round_trip():
    for X in (GEN, HopfManifold((0.25, 0.5)), HopfManifold((0.5, 0.5j))):
        assert codec.decode_manifold(json.loads(codec.dumps(X))) == X


def test_bundle_round_trip():
    E = FiltrableRank2(GEN, Factor((1, 0), 0.3), 4, Factor.constant(2, 1.7), (JumpRecord(1, (2, 1)),), z_off=1)
    assert codec.decode_bundle(json.loads(codec.dumps(E))) == E
    CL = HopfManifold((0.5, 0.5))
    E = FiltrableRank2(CL, Factor.identity(2), 1, Factor.identity(2), (JumpRecord(0, (1,), P1Point.affine(2j)),))
    assert codec.decode_bundle(json.loads(codec.dumps(E))) == E


def test_cover_round_trip():
    c = classify_cyclic_cover(GEN, 3, "t1t2")
    assert codec.decode_cover(json.loads(codec.dumps(c))) == c


def test_decode_errors_carry_path():
    with pytest.raises(CodecError) as exc:
        codec.decode_factor({"exp": [1, "x"]})
    assert exc.value.path == "$.exp[1]"
    doc = json.loads(codec.dumps(FiltrableRank2(GEN, Factor.identity(2), 1, Factor.identity(2), (JumpRecord(1, (1,)),))))
    doc["z_on_curve"] = [0, 1]
    with pytest.raises(CodecError) as exc:
        codec.decode_bundle(doc)
    assert exc.value.path == "$.z_on_curve"
    with pytest.raises(CodecError):
        codec.loads("{not json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_cli_examples(capsys):
    code, out = run(capsys, "manifold", "classify", "--mu", "0.31,0", "0.47,0")
    assert code == 0 and out["kind"] == "generic"
    code, out = run(capsys, "stab", "moduli", "--c2", "2")
    assert out["dim"] == 8 and out["nonempty"] is True
    code, out = run(capsys, "pic", "cohom", "--mu", "0.31", "0.47")
    assert out["h"] == [1, 1, 0]
    assert out["meta"]["tol"] == 1e-9 and out["meta"]["exp_bound"] == 32


def test_cli_global_flags_reach_meta(capsys):
    _, out = run(capsys, "--tol", "1e-7", "stab", "moduli", "--c2", "1")
    assert out["meta"]["tol"] == 1e-7
    _, out = run(capsys, "stab", "moduli", "--c2", "1", "--exp-bound", "5")
    assert out["meta"]["exp_bound"] == 5


def test_cli_errors(capsys):
    code, out = run(capsys, "stab", "moduli", "--c2", "-1")
    assert code == 1 and out["error"]["type"] == "DomainError"
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_cli_bundle_pipeline(tmp_path, capsys):
    E = FiltrableRank2(GEN, Factor.identity(2), 1, Factor.constant(2, 1.5), (JumpRecord(1, (1,)),))
    path = tmp_path / "e.json"
    path.write_text(codec.dumps(E))
    code, out = run(capsys, "stab", "check", "--bundle", str(path))
    assert code == 0 and out["stable"] is True and out["branch"] == "annulus"
    code, out = run(capsys, "rank2", "modify", "--bundle", str(path), "--curve", "1")
    assert code == 0 and out["bundle"]["c2"] == 0


def test_cli_json_file_and_determinism(tmp_path, capsys):
    dest = tmp_path / "out.json"
    argv = ["cover", "classify", "--mu", "0.31", "0.47", "--r", "3", "--branch", "t1t2", "--json", str(dest)]
    assert main(argv) == 0
    first = dest.read_text()
    main(argv)
    assert dest.read_text() == first
    assert json.loads(first)["cover"]["d"] == -3


def test_cli_spec_commands(capsys):
    _, out = run(capsys, "spec", "poisson", "--c2", "1", "--st1", "jump:1", "--st2", "regular")
    assert out["rank"] == 0
    _, out = run(capsys, "spec", "genus", "--c2", "3", "--k", "1")
    assert out["genus"] == 3
    _, out = run(capsys, "cover", "homology", "--d", "-2")
    assert out["homology"]["H3"]["text"] == "Z + Z_2"
