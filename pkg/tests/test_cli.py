import json

from biunary import fixture, parse
from biunary.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_strong_matchup_on_ex2_10(capsys):
    code, out, _ = run(capsys, "check", "ex2.10", "--law", "SMATCH1",
                       "--law", "SMATCH2")
    assert code == 0
    assert "SMATCH1 holds" in out
    assert "SMATCH2 holds" in out


def test_check_failure_prints_witness_and_exits_one(capsys):
    code, out, _ = run(capsys, "check", "ex2.10", "--law", "BAND-D")
    assert code == 1
    assert "BAND-D fails witness=(f,e)" in out


def test_check_class_flag(capsys):
    code, out, _ = run(capsys, "check", "ex2.10", "--class", "STRONG-MATCHUP")
    assert code == 0
    code, out, _ = run(capsys, "check", "ex2.10", "--class", "LOCALISABLE")
    assert code == 1
    assert "LOCALISABLE fails" in out


def test_check_without_laws_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "ex2.10")
    assert code == 2


def test_json_and_text_agree(capsys):
    code, out, _ = run(capsys, "check", "ex2.10", "--law", "BAND-D", "--json")
    assert code == 1
    records = json.loads(out)
    assert records[0]["law"] == "BAND-D"
    assert records[0]["holds"] is False
    assert records[0]["witness"] == ["f", "e"]


def test_classify_ex3_8(capsys):
    code, out, _ = run(capsys, "classify", "ex3.8")
    assert code == 0
    assert "CAT yes" in out
    assert "MATCHUP no" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "ex3.8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classes"]["CAT"] is True
    assert payload["classes"]["MATCHUP"] is False


def test_roundtrip_ex4_9_left_fails_with_witness(capsys):
    code, out, _ = run(capsys, "roundtrip", "ex4.9", "--kind", "left")
    assert code == 1
    assert "ASSOC-L" in out
    assert "(s,e,s)" in out


def test_roundtrip_ex2_10_strong_passes(capsys):
    code, out, _ = run(capsys, "roundtrip", "ex2.10", "--kind", "strong")
    assert code == 0


def test_fixture_export_and_reload(tmp_path, capsys):
    path = tmp_path / "ex2.4.alg"
    code, out, _ = run(capsys, "fixture", "ex2.4", "--export", str(path))
    assert code == 0
    assert parse(path.read_text()) == fixture("ex2.4")
    code, out, _ = run(capsys, "check", str(path), "--class", "CAT")
    assert code == 0


def test_fixture_unknown_id(capsys):
    code, _, err = run(capsys, "fixture", "nope")
    assert code == 2


def test_construct_semigroup_emits_category(capsys):
    code, out, _ = run(capsys, "construct", "ex2.10")
    assert code == 0
    assert out.startswith("category order=3")


def test_construct_category_nonassociative_candidate(capsys):
    code, out, _ = run(capsys, "construct", "ex4.9", "--kind", "left")
    assert code == 1
    assert "not associative" in out
    assert "s: f s s" in out


def test_search_cli(capsys):
    code, out, _ = run(capsys, "search", "--order", "3",
                       "--satisfy", "CAT,STRONG-MATCHUP",
                       "--violate", "BAND-D", "--up-to-iso")
    assert code == 0
    assert "completed=true" in out
    assert "semigroup order=3" in out


def test_search_query_file(tmp_path, capsys):
    qf = tmp_path / "q.search"
    qf.write_text("search kind=semigroup order=2 satisfy=PRECAT up_to_iso=true\n")
    code, out, _ = run(capsys, "search", str(qf))
    assert code == 0
    assert "completed=true" in out


def test_search_usage_error(capsys):
    code, _, err = run(capsys, "search", "--order", "9")
    assert code == 2


def test_congruences_listing_and_quotient(capsys):
    code, out, _ = run(capsys, "congruences", "ex2.4")
    assert code == 0
    assert "{a} {g} {e,1}" in out
    code, out, _ = run(capsys, "congruences", "ex2.4", "--quotient", "a/g/e,1")
    assert code == 0
    assert "elements {a} {g} {e,1}" in out
    code, _, _ = run(capsys, "congruences", "ex2.4", "--quotient", "a,q")
    assert code == 2


def test_rel_compose_modes(capsys):
    code, out, _ = run(capsys, "rel", "compose", "rel n=3 {(0,0),(0,1)}",
                       "rel n=3 {(0,2)}", "--mode", "angelic")
    assert code == 0
    assert out.strip() == "rel n=3 {(0,2)}"
    code, out, _ = run(capsys, "rel", "compose", "rel n=3 {(0,0),(0,1)}",
                       "rel n=3 {(0,2)}", "--mode", "demonic")
    assert code == 0
    assert out.strip() == "rel n=3 {}"


def test_rel_full_algebra(capsys):
    code, out, _ = run(capsys, "rel", "full", "--n", "2", "--mode", "demonic")
    assert code == 0
    assert "semigroup order=16" in out
    assert "# r0 = rel n=2 {}" in out
    # emitted text parses back, comments and all
    body = out[out.index("semigroup"):]
    assert parse(body).order == 16


def test_rel_close(capsys):
    code, out, _ = run(capsys, "rel", "close", "rel n=2 {(0,1)}",
                       "--n", "2", "--mode", "angelic")
    assert code == 0
    assert "semigroup order=" in out


def test_malformed_file_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.alg"
    path.write_text("semigroup order=2\nelements a a\n")
    code, _, err = run(capsys, "check", str(path), "--law", "CS1")
    assert code == 2


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "no-such-file.alg", "--law", "CS1")
    assert code == 2
