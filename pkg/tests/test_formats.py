import pytest
from hypothesis import given, settings

from listrec import ExplicitCode, ListFamily, ReedSolomonCode, code_graph, make_field
from listrec.errors import FormatError, NotPrime
from listrec.formats import (
    dumps_code,
    dumps_edges,
    dumps_lists,
    load_config,
    loads_code,
    loads_edges,
    loads_lists,
    parse_field,
)

from oracles import rs_codes


def test_parse_field():
    assert parse_field("7") == make_field(7)
    assert parse_field("2^3") == make_field(2, 3)
    with pytest.raises(FormatError):
        parse_field("two")
    with pytest.raises(NotPrime):
        parse_field("4")


def test_code_roundtrip_examples():
    text = "# listrec-code v1\nfield 5\nkind rs\ndegree 1\npoints all\n"
    code = loads_code(text)
    assert code == ReedSolomonCode(make_field(5), 1, (0, 1, 2, 3, 4))
    F = make_field(2, 2)
    ex = ExplicitCode(F, ((0, 1), (3, 2)))
    assert loads_code(dumps_code(ex)) == ex


@settings(max_examples=30, deadline=None)
@given(rs_codes())
def test_rs_code_roundtrip(code):
    assert loads_code(dumps_code(code)) == code


def test_nondefault_modulus_roundtrip():
    F = make_field(2, 3, (1, 1, 0, 1))
    code = ReedSolomonCode(F, 1, (0, 1, 2))
    back = loads_code(dumps_code(code))
    assert back.field.modulus == (1, 1, 0, 1)


@pytest.mark.parametrize("text", [
    "field 5\nkind rs\n",                                  # no header
    "# listrec-code v2\nfield 5\nkind rs\ndegree 1\npoints all\n",
    "# listrec-code v1\nfield 5\nkind rs\npoints all\n",   # no degree
    "# listrec-code v1\nfield 5\nkind foo\n",
    "# listrec-code v1\nfield 5\nkind rs\ndegree x\npoints all\n",
    "# listrec-code v1\nfield 5\nbogus 1\n",
])
def test_bad_code_files(text):
    with pytest.raises(FormatError):
        loads_code(text)


def test_lists_roundtrip():
    fam = ListFamily(({0, 1}, {2}, {3, 4}))
    assert loads_lists(dumps_lists(fam)) == fam
    with pytest.raises(FormatError):
        loads_lists("# listrec-lists v1\n")


def test_edges_roundtrip(f5):
    g = code_graph(ReedSolomonCode(f5, 1, (0, 1, 2)))
    text = dumps_edges(g)
    assert text.splitlines()[0] == "# listrec-graph v1"
    assert loads_edges(text) == g


def test_config_paths_relative(tmp_path):
    (tmp_path / "c.code").write_text("# listrec-code v1\nfield 7\nkind rs\ndegree 1\npoints all\n")
    (tmp_path / "l.lists").write_text("# listrec-lists v1\n" + "0 1\n" * 7)
    (tmp_path / "run.cfg").write_text(
        "# listrec-config v1\n# comment\ncode = c.code\nm = 5\ntrials = 3\nseed = 2\n"
        "lists = file\nlists_file = l.lists\nrho = 1/5\noutput = out.csv\nformat = csv\n"
    )
    cfg = load_config(str(tmp_path / "run.cfg"))
    assert cfg.m == 5 and cfg.trials == 3 and cfg.format == "csv"
    assert cfg.output == str(tmp_path / "out.csv")
    assert cfg.list_family[0] == {0, 1}
    assert str(cfg.rho) == "1/5"


def test_config_errors(tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("# listrec-config v1\nm = 3\n")
    with pytest.raises(FormatError):
        load_config(str(p))
    p.write_text("# listrec-config v1\ncode = x\nm = 3\nwhat = 1\n")
    with pytest.raises(FormatError):
        load_config(str(p))
