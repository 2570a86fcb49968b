"""File pairing tests."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codemap.corpus import (FilePair, ProjectManifest, levenshtein,
                            match_stems, normalize_stem, pair_files,
                            read_pair_manifest, stem_similarity,
                            write_pair_manifest)


def test_normalize_stem():
    assert normalize_stem("Path/To/AntlrLexer.java") == "antlrlexer"
    assert normalize_stem("AntlrLexer.cs") == "antlrlexer"
    assert normalize_stem("noext") == "noext"


def test_levenshtein_basics():
    assert levenshtein("", "") == 0
    assert levenshtein("abc", "abc") == 0
    assert levenshtein("abc", "abd") == 1
    assert levenshtein("abc", "") == 3


@given(st.text(max_size=12), st.text(max_size=12))
@settings(max_examples=100, deadline=None)
def test_levenshtein_symmetric_and_bounded(a, b):
    d = levenshtein(a, b)
    assert d == levenshtein(b, a)
    assert abs(len(a) - len(b)) <= d <= max(len(a), len(b))


def test_stem_similarity_range():
    assert stem_similarity("lexer", "lexer") == 1.0
    assert stem_similarity("a", "b") == 0.0
    assert 0.0 < stem_similarity("lexer", "lexers") < 1.0


def test_exact_match_pairs():
    pairs = match_stems(["src/Lexer.java", "src/Parser.java"],
                        ["cs/Lexer.cs", "cs/Parser.cs"], threshold=1.0)
    assert [(p.path_a, p.path_b) for p in pairs] == [
        ("src/Lexer.java", "cs/Lexer.cs"),
        ("src/Parser.java", "cs/Parser.cs"),
    ]
    assert all(p.similarity == 1.0 for p in pairs)


def test_one_to_one_assignment():
    # both a-files prefer the single b-file; only the better match wins
    pairs = match_stems(["Lexer.java", "Lexers.java"], ["Lexer.cs"],
                        threshold=0.5)
    assert len(pairs) == 1
    assert pairs[0].path_a == "Lexer.java"


def test_threshold_filters():
    pairs = match_stems(["Alpha.java"], ["Omega.cs"], threshold=0.9)
    assert pairs == []


def test_threshold_validated():
    with pytest.raises(ValueError):
        match_stems([], [], threshold=0.0)
    with pytest.raises(ValueError):
        match_stems([], [], threshold=1.5)


def test_tie_broken_by_path_distance():
    # two b-files with identical stems; the closer relative path wins
    pairs = match_stems(["util/Buffer.java"],
                        ["util/Buffer.cs", "other/Buffer.cs"], threshold=1.0)
    assert len(pairs) == 1
    assert pairs[0].path_b == "util/Buffer.cs"


def test_output_sorted_by_stem():
    pairs = match_stems(["b/Zeta.java", "a/Alpha.java"],
                        ["Zeta.cs", "Alpha.cs"], threshold=1.0)
    assert [p.stem for p in pairs] == ["alpha", "zeta"]


@given(st.lists(st.sampled_from(["Lexer", "Parser", "Tree", "Token", "Node"]),
                max_size=5, unique=True),
       st.lists(st.sampled_from(["Lexer", "Parser", "Tree", "Token", "Node"]),
                max_size=5, unique=True))
@settings(max_examples=60, deadline=None)
def test_pairing_is_one_to_one(names_a, names_b):
    files_a = [f"java/{n}.java" for n in names_a]
    files_b = [f"cs/{n}.cs" for n in names_b]
    pairs = match_stems(files_a, files_b, threshold=0.6)
    assert len({p.path_a for p in pairs}) == len(pairs)
    assert len({p.path_b for p in pairs}) == len(pairs)
    for p in pairs:
        assert p.similarity >= 0.6


def test_pair_files_walks_roots(tmp_path):
    (tmp_path / "java").mkdir()
    (tmp_path / "cs").mkdir()
    (tmp_path / "java" / "Lexer.java").write_text("class Lexer {}")
    (tmp_path / "java" / "README.txt").write_text("not source")
    (tmp_path / "cs" / "Lexer.cs").write_text("class Lexer {}")
    manifest = ProjectManifest(name="demo",
                               lang_a_root=tmp_path / "java",
                               lang_b_root=tmp_path / "cs",
                               lang_a="java", lang_b="csharp")
    pairs = pair_files(manifest)
    assert [(p.path_a, p.path_b) for p in pairs] == [("Lexer.java", "Lexer.cs")]


def test_manifest_validation(tmp_path):
    (tmp_path / "java").mkdir()
    with pytest.raises(FileNotFoundError):
        ProjectManifest(name="x", lang_a_root=tmp_path / "java",
                        lang_b_root=tmp_path / "missing",
                        lang_a="java", lang_b="csharp").validate()
    with pytest.raises(ValueError):
        ProjectManifest(name="x", lang_a_root=tmp_path / "java",
                        lang_b_root=tmp_path / "java",
                        lang_a="java", lang_b="java").validate()


def test_pair_manifest_round_trip(tmp_path):
    pairs = [FilePair("a/Lexer.java", "b/Lexer.cs", "lexer", 1.0),
             FilePair("a/Tok.java", "b/Toke.cs", "tok", 0.75)]
    out = tmp_path / "pairs.tsv"
    write_pair_manifest(pairs, out, comments=["tool test"])
    assert read_pair_manifest(out) == pairs


def test_pair_manifest_rejects_bad_rows(tmp_path):
    out = tmp_path / "pairs.tsv"
    out.write_text("a\tb\n")
    with pytest.raises(ValueError):
        read_pair_manifest(out)
