"""End-to-end CLI tests on a two-file mini project."""

import pytest

from codemap.cli import main

JAVA_COUNTER = """\
package mini;

public class Counter {
    public static final int STEP = 2;
    private int total;

    public Counter() {
        this.total = 0;
    }

    public int bump(int amount) {
        this.total = this.total + amount;
        return this.total;
    }
}
"""

CSHARP_COUNTER = """\
namespace Mini {
    public class Counter {
        public static readonly int Step = 2;
        private int total;

        public Counter() {
            this.total = 0;
        }

        public int Bump(int amount) {
            this.total = this.total + amount;
            return this.total;
        }
    }
}
"""

JAVA_HOLDER = """\
package mini;

public class Holder {
    private final long value;

    public Holder(long value) {
        this.value = value;
    }

    public long get() {
        return this.value;
    }
}
"""

CSHARP_HOLDER = """\
namespace Mini {
    public class Holder {
        private readonly long value;

        public Holder(long value) {
            this.value = value;
        }

        public long Get() {
            return this.value;
        }
    }
}
"""

CONFIG = """\
project.name = mini
project.root_a = ja
project.root_b = cs
project.lang_a = java
project.lang_b = csharp
align.iterations = 4
align.max_len = 40
train.dim = 8
train.window = 3
train.negatives = 2
train.epochs = 3
train.min_count = 1
train.subsample = 0
train.seed = 3
retrieve.ks = 1,5
retrieve.k = 5
retrieve.truth = truth.tsv
"""


@pytest.fixture
def project(tmp_path):
    (tmp_path / "ja").mkdir()
    (tmp_path / "cs").mkdir()
    (tmp_path / "ja" / "Counter.java").write_text(JAVA_COUNTER)
    (tmp_path / "cs" / "Counter.cs").write_text(CSHARP_COUNTER)
    (tmp_path / "ja" / "Holder.java").write_text(JAVA_HOLDER)
    (tmp_path / "cs" / "Holder.cs").write_text(CSHARP_HOLDER)
    (tmp_path / "truth.tsv").write_text("a:int\tb:int\na:long\tb:long\n")
    config = tmp_path / "mini.cfg"
    config.write_text(CONFIG)
    return config


def _run(*argv):
    return main(list(argv))


# ---------------------------------------------------------------------------
# usage errors


def test_no_subcommand_is_usage_error(capsys):
    assert _run() == 1
    assert "usage" in capsys.readouterr().err


def test_unknown_subcommand_is_usage_error(capsys):
    assert _run("frobnicate", "--config", "x") == 1


def test_missing_config_flag_is_usage_error(project):
    assert _run("pair") == 1


def test_version_exits_zero(capsys):
    assert _run("--version") == 0
    assert "codemap" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# I/O and validation errors


def test_missing_config_file_is_io_error(tmp_path, capsys):
    assert _run("pair", "--config", str(tmp_path / "nope.cfg")) == 2


def test_bad_config_is_validation_error(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("bogus.key = 1\n")
    assert _run("pair", "--config", str(config)) == 3
    assert "bogus.key" in capsys.readouterr().err


def test_align_without_streams_says_run_normalize(project, tmp_path,
                                                  capsys):
    out = tmp_path / "out"
    assert _run("pair", "--config", str(project),
                "--out-dir", str(out)) == 0
    assert _run("align", "--config", str(project),
                "--out-dir", str(out)) == 2
    assert "run normalize first" in capsys.readouterr().err


def test_normalize_without_pairs_says_run_pair(project, tmp_path, capsys):
    out = tmp_path / "out"
    assert _run("normalize", "--config", str(project),
                "--out-dir", str(out)) == 2
    assert "run pair first" in capsys.readouterr().err


def test_eval_without_map_says_run_map(project, tmp_path, capsys):
    out = tmp_path / "out"
    assert _run("eval", "--config", str(project),
                "--out-dir", str(out)) == 2
    assert "run map first" in capsys.readouterr().err


def test_eval_without_truth_configured(project, tmp_path, capsys):
    config = project.parent / "no_truth.cfg"
    config.write_text(CONFIG.replace("retrieve.truth = truth.tsv\n", ""))
    out = tmp_path / "out"
    assert _run("eval", "--config", str(config),
                "--out-dir", str(out)) == 2
    assert "retrieve.truth" in capsys.readouterr().err


def test_unparseable_source_is_validation_error(project, tmp_path,
                                                capsys):
    (project.parent / "ja" / "Broken.java").write_text(
        'class Broken { String s = "unterminated; }\n')
    (project.parent / "cs" / "Broken.cs").write_text(
        "namespace Mini { class Broken { } }\n")
    out = tmp_path / "out"
    assert _run("pair", "--config", str(project),
                "--out-dir", str(out)) == 0
    assert _run("normalize", "--config", str(project),
                "--out-dir", str(out)) == 3
    assert "Broken.java" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# pipeline behaviour


def test_run_all_writes_every_artifact(project, tmp_path, capsys):
    out = tmp_path / "out"
    assert _run("run-all", "--config", str(project),
                "--out-dir", str(out)) == 0
    for name in ("pairs.tsv", "alignments.pharaoh", "ttable.tsv",
                 "embeddings.txt", "element_vecs.txt",
                 "compose_skips.tsv", "mappings/token.tsv",
                 "report.tsv"):
        assert (out / name).exists(), name
    assert (out / "streams" / "a" / "Counter.java.tok").exists()
    assert (out / "elements" / "b" / "Holder.cs.tsv").exists()
    err = capsys.readouterr().err
    for stage in ("pair", "normalize", "align", "train", "compose",
                  "map", "eval"):
        assert f"[{stage}]" in err


def test_artifacts_carry_provenance_header(project, tmp_path):
    out = tmp_path / "out"
    assert _run("run-all", "--config", str(project),
                "--out-dir", str(out)) == 0
    for name in ("pairs.tsv", "alignments.pharaoh", "ttable.tsv",
                 "embeddings.txt", "element_vecs.txt", "report.tsv"):
        text = (out / name).read_text()
        comment = next(line for line in text.splitlines()
                       if line.startswith("# "))
        assert "codemap" in comment and "config=" in comment \
            and "seed=3" in comment, name


def test_seed_flag_reaches_provenance(project, tmp_path):
    out = tmp_path / "out"
    assert _run("pair", "--config", str(project), "--out-dir", str(out),
                "--seed", "123") == 0
    assert "seed=123" in (out / "pairs.tsv").read_text()


def test_map_k_flag_truncates(project, tmp_path):
    out = tmp_path / "out"
    assert _run("run-all", "--config", str(project),
                "--out-dir", str(out), "--k", "2") == 0
    rows = [line.split("\t") for line in
            (out / "mappings" / "token.tsv").read_text().splitlines()
            if line and not line.startswith("#")]
    per_query: dict = {}
    for row in rows:
        per_query.setdefault(row[0], []).append(row)
    assert per_query
    assert all(len(v) <= 2 for v in per_query.values())


def test_rerun_is_byte_identical(project, tmp_path):
    out_one = tmp_path / "one"
    out_two = tmp_path / "two"
    for out in (out_one, out_two):
        assert _run("run-all", "--config", str(project),
                    "--out-dir", str(out)) == 0
    for name in ("embeddings.txt", "element_vecs.txt", "report.tsv",
                 "alignments.pharaoh", "ttable.tsv"):
        assert (out_one / name).read_bytes() == \
            (out_two / name).read_bytes(), name


def test_stage_rerun_is_idempotent(project, tmp_path):
    out = tmp_path / "out"
    assert _run("run-all", "--config", str(project),
                "--out-dir", str(out)) == 0
    first = (out / "embeddings.txt").read_bytes()
    assert _run("train", "--config", str(project),
                "--out-dir", str(out)) == 0
    assert (out / "embeddings.txt").read_bytes() == first


def test_diff_ref_flow(project, tmp_path, capsys):
    out = tmp_path / "out"
    assert _run("run-all", "--config", str(project),
                "--out-dir", str(out)) == 0
    rows = [line.split("\t") for line in
            (out / "mappings" / "token.tsv").read_text().splitlines()
            if line and not line.startswith("#")]
    top1 = {row[0]: row[2] for row in rows if row[1] == "1"}
    query, target = sorted(top1.items())[0]
    reference = project.parent / "reference.tsv"
    reference.write_text(f"{query}\t{target}\n"
                         f"a:never-seen\tb:whatever\n")
    config = project.parent / "with_ref.cfg"
    config.write_text(CONFIG + "retrieve.reference = reference.tsv\n")
    assert _run("diff-ref", "--config", str(config),
                "--out-dir", str(out)) == 0
    diff_text = (out / "diff.tsv").read_text()
    assert f"agreeing\t{query}\t{target}\t{target}" in diff_text
    assert "conflicting" not in diff_text


def test_eval_report_scores_identity_tokens(project, tmp_path):
    out = tmp_path / "out"
    assert _run("run-all", "--config", str(project),
                "--out-dir", str(out)) == 0
    report = (out / "report.tsv").read_text()
    assert "map@1\t" in report and "map@5\t" in report
    assert "p@1\t" in report
