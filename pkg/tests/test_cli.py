import json

import pytest
from click.testing import CliRunner

from pyrandgroups import __version__
from pyrandgroups.cli import (
    EXIT_BUDGET_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_NO_CERTIFICATE,
    RunManifest,
    file_digest,
    main,
    manifest_path,
)
from pyrandgroups.cli.pipeline import (
    CERTIFICATE_RATE_COLUMNS,
    INTERSECTION_COLUMNS,
    PipelineConfig,
    run_certificate_rate,
)
from pyrandgroups.sampler import Presentation
from pyrandgroups.serialization import load_artifact, save_artifact
from pyrandgroups.words import Alphabet, Word


@pytest.fixture
def runner():
    return CliRunner()


def _write_presentation(path, n, *relators):
    save_artifact(Presentation(Alphabet(n), tuple(Word.from_text(text) for text in relators)), str(path))
    return str(path)


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_sample_to_stdout(runner):
    result = runner.invoke(main, ["sample", "--n", "2", "--d", "0.5", "--L", "4", "--seed", "42"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["__class__"] == "Presentation"
    assert len(data["relators"]) == 9
    assert all(len(relator) == 4 for relator in data["relators"])
    assert data["seed"] == 42


def test_sample_uses_the_global_seed(runner):
    local = runner.invoke(main, ["sample", "--n", "2", "--d", "0.5", "--L", "6", "--seed", "5"])
    global_ = runner.invoke(main, ["--seed", "5", "sample", "--n", "2", "--d", "0.5", "--L", "6"])
    assert local.stdout == global_.stdout


def test_sample_is_reproducible(runner, tmp_path):
    outputs = [tmp_path / "first.json", tmp_path / "second.json"]
    for out in outputs:
        result = runner.invoke(
            main, ["sample", "--n", "3", "--d", "0.4", "--L", "7", "--seed", "9", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
    assert file_digest(outputs[0]) == file_digest(outputs[1])

    manifest = load_artifact(str(manifest_path(outputs[0])))
    assert isinstance(manifest, RunManifest)
    assert manifest.command == "sample"
    assert manifest.seed == 9
    assert manifest.matches_outputs()
    assert manifest.outputs == {str(outputs[0]): file_digest(outputs[0])}


def test_sample_input_errors(runner):
    missing = runner.invoke(main, ["sample", "--d", "0.5", "--L", "4"])
    assert missing.exit_code == EXIT_INPUT_ERROR
    bad_density = runner.invoke(main, ["sample", "--n", "2", "--d", "1.5", "--L", "4"])
    assert bad_density.exit_code == EXIT_INPUT_ERROR


def test_sample_over_the_cap(runner):
    result = runner.invoke(main, ["sample", "--n", "2", "--d", "0.5", "--L", "8", "--cap", "80"])
    assert result.exit_code == EXIT_BUDGET_EXCEEDED


def test_certify(runner, tmp_path):
    certified = _write_presentation(tmp_path / "trivial.json", 1, "a1", "A1")
    result = runner.invoke(main, ["certify", "--in", certified])
    assert result.exit_code == 0, result.output
    assert "CERTIFIED: trivial-or-non-LO" in result.output

    failing = _write_presentation(tmp_path / "failing.json", 2, "a1", "a2", "A1 A2")
    witnesses = tmp_path / "outcome.json"
    result = runner.invoke(main, ["certify", "--in", failing, "--emit-witnesses", str(witnesses)])
    assert result.exit_code == EXIT_NO_CERTIFICATE
    assert "NO-CERTIFICATE" in result.output
    assert "eps=+-, i=2" in result.output
    outcome = json.loads(witnesses.read_text())
    assert outcome["failing"] == {"signs": [1, -1], "i": 2}


def test_certify_emits_a_checkable_certificate(runner, tmp_path):
    presentation_path = _write_presentation(tmp_path / "p.json", 2, "a1", "A1", "a2", "A2")
    witnesses = tmp_path / "certificate.json"
    result = runner.invoke(
        main, ["--threads", "2", "certify", "--in", presentation_path, "--emit-witnesses", str(witnesses)]
    )
    assert result.exit_code == 0, result.output
    certificate = load_artifact(str(witnesses))
    assert certificate.verify(load_artifact(presentation_path))
    manifest = load_artifact(str(manifest_path(witnesses)))
    assert manifest.inputs == {presentation_path: file_digest(presentation_path)}


def test_certify_errors(runner, tmp_path):
    malformed = tmp_path / "broken.json"
    malformed.write_text("{")
    assert runner.invoke(main, ["certify", "--in", str(malformed)]).exit_code == EXIT_INPUT_ERROR

    wrong_kind = tmp_path / "params.json"
    wrong_kind.write_text(json.dumps({"__class__": "HitModelParams", "c_L": 3, "a_L": 1, "b_L": 1, "epsilon": "1/2"}))
    assert runner.invoke(main, ["certify", "--in", str(wrong_kind)]).exit_code == EXIT_INPUT_ERROR

    big = _write_presentation(tmp_path / "big.json", 2, "a1 a2")
    result = runner.invoke(main, ["certify", "--in", big, "--max-n", "1"])
    assert result.exit_code == EXIT_BUDGET_EXCEEDED


def test_automaton_commands(runner):
    accepts = runner.invoke(main, ["automaton", "accepts", "--sign", "+-", "--index", "2", "--word", "A2 a1"])
    assert accepts.output.strip() == "true"
    rejects = runner.invoke(main, ["automaton", "accepts", "--sign", "+-", "--index", "2", "--word", "a1 A2"])
    assert rejects.output.strip() == "false"

    largeness = runner.invoke(main, ["automaton", "largeness", "--sign", "++", "--lambda", "1/2"])
    assert largeness.output.strip() == "true"

    count = runner.invoke(main, ["automaton", "count", "--sign", "++", "--L", "4"])
    assert count.exit_code == 0
    assert "8" in count.output

    growth = runner.invoke(main, ["automaton", "growth", "--sign", "++", "--L-max", "8"])
    assert growth.exit_code == 0
    assert "k = 2" in growth.output

    missing = runner.invoke(main, ["automaton", "count", "--L", "3"])
    assert missing.exit_code == EXIT_INPUT_ERROR


def test_automaton_from_file(runner, tmp_path):
    path = tmp_path / "automaton.json"
    path.write_text(
        json.dumps({"n": 1, "sigma_empty": [1], "sigma": {"1": [1], "-1": []}})
    )
    result = runner.invoke(main, ["automaton", "accepts", "--in", str(path), "--word", "a1 a1 a1"])
    assert result.output.strip() == "true"


def test_blocks_commands(runner, tmp_path):
    associate = runner.invoke(main, ["blocks", "associate", "--n", "2", "--B", "2", "--word", "a1 a2 a2 a2"])
    assert associate.output.strip() == "2 6"

    pair = ["blocks", "pair", "--n", "2", "--B", "2", "--P", "1", "--r1", "a1 a2 A1"]
    assert runner.invoke(main, pair + ["--r2", "a1 a2 a2"]).output.strip() == "2 6"
    assert runner.invoke(main, pair + ["--r2", "a2 a2 a1"]).output.strip() == "absent"

    not_reduced = runner.invoke(main, ["blocks", "associate", "--n", "2", "--B", "2", "--word", "a1 A1"])
    assert not_reduced.exit_code == EXIT_INPUT_ERROR

    presentation = _write_presentation(tmp_path / "p.json", 2, "a1 a2 A1", "a1 a2 a2")
    out = tmp_path / "associated.json"
    result = runner.invoke(main, ["blocks", "build", "--B", "2", "--P", "1", "--in", presentation, "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert [2, 6] in json.loads(out.read_text())["relators"]

    wrong_residue = runner.invoke(main, ["blocks", "build", "--B", "2", "--P", "0", "--in", presentation])
    assert wrong_residue.exit_code == EXIT_INPUT_ERROR


def test_stats_commands(runner, tmp_path):
    distinct = runner.invoke(main, ["stats", "distinct", "--b", "3", "--c", "10"])
    assert distinct.exit_code == 0
    assert "18/25" in distinct.output

    distinct_csv = tmp_path / "distinct.csv"
    distinct = runner.invoke(
        main, ["stats", "distinct", "--b", "3", "--c", "10", "--trials", "2000", "--csv", str(distinct_csv)]
    )
    assert distinct.exit_code == 0, distinct.output
    header, row = distinct_csv.read_text().splitlines()
    assert header == "b_L,c_L,q_exact,q_bernoulli,empirical_distinct"
    assert row.startswith("3,10,0.72,0.4,")
    assert 0.6 < float(row.split(",")[-1]) < 0.84
    assert manifest_path(distinct_csv).exists()

    csv_path = tmp_path / "concentration.csv"
    concentration = runner.invoke(
        main,
        ["stats", "concentration", "--a", "3", "--b", "5", "--c", "10", "--trials", "500", "--csv", str(csv_path)],
    )
    assert concentration.exit_code == 0, concentration.output
    header, row = csv_path.read_text().splitlines()
    assert header.startswith("L,c_L,a_L,b_L,mean_exact")
    assert row.startswith(",10,3,5,1.5,1.05")
    assert manifest_path(csv_path).exists()

    invalid = runner.invoke(main, ["stats", "concentration", "--a", "11", "--b", "5", "--c", "10"])
    assert invalid.exit_code == EXIT_INPUT_ERROR


def test_stats_intersect(runner, tmp_path):
    csv_path = tmp_path / "intersect.csv"
    result = runner.invoke(
        main,
        [
            "stats", "intersect", "--sign", "++", "--d", "0.4",
            "--L", "4", "--L", "6", "--trials", "50", "--csv", str(csv_path),
        ],
    )
    assert result.exit_code == 0, result.output
    lines = csv_path.read_text().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("4,108,8,")


def _write_config(path, text):
    path.write_text(text)
    return str(path)


def test_pipeline_certificate_rate(runner, tmp_path):
    config = _write_config(tmp_path / "sweep.toml", 'n = 2\nd = 0.5\nL = [2, 4]\ntrials = 5\nseed = 7\nB = 2\n')
    outputs = [tmp_path / "first.csv", tmp_path / "second.csv"]
    for out in outputs:
        result = runner.invoke(main, ["pipeline", "--config", config, "--out", str(out)])
        assert result.exit_code == 0, result.output
    assert file_digest(outputs[0]) == file_digest(outputs[1])

    lines = outputs[0].read_text().splitlines()
    assert lines[0] == ",".join(CERTIFICATE_RATE_COLUMNS)
    assert len(lines) == 1 + 2 * (5 + 1)
    assert sum(line.startswith("aggregate,") for line in lines) == 2

    manifest = load_artifact(str(manifest_path(outputs[0])))
    assert manifest.seed == 7
    assert manifest.parameters["L"] == [2, 4]
    assert manifest.inputs == {config: file_digest(config)}


def test_pipeline_intersection(runner, tmp_path):
    config = _write_config(
        tmp_path / "sweep.toml",
        'n = 2\nd = 0.4\nL = [4, 6]\ntrials = 10\nseed = 1\nmode = "intersection"\n'
        'fixed_set = { signs = "+-", i = 2 }\n',
    )
    out = tmp_path / "sweep.csv"
    result = runner.invoke(main, ["pipeline", "--config", config, "--out", str(out)])
    assert result.exit_code == 0, result.output
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(INTERSECTION_COLUMNS)
    assert len(lines) == 1 + 2 * (10 + 1)


@pytest.mark.parametrize(
    "text",
    [
        "n = 2\nd = 0.5\nL = []\ntrials = 5\nseed = 7\n",
        "n = 2\nd = 0.5\nL = [4]\ntrials = 5\nseed = 7\nsize = 3\n",
        "n = 2\nd = 0.5\nL = [4]\ntrials = 5\n",
        "n = 2\nd = 0.5\nL = [4]\ntrials = 5\nseed = 7\nmode = \"fast\"\n",
        "n = 2\nd = \n",
    ],
)
def test_pipeline_rejects_bad_configs(runner, tmp_path, text):
    config = _write_config(tmp_path / "bad.toml", text)
    result = runner.invoke(main, ["pipeline", "--config", config, "--out", str(tmp_path / "out.csv")])
    assert result.exit_code == EXIT_INPUT_ERROR


def test_pipeline_config_mapping():
    config = PipelineConfig.from_mapping({"n": 2, "d": 0.5, "L": 4, "trials": 3, "seed": 0})
    assert config.L == (4,)
    assert config.to_dict()["mode"] == "certificate-rate"
    with pytest.raises(ValueError, match="Unknown pipeline keys"):
        PipelineConfig.from_mapping({"n": 2, "d": 0.5, "L": [4], "trials": 3, "seed": 0, "extra": 1})


def test_witness_fraction_grows_with_length():
    config = PipelineConfig(n=2, d=0.5, L=(6, 8, 10, 12, 14), trials=2000, seed=2024)
    rows = [row for row in run_certificate_rate(config) if row["kind"] == "aggregate"]
    fractions = [row["witness_fraction"] for row in rows]
    assert [row["L"] for row in rows] == [6, 8, 10, 12, 14]
    assert fractions == sorted(fractions)
    assert fractions[-1] > 0.8
