import json
from pathlib import Path

import numpy as np
import pytest

from ahpkit import (
    GroupJudgment,
    ParseError,
    ReciprocityViolation,
    consistency_report,
    group_lls_priorities,
    lls_priorities,
    load_matrix,
    matrix_to_dict,
    saaty_priorities,
    save_matrix,
    save_result,
    validate_judgment_matrix,
)

FIXTURES = Path(__file__).parent / "fixtures"


def test_load_canonical_json():
    m = load_matrix(FIXTURES / "inconsistent3.json")
    assert m.n == 3
    assert m.labels == ("price", "quality", "service")
    assert m.entries[0, 1] == 2.0
    assert m.entries[1, 0] == 0.5


def test_upper_triangle_json_reciprocal_completed(tmp_path):
    path = tmp_path / "two.json"
    path.write_text('{"n": 2, "upper": [[0, 1, 2.0]]}')
    m = load_matrix(path)
    assert np.array_equal(m.entries, [[1.0, 2.0], [0.5, 1.0]])


def test_full_matrix_json_form(tmp_path):
    path = tmp_path / "full.json"
    path.write_text('{"matrix": [[1, 2], [0.5, 1]]}')
    m = load_matrix(path)
    assert m.entries[0, 1] == 2.0


def test_load_plain_csv(tmp_path):
    path = tmp_path / "two.csv"
    path.write_text("1,2\n0.5,1\n")
    m = load_matrix(path)
    assert np.array_equal(m.entries, [[1.0, 2.0], [0.5, 1.0]])


def test_csv_reciprocity_enforced(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("1,2\n0.6,1\n")
    with pytest.raises(ReciprocityViolation):
        load_matrix(path)


def test_csv_fractions_and_header():
    m = load_matrix(FIXTURES / "labeled3.csv")
    assert m.labels == ("price", "quality", "service")
    assert m.entries[1, 0] == 0.5
    assert m.entries[2, 1] == float(1) / 3


def test_csv_blank_lower_triangle_filled(tmp_path):
    path = tmp_path / "upper.csv"
    path.write_text("1,2,4\n,1,3\n,,1\n")
    m = load_matrix(path)
    assert m.entries[2, 0] == 0.25


def test_csv_parse_error_carries_location(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("1,2\nx,1\n")
    with pytest.raises(ParseError) as err:
        load_matrix(path)
    assert "bad.csv:2" in str(err.value)


def test_json_parse_errors(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_matrix(path)

    path.write_text('{"n": 3, "upper": [[0, 1, 2.0]]}')
    with pytest.raises(ParseError) as err:
        load_matrix(path)
    assert "incomplete" in str(err.value)

    path.write_text('{"n": 2, "upper": [[1, 0, 2.0]]}')
    with pytest.raises(ParseError):
        load_matrix(path)


def test_matrix_save_load_round_trip(tmp_path, inconsistent3):
    path = tmp_path / "m.json"
    save_matrix(inconsistent3, path)
    back = load_matrix(path)
    assert np.array_equal(back.entries, inconsistent3.entries)
    assert back.labels == inconsistent3.labels


def test_matrix_to_dict_shape(inconsistent3):
    obj = matrix_to_dict(inconsistent3)
    assert obj["n"] == 3
    assert [0, 1, 2.0] in obj["upper"]
    assert len(obj["upper"]) == 3


def test_save_result_priority_vector_round_trip(inconsistent3):
    pv = lls_priorities(inconsistent3)
    blob = save_result(pv, "json")
    obj = json.loads(blob)
    assert obj["w"] == [float(x) for x in pv.w]
    assert obj["u"] == [float(x) for x in pv.u]
    assert obj["ranking"] == [0, 1, 2]


def test_save_result_uniform_weights(ones3):
    obj = json.loads(save_result(lls_priorities(ones3), "json"))
    assert obj["w"] == [1 / 3, 1 / 3, 1 / 3]


def test_save_result_group_schema(group_pair):
    g = GroupJudgment(group_pair, [0.5, 0.5])
    obj = json.loads(save_result(group_lls_priorities(g), "json"))
    assert obj["group_w"]["w"] == [0.8, 0.2]
    assert len(obj["experts"]) == 2
    for expert in obj["experts"]:
        assert set(expert) == {"w", "divergence", "sigma2"}
        assert expert["sigma2"] is None


def test_save_result_reports_round_trip(inconsistent3):
    pv = lls_priorities(inconsistent3)
    report = consistency_report(inconsistent3, pv)
    obj = json.loads(save_result(report, "json"))
    assert obj["distance"] == report.distance
    assert obj["sigma2"] == report.sigma2
    assert obj["residuals"][0][1] == float(report.residuals[0, 1])

    se = saaty_priorities(inconsistent3)
    obj = json.loads(save_result(se, "json"))
    assert obj["lambda_max"] == se.lambda_max
    assert obj["mu"] == se.mu


def test_save_result_table_has_rank_column(ones3):
    text = save_result(lls_priorities(ones3), "table").decode()
    lines = text.strip().splitlines()
    assert len(lines) == 4  # header plus one row per alternative
    assert "rank" in lines[0]


def test_save_result_csv(ones3):
    text = save_result(lls_priorities(ones3), "csv").decode()
    rows = text.strip().splitlines()
    assert rows[0] == "index,weight,rank"
    assert rows[1].startswith("0,")


def test_save_result_rejects_unknown_format(ones3):
    with pytest.raises(ValueError):
        save_result(lls_priorities(ones3), "yaml")
    with pytest.raises(TypeError):
        save_result({"not": "a result"}, "json")


def test_save_load_preserves_every_bit(tmp_path):
    # Awkward values whose decimal forms need all 17 digits.
    u = np.array([1.0 / 3.0, np.pi, np.e, 7.0 / 11.0])
    m = validate_judgment_matrix(u[:, None] / u[None, :])
    path = tmp_path / "bits.json"
    save_matrix(m, path)
    back = load_matrix(path)
    assert np.array_equal(back.entries[np.triu_indices(4, 1)], m.entries[np.triu_indices(4, 1)])
