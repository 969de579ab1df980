import pytest

from unicov.verify.exceptions import TableParameterError
from unicov.verify.table import CSV_COLUMNS, PREDICTED, family_pair, row_sets, table_experiment, to_frame


def _cell(report, label, op, family=None):
    return next(
        row
        for row in report.rows
        if row.row_label == label and row.operation == op and (family is None or row.family == family)
    )


def test_quadratic_residue_table():
    report = table_experiment([7], ["qr"])
    assert len(report.rows) == 2 * len(PREDICTED)
    assert report.ok
    # {1, 2, 4} is a perfect difference set mod 7
    assert _cell(report, "A-A", "+").value == 1
    assert _cell(report, "A+B", "+").value == 2
    assert _cell(report, "(A+B)^c", "+").value == 7
    # QR . QR = QR, an index-two subgroup of the units
    assert _cell(report, "AB", "×").value == 2


def test_multiplicative_cell_of_zero_set_is_empty():
    report = table_experiment([7], ["qr"])
    row = _cell(report, "(A+B)^c", "×")
    assert row.value is None and not row.optimal
    assert row.holds is None


def test_random_family_sumset_cell_holds():
    report = table_experiment([31], ["random"], seed=3)
    row = _cell(report, "A+B", "+")
    assert row.bound is not None
    assert row.holds is True


def test_full_density_gives_trivial_covers():
    report = table_experiment([11], ["random"], density=1.0)
    assert _cell(report, "A+B", "+").value == 1
    assert _cell(report, "A-A", "+").value == 1
    assert _cell(report, "(A+B)^c", "+").value is None


def test_random_pairs_are_seeded():
    assert family_pair("random", 13, 4) == family_pair("random", 13, 4)
    a, b = family_pair("interval", 13, 0)
    assert a == b


def test_row_sets_labels(make_set):
    a = make_set("Z5", [1, 2])
    assert list(row_sets(a, a)) == list(PREDICTED)


@pytest.mark.parametrize("p", [9, 103])
def test_bad_moduli(p):
    with pytest.raises(TableParameterError):
        table_experiment([p])


def test_unknown_family():
    with pytest.raises(TableParameterError):
        table_experiment([7], ["lattice"])


def test_frame_columns():
    frame = to_frame(table_experiment([5], ["interval"]))
    assert list(frame.columns) == CSV_COLUMNS
    assert set(frame["operation"]) == {"+", "×"}
