"""Construction, validation and evaluation of IFN values."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ifnorder import (
    IfnKind,
    KnotOrderError,
    LegConditionError,
    IfnValidationWarning,
    PointwiseConsistencyError,
    as_rational,
    embed_if_value,
    embed_ivif,
    embed_triangular,
    format_rational,
    ifn_from_compact,
    ifn_from_dict,
    ifn_to_compact,
    ifn_to_dict,
    make_trapezoidal,
    sample_curve,
)
from ifnorder.errors import ParseError
from ifnorder.golden import load_table2_system

from conftest import F, left_nu_sample


def test_left_nu_arrangement_is_valid():
    ifn = left_nu_sample()
    assert ifn.kind is IfnKind.TRAPEZOIDAL
    assert ifn.nu.q3 <= ifn.mu.q1 and ifn.nu.q4 <= ifn.mu.q2


def test_right_nu_arrangement_is_valid():
    ifn = make_trapezoidal(("0.2", "0.2", "0.3", "0.3"), ("0.4", "0.6", "0.7", "0.8"))
    assert ifn.nu.q1 >= ifn.mu.q3 and ifn.nu.q2 >= ifn.mu.q4


def test_full_membership_with_full_nonmembership_rejected():
    # both hats reach height one at x = 1; degree reading 1 + 1 > 1
    with pytest.raises(LegConditionError) as err:
        make_trapezoidal((0, 0, 1, 1), (1, 1, 1, 1))
    assert isinstance(err.value, PointwiseConsistencyError)
    assert "reach 1" in str(err.value)


def test_interleaved_hats_rejected():
    with pytest.raises(LegConditionError):
        make_trapezoidal(("0.1", "0.3", "0.5", "0.7"), ("0.2", "0.4", "0.6", "0.8"))


def test_knot_order_errors():
    with pytest.raises(KnotOrderError):
        make_trapezoidal(("0.4", "0.3", "0.5", "0.6"), (0, 0, 0, 0))
    with pytest.raises(KnotOrderError):
        make_trapezoidal((0, 0, 1, "1.2"), (0, 0, 0, 0))
    with pytest.raises(KnotOrderError):
        make_trapezoidal(("-0.1", 0, 0, 0), (1, 1, 1, 1))


def test_non_strict_downgrades_to_warning():
    with pytest.warns(IfnValidationWarning):
        ifn = make_trapezoidal((0, 0, 1, 1), (1, 1, 1, 1), strict=False)
    assert ifn.mu.q4 == 1


def test_embed_if_value():
    v = embed_if_value("0.2", "0.4")
    assert v.kind is IfnKind.IF_VALUE
    assert v.mu.knots == (F("0.2"),) * 4 and v.nu.knots == (F("0.4"),) * 4
    assert embed_if_value(0, 1).kind is IfnKind.IF_VALUE
    assert embed_if_value(1, 0).kind is IfnKind.IF_VALUE


def test_embed_if_value_equal_degrees_need_sum_at_most_one():
    assert embed_if_value("0.5", "0.5").kind is IfnKind.IF_VALUE
    with pytest.raises(PointwiseConsistencyError):
        embed_if_value("0.7", "0.7")


def test_disjoint_supports_do_not_need_degree_sum_bound():
    # membership 0.7 with nonmembership spread [0.2, 0.6]: sums above 1 are fine
    ifn = embed_ivif(("0.7", "0.7"), ("0.2", "0.6"))
    assert ifn.mu.q1 + ifn.nu.q3 > 1


def test_embed_ivif():
    flat = embed_ivif((0, "0.2"), ("0.2", "0.3"))
    assert flat.kind is IfnKind.IVIF and flat.mu.is_flat and flat.nu.is_flat
    touching = embed_ivif(("0.2", "0.4"), ("0.4", "0.6"))
    assert touching.nu.q1 == touching.mu.q3
    point = embed_ivif(("0.5", "0.5"), ("0.5", "0.5"))
    assert point.mu.is_point


def test_embed_triangular():
    tri = embed_triangular(("0.20", "0.30", "0.50"), ("0.35", "0.55", "0.65"))
    assert tri.kind is IfnKind.TRIANGULAR
    assert tri.mu.knots == (F("0.2"), F("0.3"), F("0.3"), F("0.5"))
    embed_triangular((0, "0.2", "0.4"), ("0.4", "0.45", "0.5"))
    degenerate = embed_triangular(("0.3", "0.3", "0.3"), ("0.3", "0.3", "0.3"))
    assert degenerate.mu.is_point


def test_embeddings_are_sections():
    v = embed_if_value("0.31", "0.62")
    assert (v.mu.q1, v.nu.q1) == (F("0.31"), F("0.62"))
    iv = embed_ivif(("0.1", "0.2"), ("0.3", "0.4"))
    assert (iv.mu.q1, iv.mu.q3, iv.nu.q1, iv.nu.q3) == (
        F("0.1"), F("0.2"), F("0.3"), F("0.4"),
    )
    tri = embed_triangular(("0.1", "0.2", "0.3"), ("0.4", "0.5", "0.6"))
    assert (tri.mu.q1, tri.mu.q2, tri.mu.q4) == (F("0.1"), F("0.2"), F("0.3"))


def test_membership_evaluation():
    a = left_nu_sample()
    assert a.membership_at("0.3") == 1
    assert a.membership_at("0.17") == 0
    assert a.nonmembership_at("0.17") == Fraction(6, 7)
    assert a.membership_at(0) == 0 and a.membership_at(1) == 0
    mid = (F("0.47") + F("0.56")) / 2
    assert a.membership_at(mid) == Fraction(1, 2)


def test_hesitancy_nonnegative_off_touch_points():
    system = load_table2_system()
    grid = [Fraction(k, 64) for k in range(65)]
    for cell in system.cells.values():
        for x in grid:
            m = cell.membership_at(x)
            n = cell.nonmembership_at(x)
            if m == 1 and n == 1:
                continue  # isolated permitted touch of embedded degree values
            assert cell.hesitancy_at(x) >= 0, (cell.text(), x)


def test_pointwise_grid_on_reference_matrix():
    # 1/256-step scan of all 50 reference cells
    system = load_table2_system()
    grid = [Fraction(k, 256) for k in range(257)]
    for cell in system.cells.values():
        for x in grid:
            m = cell.membership_at(x)
            n = cell.nonmembership_at(x)
            assert m + n <= 1 or (m == 1 and n == 1), (cell.text(), x)


def test_reference_matrix_validates_and_mixes_kinds():
    system = load_table2_system()
    kinds = {cell.kind for cell in system.cells.values()}
    assert len(system.cells) == 50
    assert IfnKind.IF_VALUE in kinds and IfnKind.IVIF in kinds
    assert IfnKind.TRAPEZOIDAL in kinds


def test_literal_json_roundtrip():
    for doc in (
        {"ifv": ["0.2", "0.4"]},
        {"ivif": [["0", "0.2"], ["0.2", "0.3"]]},
        {"tri": [["0.1", "0.2", "0.3"], ["0.4", "0.5", "0.6"]]},
        {"mu": ["0.17", "0.3", "0.47", "0.56"], "nu": ["0.05", "0.13", "0.16", "0.23"]},
    ):
        ifn = ifn_from_dict(doc)
        again = ifn_from_dict(ifn_to_dict(ifn))
        assert again == ifn


def test_literal_compact_roundtrip():
    for text in ("<0.2|0.4>", "<0,0.2|0.2,0.3>", "<0.1,0.2,0.3|0.4,0.5,0.6>",
                 "<0.17,0.3,0.47,0.56|0.05,0.13,0.16,0.23>"):
        ifn = ifn_from_compact(text)
        assert ifn_from_compact(ifn_to_compact(ifn)) == ifn


def test_literal_errors():
    with pytest.raises(ParseError):
        ifn_from_dict({"nope": []})
    with pytest.raises(ParseError):
        ifn_from_compact("0.2|0.4")
    with pytest.raises(ParseError):
        ifn_from_compact("<0.2,0.3,0.4,0.5,0.6|0.7>")


def test_sample_curve_contains_knots_sorted_dedup():
    ifn = left_nu_sample()
    rows = sample_curve(ifn, Fraction(1, 4))
    xs = [x for x, _, _ in rows]
    assert xs == sorted(set(xs))
    for knot in ifn.mu.knots + ifn.nu.knots:
        assert knot in xs
    for k in range(5):
        assert Fraction(k, 4) in xs


def test_as_rational_rejects_float():
    with pytest.raises(TypeError):
        as_rational(0.1)


def test_format_round_half_even():
    assert format_rational(F("0.070625"), 5) == "0.07062"
    assert format_rational(F("0.0706375"), 5) == "0.07064"
    assert format_rational(F("-0.5"), 0) == "-0"
    assert format_rational(F("1.5"), 0) == "2"
    assert format_rational(F("0.26125"), 6) == "0.261250"


@given(
    st.integers(min_value=-(10**9), max_value=10**9),
    st.integers(min_value=0, max_value=6),
)
def test_decimal_text_roundtrip(n, places):
    text = str(Fraction(n, 10**places))
    value = as_rational(text)
    assert as_rational(format_rational(value, places)) == value
