"""Surface grids: evaluation, CSV/JSON emission, round trips, monotonicity."""

import json
import math

import pytest

from insdel_bounds import (
    DomainError,
    SurfaceGrid,
    BoundValue,
    evaluate_surface,
    emit_surface,
    load_surface_csv,
    load_surface_json,
    point_evaluator,
)
from insdel_bounds.surface import CSV_HEADER, surface_to_csv, surface_to_json_obj


class TestEvaluateSurface:
    def test_axes_span_the_domain(self):
        grid = evaluate_surface(5, "inner", 11)
        assert grid.gamma_axis[0] == 0.0 and grid.gamma_axis[-1] == 4.0
        assert grid.delta_axis[0] == 0.0 and grid.delta_axis[-1] == 1 - 1 / 5
        assert grid.rates().shape == (11, 11)

    def test_noiseless_corner_is_one_everywhere(self):
        for source in ("inner", "combined-outer", "interpolated-outer", "linear-outer"):
            grid = evaluate_surface(3, source, 5)
            assert grid.values[0][0].rate == 1.0

    def test_out_of_domain_cells_are_zero_infeasible(self):
        grid = evaluate_surface(3, "insertion-only", 5)
        cell = grid.values[2][1]  # delta > 0 is outside the insertion-only cut
        assert cell.rate == 0.0 and not cell.feasible and math.isnan(cell.raw)

    def test_spoke_surface_defined_on_spokes_only(self):
        grid = evaluate_surface(2, "spoke", 3)  # delta axis: 0, 0.25, 0.5
        assert grid.values[0][0].rate == 1.0
        assert grid.values[1][0].feasible is False  # 0.25 is not a spoke of q=2
        assert grid.values[2][0].rate == 0.0  # delta = 1/2 is the unary spoke

    def test_outer_surfaces_monotone(self):
        for source in ("combined-outer", "interpolated-outer", "linear-outer"):
            grid = evaluate_surface(4, source, 12)
            rates = grid.rates()
            for row in rates:
                for a, b in zip(row, row[1:]):
                    assert b <= a + 1e-9
            for col in rates.T:
                for a, b in zip(col, col[1:]):
                    assert b <= a + 1e-9

    def test_unknown_source(self):
        with pytest.raises(DomainError):
            evaluate_surface(3, "best-bound", 4)
        with pytest.raises(DomainError):
            point_evaluator("nope")

    def test_resolution_validation(self):
        with pytest.raises(DomainError):
            evaluate_surface(3, "inner", 1)

    def test_grid_shape_validation(self):
        with pytest.raises(DomainError):
            SurfaceGrid(
                q=2,
                gamma_axis=(0.0, 1.0),
                delta_axis=(0.0,),
                values=((BoundValue(0.5, True, "inner", 0.5),),),
            )


class TestCsvEmission:
    def test_header_row_order_and_digits(self, tmp_path):
        path = tmp_path / "g.csv"
        grid = emit_surface(3, "combined-outer", 4, "csv", path)
        lines = path.read_text().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + 16
        # row-major over delta then gamma: first four rows share delta=0
        first = [line.split(",") for line in lines[1:5]]
        assert all(row[1] == "0.0" for row in first)
        assert [row[0] for row in first] == [
            "0.0",
            "0.6666666666666666",
            "1.3333333333333333",
            "2.0",
        ]
        for line in lines[1:]:
            rate = line.split(",")[2]
            digits = rate.replace(".", "").replace("-", "").replace("e", "").lstrip("0")
            assert len(digits) <= 12

    def test_roundtrip_is_idempotent(self, tmp_path):
        path = tmp_path / "g.csv"
        emit_surface(4, "combined-outer", 7, "csv", path)
        text = path.read_text()
        loaded = load_surface_csv(path, 4)
        assert surface_to_csv(loaded) == text

    def test_roundtrip_preserves_cells(self, tmp_path):
        path = tmp_path / "g.csv"
        grid = emit_surface(3, "inner", 6, "csv", path)
        loaded = load_surface_csv(path, 3)
        assert loaded.q == 3
        assert len(loaded.gamma_axis) == len(grid.gamma_axis)
        for row, lrow in zip(grid.values, loaded.values):
            for cell, lcell in zip(row, lrow):
                assert lcell.rate == float(f"{cell.rate:.12g}")
                assert lcell.feasible == cell.feasible
                assert lcell.source == cell.source

    def test_rejects_malformed_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n")
        with pytest.raises(DomainError):
            load_surface_csv(path, 2)


class TestJsonEmission:
    def test_schema(self, tmp_path):
        path = tmp_path / "g.json"
        emit_surface(3, "inner", 4, "json", path)
        obj = json.loads(path.read_text())
        assert set(obj) == {"q", "gamma_axis", "delta_axis", "values"}
        assert obj["q"] == 3
        assert len(obj["values"]) == 16
        assert set(obj["values"][0]) == {"gamma", "delta", "rate", "feasible", "source"}

    def test_roundtrip(self, tmp_path):
        path = tmp_path / "g.json"
        grid = emit_surface(5, "linear-outer", 5, "json", path)
        loaded = load_surface_json(path)
        assert loaded.q == 5
        assert surface_to_json_obj(loaded) == json.loads(path.read_text())
        assert loaded.rates().shape == grid.rates().shape

    def test_unknown_format(self, tmp_path):
        with pytest.raises(DomainError):
            emit_surface(3, "inner", 4, "xml", tmp_path / "g.xml")
