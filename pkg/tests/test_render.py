import pytest

from demyanov import RenderSpec, builtin_counterexample, demyanov_convert, render_svg

from support import coll


def test_render_builtin_family_has_four_panels():
    svg = render_svg(builtin_counterexample())
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert svg.count('<g class="panel">') == 4
    assert svg.count("<path") == 4  # three filled triangles and one segment
    assert 'fill="none"' in svg
    assert svg.endswith("</svg>\n")


def test_render_first_iterate_has_twelve_panels():
    svg = render_svg(demyanov_convert(builtin_counterexample()))
    assert svg.count('<g class="panel">') == 12


def test_render_single_point_is_one_disk():
    svg = render_svg(coll(((1, 1),)))
    assert svg.count('<g class="panel">') == 1
    assert svg.count("<circle") == 1
    assert "<path" not in svg


def test_render_is_deterministic():
    omega = demyanov_convert(builtin_counterexample())
    assert render_svg(omega) == render_svg(omega)


def test_render_layout_follows_spec():
    spec = RenderSpec(panel_size=100, margin=10, per_row=3)
    svg = render_svg(builtin_counterexample(), spec)
    assert 'width="300" height="200"' in svg
    assert 'viewBox="0 0 300 200"' in svg


def test_render_style_indices_select_palette_entries():
    spec = RenderSpec(style_indices=(1, 1, 1, 1))
    svg = render_svg(builtin_counterexample(), spec)
    fill, stroke = spec.palette[1]
    assert svg.count(f'stroke="{stroke}"') == 4
    other_fill, other_stroke = spec.palette[0]
    assert f'stroke="{other_stroke}"' not in svg


def test_render_rejects_bad_spec():
    with pytest.raises(ValueError):
        render_svg(builtin_counterexample(), RenderSpec(panel_size=20, margin=10))
    with pytest.raises(ValueError):
        render_svg(builtin_counterexample(), RenderSpec(per_row=0))
