import xml.etree.ElementTree as ET

import pytest

from molpsens.efficient_set import efficient_chain
from molpsens.svg import FileWriteError, emit_svg, render_svg
from conftest import bundle

NS = "{http://www.w3.org/2000/svg}"


def _parse(text):
    return ET.fromstring(text.split("?>", 1)[1])


def test_example5_svg(ex5, ex5_bundle, tmp_path):
    es = efficient_chain(ex5, ex5_bundle)
    path = emit_svg(ex5, es.cone, es.chain, ex5_bundle, tmp_path / "a.svg")
    root = _parse(path.read_text())
    labels = [t.text for t in root.iter(NS + "text") if t.text.startswith("v")]
    assert labels == [f"v{j}" for j in range(1, 10)]
    assert len([c for c in root.iter(NS + "circle") if c.get("class") == "efficient"]) == 5
    (chain,) = [p for p in root.iter(NS + "polyline") if p.get("class") == "chain"]
    assert len(chain.get("points").split()) == 5
    arrows = [l for l in root.iter(NS + "line")]
    assert len(arrows) == 2


def test_singleton_chain_svg(square):
    b = bundle((1, 1), (1, 1))
    es = efficient_chain(square, b)
    root = _parse(render_svg(square, es.cone, es.chain, b))
    assert len([c for c in root.iter(NS + "circle") if c.get("class") == "efficient"]) == 1
    assert not [p for p in root.iter(NS + "polyline")]


def test_deterministic(ex5, ex5_bundle, tmp_path):
    es = efficient_chain(ex5, ex5_bundle)
    a = emit_svg(ex5, es.cone, es.chain, ex5_bundle, tmp_path / "a.svg").read_bytes()
    b = emit_svg(ex5, es.cone, es.chain, ex5_bundle, tmp_path / "b.svg").read_bytes()
    assert a == b


def test_write_error(ex5, ex5_bundle, tmp_path):
    es = efficient_chain(ex5, ex5_bundle)
    with pytest.raises(FileWriteError):
        emit_svg(ex5, es.cone, es.chain, ex5_bundle, tmp_path / "no" / "x.svg")
