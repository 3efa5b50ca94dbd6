import pathlib

import pytest

from kgatlas.graph import Graph
from kgatlas.ontology import Ontology, load_ontology
from kgatlas.parser import parse_rdf

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="session")
def data_graph() -> Graph:
    return parse_rdf((FIXTURES / "benghazi.ttl").read_bytes(), format="turtle")


@pytest.fixture(scope="session")
def ontology() -> Ontology:
    return load_ontology(parse_rdf((FIXTURES / "geol-mini.ttl").read_bytes(), format="turtle"))


@pytest.fixture(scope="session")
def example_text() -> str:
    return (FIXTURES / "ex1.txt").read_text(encoding="utf-8")
