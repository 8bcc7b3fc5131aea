"""Shared fixtures: small fields, catalog algebras and their graphs"""
import pytest

from src.algebra.finite_field import make_field
from src.graphs.comaximal import build_graph
from src.subalgebras.catalog import build
from src.subalgebras.enumeration import enumerate_subalgebras


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def sl2_3(F3):
    return build("sl2", F3)


@pytest.fixture(scope="session")
def sl2_3_inventory(sl2_3):
    return enumerate_subalgebras(sl2_3)


@pytest.fixture(scope="session")
def sl2_3_graph(sl2_3, sl2_3_inventory):
    return build_graph(sl2_3, sl2_3_inventory)


def graph_of(family, field, **params):
    """Algebra, inventory and graph of a catalog family"""
    L = build(family, field, **params)
    inventory = enumerate_subalgebras(L)
    return L, inventory, build_graph(L, inventory)
