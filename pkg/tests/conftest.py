import pytest

from bentzoo import Field, gbent_from_triple, monomial_involution_triple, nontrivial_hs


@pytest.fixture(scope="session")
def f4():
    return Field(2)


@pytest.fixture(scope="session")
def f8():
    return Field(3)


@pytest.fixture(scope="session")
def f16():
    return Field(4)


@pytest.fixture(scope="session")
def f64():
    return Field(6)


@pytest.fixture(scope="session")
def ex41_parts(f8):
    """The m=3, d=6 involution triple with alphas {a, a^4, a^6}."""
    a = f8.generator
    alphas = [a, f8.pow(a, 4), f8.pow(a, 6)]
    return alphas, monomial_involution_triple(f8, 6, alphas)


@pytest.fixture(scope="session")
def gbent_ex41(f8, ex41_parts):
    _, triple = ex41_parts
    return gbent_from_triple(f8, triple)


@pytest.fixture(scope="session")
def z8bent_ex47(f8, ex41_parts):
    alphas, triple = ex41_parts
    return gbent_from_triple(f8, triple, nontrivial_hs(f8, alphas, 6))
