import pytest

from biunary import SearchQuery, enumerate_models


@pytest.fixture(scope="session")
def precat_models():
    """Every precat biunary semigroup of order 1..3."""
    models = []
    for order in (1, 2, 3):
        res = enumerate_models(SearchQuery("semigroup", order,
                                           frozenset({"PRECAT"})))
        assert res.completed
        models.extend(res.models)
    return models


@pytest.fixture(scope="session")
def small_categories():
    """Every category with biaction of order 1..3."""
    models = []
    for order in (1, 2, 3):
        res = enumerate_models(SearchQuery("category", order))
        assert res.completed
        models.extend(res.models)
    return models
