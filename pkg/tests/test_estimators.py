import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from chromroots.census import census
from chromroots.estimators import ChromaticRootFeatures, NonRealRootCertifier, SubgraphCensus, as_graph, check_graphs
from chromroots.graph import RngSeed, complete, cycle, erdos_renyi, petersen
from chromroots.io import write_graph6


def test_input_coercion():
    g = petersen()
    assert as_graph(g) is g
    assert as_graph(write_graph6(g)) == g
    assert as_graph(write_graph6(g).encode()) == g
    assert as_graph(g.to_numpy()) == g
    for bad in (np.ones((2, 3)), np.array([[0, 1], [0, 0]]), np.eye(2), np.array([[0, 2], [2, 0]])):
        with pytest.raises(ValueError):
            as_graph(bad)
    with pytest.raises(ValueError):
        check_graphs([])
    with pytest.raises(ValueError):
        check_graphs(g)


def test_census_transformer():
    gs = [petersen(), complete(5), cycle(5)]
    est = SubgraphCensus()
    X = est.fit_transform(gs)
    assert X.shape == (3, 9) and X.dtype == np.int64
    assert tuple(X[1]) == census(complete(5)).as_tuple()
    assert list(est.get_feature_names_out())[:2] == ["m", "t"]
    with pytest.raises(NotFittedError):
        SubgraphCensus().transform(gs)
    pipe = make_pipeline(SubgraphCensus(), StandardScaler())
    assert pipe.fit_transform(gs).shape == (3, 9)


def test_certifier():
    gs = [erdos_renyi(30, 0.5, RngSeed(1, i)) for i in range(5)] + [complete(6)]
    clf = NonRealRootCertifier().fit(gs)
    pred = clf.predict(gs)
    assert pred.dtype == bool and pred[:5].all() and not pred[5]
    assert clf.decision_function(gs).shape == (6, 2)
    assert clone(clf).get_params() == {"method": "both"}
    quad = NonRealRootCertifier(method="quadratic").fit(gs)
    assert (quad.predict(gs) <= pred).all()
    with pytest.raises(ValueError):
        NonRealRootCertifier(method="sextic").fit(gs)


def test_root_features():
    X = ChromaticRootFeatures().fit_transform([cycle(4), complete(4)])
    assert X[0, 0] == 0.0 and X[0, 1] == pytest.approx(3**0.5 / 2) and X[0, 2] == 2
    assert tuple(X[1]) == (1.0, 0.0, 0.0)
