"""Scikit-learn compatible wrappers.

Both estimators take ``X`` of shape ``(n_samples, 2)`` with columns
``[Re, eps]``. Nothing is learned: ``fit`` only validates input and
resolves the method, so the estimators drop into pipelines and
``GridSearchCV`` over ``method``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .analysis import rel_error
from .approx import DEFAULT_METHOD, evaluate_batch, get_method, transform_batch
from .validation import check_flow_array


class WrightTransformer(TransformerMixin, BaseEstimator):
    """Map ``[Re, eps]`` rows to ``[A, B, x, C]`` of the omega form.

    Parameters
    ----------
    method : str, default="Reference"
        Method whose constant set is used. ``"Reference"`` gives the exact
        transformation.
    """

    def __init__(self, method="Reference"):
        self.method = method

    def fit(self, X, y=None):
        X = check_flow_array(X)
        self.method_spec_ = get_method(self.method)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "method_spec_")
        X = check_flow_array(X)
        tp = transform_batch(X[:, 0], X[:, 1], self.method_spec_)
        return np.column_stack(tp)

    def get_feature_names_out(self, input_features=None):
        return np.array(["A", "B", "x", "C"], dtype=object)


class ColebrookFriction(RegressorMixin, BaseEstimator):
    """Darcy friction factor from an explicit approximation.

    Parameters
    ----------
    method : str, default="SR-C-Opt"
        Registry id or equation label, e.g. ``"Eq29"`` or ``"Reference"``.
    output : {"f", "inv_sqrt_f"}, default="f"
        Quantity returned by :meth:`predict`.

    Attributes
    ----------
    method_spec_ : MethodSpec
        The resolved method.
    """

    def __init__(self, method=DEFAULT_METHOD, output="f"):
        self.method = method
        self.output = output

    def fit(self, X, y=None):
        if self.output not in ("f", "inv_sqrt_f"):
            raise ValueError(f"output must be 'f' or 'inv_sqrt_f', got {self.output!r}")
        X = check_flow_array(X)
        self.method_spec_ = get_method(self.method)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "method_spec_")
        res = self.predict_result(X)
        return res.f if self.output == "f" else res.inv_sqrt_f

    def predict_result(self, X):
        """Full :class:`FrictionResult` with ``y`` and the in-domain mask."""
        check_is_fitted(self, "method_spec_")
        X = check_flow_array(X)
        return evaluate_batch(X[:, 0], X[:, 1], self.method_spec_)

    def max_relative_error(self, X, f_ref):
        """Largest ``|delta %|`` of the predictions against ``f_ref``."""
        f = self.predict_result(X).f
        return float(np.max(np.abs(rel_error(np.asarray(f_ref), f))))
