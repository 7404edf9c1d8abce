# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model`
================================================================================

Personality regression: group-aware splitting, Box-Cox label transforms,
linear SVR and feed-forward regressors, model selection, evaluation and
linear Shapley explanations.

**Software and Dependencies:**

* numpy, scipy
* joblib

"""

from ._boxcox import (
    BoxCoxTransform,
    boxcox_apply,
    boxcox_fit,
    boxcox_invert,
    clamp_labels,
    log_likelihood,
)
from ._evaluate import (
    EvalReport,
    evaluate,
    kendall_tau,
    mean_absolute_error,
    pearson_r,
    spearman_rho,
)
from ._explain import Explanation, explain_linear
from ._matrix import as_csr
from ._mlp import MlpConfig, MlpModel, train_mlp
from ._persist import load_model, model_from_dict, model_to_dict, save_model
from ._pipeline import (
    ALGORITHMS,
    FEATURE_KINDS,
    SPACES,
    Candidate,
    DictScaler,
    FeatureConfig,
    FeatureSpace,
    Instance,
    PersonalityModel,
    baseline_reports,
    evaluate_model,
    fit_features,
    fit_model,
    instance_from_document,
    instances_from,
    label_matrix,
    training_fingerprint,
)
from ._select import CandidateScore, Selection, best_score, select_model
from ._split import PART_NAMES, Split, group_shuffle_split
from ._svr import SvrModel, SvrParams, train_svr

__version__ = "0.0.0+auto.0"
