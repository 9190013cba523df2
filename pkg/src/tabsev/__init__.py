"""tabsev: severity labelling and prediction for activity-limitation surveys.

The package covers the full pipeline:

* ``tabsev.dataset`` -- schema-driven CSV ingestion, imputation, label
  encoding, train/test/fold splitting, and a seeded synthetic generator.
* ``tabsev.kmodes`` -- K-modes clustering of categorical responses with an
  elbow-curve helper and cluster-to-severity ordering.
* ``tabsev.tensor_core`` -- dense float64 tensors with reverse-mode
  autodiff and the layer primitives the models need.
* ``tabsev.models`` -- Wide & Deep, TabTransformer, and TabNet forwards,
  including TabNet's per-step and aggregate feature masks.
* ``tabsev.metrics`` -- confusion-matrix scores, ROC/AUC, macro/micro
  averaging.
* ``tabsev.trainer`` -- mini-batch RMSprop training with early stopping,
  LR plateau reduction, checkpointing, and K-fold epoch selection.
* ``tabsev.cli`` -- the ``tabsev`` command line entry point.
"""

__version__ = "0.1.0"
