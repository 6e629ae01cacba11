from nnvbench.emit.bundles import ModelBundle, bundle_by_name
from nnvbench.emit.codegen import EmissionError, emit_instance
from nnvbench.emit.svcomp import emit_corpus_tree, emit_svcomp_metadata, PRP_TEXT

__all__ = [
    "ModelBundle", "bundle_by_name",
    "EmissionError", "emit_instance",
    "emit_corpus_tree", "emit_svcomp_metadata", "PRP_TEXT",
]
