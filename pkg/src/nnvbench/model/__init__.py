from nnvbench.model.layers import (
    ActivationKind,
    Activation,
    AvgPool,
    BatchNorm,
    Conv1D,
    Dense,
    LayerNorm,
    MaxPool,
    SllResidual,
    SoftMax,
    ZeroPad,
)
from nnvbench.model.network import Network
from nnvbench.model.serial import load_network, save_network, network_to_text, network_from_text
from nnvbench.model.tensor import Tensor

__all__ = [
    "ActivationKind", "Activation", "AvgPool", "BatchNorm", "Conv1D", "Dense",
    "LayerNorm", "MaxPool", "SllResidual", "SoftMax", "ZeroPad",
    "Network", "Tensor",
    "load_network", "save_network", "network_to_text", "network_from_text",
]
