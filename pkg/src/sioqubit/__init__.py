"""Bistochastic strictly incoherent operations on one qubit.

Channel validation and classification, Pauli/phase-operator mixture
decompositions, discrete-time relaxing dynamics with closed-form powers,
and Bloch-vector convertibility under stochastic SIOs.
"""

from .channel import (
    ChannelClass,
    KrausChannel,
    TransferParams,
    apply,
    apply_dual,
    builtin,
    classify,
    transfer_params,
)
from .convertibility import (
    ImageRegion,
    convertible_pauli_sio,
    convertible_sio,
    image_region,
)
from .linalg import (
    I2,
    PHASE_S,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    bloch_to_density,
    density_to_bloch,
    trace_distance,
)
from .semigroup import (
    RelaxingReport,
    Trajectory,
    iterate_oracle,
    power_closed_form,
    relaxing_report,
    trajectory,
)
from .typical_form import (
    MixtureDecomposition,
    TypicalForm,
    abcd,
    decompose_theorem1,
    decompose_theorem3,
    synthesize,
    to_kraus,
)

__version__ = "0.1.0"
