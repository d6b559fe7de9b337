"""
Random telegraph noise and amplitude damping channels
"""
from discrete_wigner.channels.kernels import (
    AdParams,
    RtnParams,
    ad_decay,
    classify_ad,
    classify_rtn,
    rtn_kernel,
)
from discrete_wigner.channels.kraus import (
    KrausSet,
    apply_channel,
    channel_kraus,
    identity_kraus,
    kraus_ad,
    kraus_rtn,
    lift_two_qubit,
    make_params,
)
